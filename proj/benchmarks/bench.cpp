#include <benchmark/benchmark.h>

#include "finsite/finsite.hpp"

using namespace finsite;

namespace {

  void census_chain(benchmark::State& state) {
    auto c = chain_poset(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
      benchmark::DoNotOptimize(enumerate_topologies(c));
    }
  }
  BENCHMARK(census_chain)->DenseRange(2, 5);

  void sheafify_dense(benchmark::State& state) {
    auto c = orbit_category(FiniteGroup::symmetric(3), SubgroupFamily::all).category;
    auto j = dense_topology(c);
    Rng rng(1);
    auto f = random_set_presheaf(c, rng, 3);
    for (auto _ : state) {
      benchmark::DoNotOptimize(sheafify(f, j));
    }
  }
  BENCHMARK(sheafify_dense);

  void sheafify_fixed_points(benchmark::State& state) {
    auto c = orbit_category(FiniteGroup::symmetric(3), SubgroupFamily::all).category;
    Rng rng(1);
    auto f = random_set_presheaf(c, rng, 3);
    for (auto _ : state) {
      benchmark::DoNotOptimize(sheafify_ei_dense(f));
    }
  }
  BENCHMARK(sheafify_fixed_points);

  void skew_algebra(benchmark::State& state) {
    auto r = AlgebraPresheaf::constant(chain_poset(static_cast<std::size_t>(state.range(0))),
                                       FiniteDimAlgebra::truncated_polynomial(Field::prime(5), 2));
    for (auto _ : state) {
      SkewCategoryAlgebra s(r);
      benchmark::DoNotOptimize(s.dim());
    }
  }
  BENCHMARK(skew_algebra)->DenseRange(3, 6);

  void theta_omega(benchmark::State& state) {
    auto k = Field::prime(5);
    auto r = AlgebraPresheaf::constant(example_involution(), FiniteDimAlgebra::product_of_fields(k, 2));
    SkewCategoryAlgebra s(r);
    Rng rng(2);
    auto m = random_module_presheaf(r, rng);
    for (auto _ : state) {
      benchmark::DoNotOptimize(omega(theta(m, s), s));
    }
  }
  BENCHMARK(theta_omega);

}  // namespace

BENCHMARK_MAIN();
