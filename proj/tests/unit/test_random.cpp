#include "doctest.h"

#include "finsite/finsite.hpp"
#include "fixtures.hpp"

using namespace finsite;

TEST_CASE("random generators are seed-deterministic") {
  auto c = example_involution();
  Rng a(5);
  Rng b(5);
  CHECK(random_set_presheaf(c, a) == random_set_presheaf(c, b));
  auto r = fixtures::chain3_dual_numbers(Field::prime(3));
  auto ma = random_module_presheaf(r, a);
  auto mb = random_module_presheaf(r, b);
  CHECK(ma.underlying() == mb.underlying());
  CHECK(ma.actions() == mb.actions());
}

TEST_CASE("random module presheaves respect the size bound") {
  Rng rng(3);
  for (auto k : {Field::prime(2), Field::prime(5)}) {
    for (auto const& r : {fixtures::chain3_dual_numbers(k), fixtures::involution_swap(k)}) {
      std::size_t nonzero = 0;
      for (int i = 0; i < 20; ++i) {
        auto m = random_module_presheaf(r, rng, 3);
        for (auto d : m.underlying().dims()) {
          CHECK(d <= 3);
        }
        nonzero += m.underlying().total_dim() > 0;
      }
      CHECK(nonzero > 10);
    }
  }
}

TEST_CASE("random algebra modules and gauges") {
  Rng rng(9);
  auto k = Field::prime(5);
  SkewCategoryAlgebra s(fixtures::involution_swap(k));
  for (int i = 0; i < 10; ++i) {
    auto n = random_algebra_module(s.algebra(), rng, 6);
    CHECK(n.dim() <= 6);
    auto g = random_gauge(n, rng);
    CHECK(find_isomorphism(n, g).has_value());
  }
  auto m = random_invertible(k, 4, rng);
  CHECK(linalg::is_invertible(k, m));
}

TEST_CASE("random linear presheaves") {
  Rng rng(12);
  auto c = chain_poset(3);
  for (int i = 0; i < 10; ++i) {
    auto f = random_linear_presheaf(c, Field::prime(2), rng, 2);
    for (auto d : f.dims()) {
      CHECK(d <= 2);
    }
  }
}
