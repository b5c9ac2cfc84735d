#include "doctest.h"

#include "finsite/finsite.hpp"
#include "fixtures.hpp"
#include "oracles/oracles.hpp"

using namespace finsite;

namespace {

  // Checks the defining equations of a module isomorphism directly.
  bool module_iso(ModulePresheaf const& a, ModulePresheaf const& b, ModuleMorphism const& phi) {
    auto const& k = a.field();
    auto const& c = a.category();
    for (ObjectIndex x = 0; x < c.object_count(); ++x) {
      auto const& p = phi.components.at(x);
      if (p.rows() != b.dim(x) || p.cols() != a.dim(x) || !linalg::is_invertible(k, p)) {
        return false;
      }
      for (std::size_t i = 0; i < a.ring().algebra(x).dim(); ++i) {
        if (linalg::multiply(k, p, a.action(x, i)) != linalg::multiply(k, b.action(x, i), p)) {
          return false;
        }
      }
    }
    for (MorphismIndex f = 0; f < c.morphism_count(); ++f) {
      if (linalg::multiply(k, phi.components[c.dom(f)], a.map(f)) !=
          linalg::multiply(k, b.map(f), phi.components[c.cod(f)])) {
        return false;
      }
    }
    return true;
  }

  bool module_iso(AlgebraModule const& a, AlgebraModule const& b, Matrix const& x) {
    auto const& k = a.field();
    if (x.rows() != b.dim() || x.cols() != a.dim() || !linalg::is_invertible(k, x)) {
      return false;
    }
    for (std::size_t i = 0; i < a.algebra().dim(); ++i) {
      if (linalg::multiply(k, x, a.action(i)) != linalg::multiply(k, b.action(i), x)) {
        return false;
      }
    }
    return true;
  }

  std::size_t total(ModulePresheaf const& m) { return m.underlying().total_dim(); }

}  // namespace

TEST_CASE("zero modules") {
  auto k = Field::prime(2);
  auto r = AlgebraPresheaf::constant(chain_poset(3), FiniteDimAlgebra::ground(k));
  SkewCategoryAlgebra s(r);
  CHECK(theta(zero_module(r), s).dim() == 0);
  AlgebraModule zero(s.algebra(), 0, std::vector<Matrix>(s.dim(), Matrix(0, 0)));
  CHECK(omega(zero, s).underlying().total_dim() == 0);
}

TEST_CASE("theta of a small chain module") {
  auto k = Field::rationals();
  auto c = chain_poset(3);
  auto r = AlgebraPresheaf::constant(c, FiniteDimAlgebra::ground(k));
  std::vector<Matrix> maps(c.morphism_count());
  for (MorphismIndex f = 0; f < c.morphism_count(); ++f) {
    auto d = c.dom(f) == 2 ? 0 : 1;
    auto e = c.cod(f) == 2 ? 0 : 1;
    maps[f] = Matrix::identity(1);
    if (d == 0 || e == 0) {
      maps[f] = Matrix(d, e);
    }
  }
  LinearPresheaf lin(c, k, {1, 1, 0}, maps);
  ModulePresheaf m(r, lin, {{Matrix::identity(1)}, {Matrix::identity(1)}, {Matrix(0, 0)}});
  SkewCategoryAlgebra s(r);
  auto n = theta(m, s);
  REQUIRE(n.dim() == 2);
  auto offsets = theta_offsets(m);
  auto const& af = n.action(s.index(c.morphism_at("f"), 0));
  Matrix expected(2, 2);
  expected(offsets[0], offsets[1]) = 1;
  CHECK(af == expected);
  CHECK(n.action(s.index(c.identity(2), 0)).is_zero());
  CHECK(n.action(s.index(c.morphism_at("g"), 0)).is_zero());
  CHECK(n.action(s.index(c.identity(0), 0))(offsets[0], offsets[0]) == 1);
}

TEST_CASE("omega of the regular module") {
  auto k = Field::prime(3);
  auto r = AlgebraPresheaf::constant(chain_poset(3), FiniteDimAlgebra::ground(k));
  SkewCategoryAlgebra s(r);
  auto m = omega(regular_module(s.algebra()), s);
  CHECK(m.underlying().dims() == std::vector<std::size_t>{3, 2, 1});
}

TEST_CASE("round trips carry valid witnesses") {
  Rng rng(17);
  for (auto k : {Field::prime(2), Field::prime(5)}) {
    for (auto const& r : {fixtures::chain3_dual_numbers(k), fixtures::involution_swap(k)}) {
      SkewCategoryAlgebra s(r);
      for (int i = 0; i < 6; ++i) {
        auto m = random_gauge(random_module_presheaf(r, rng), rng);
        auto n = random_algebra_module(s.algebra(), rng);
        CHECK(theta(m, s).dim() == total(m));
        auto rep = verify_equivalence_roundtrip(m, n, s);
        REQUIRE(rep.ok());
        auto otm = omega(theta(m, s), s);
        CHECK(module_iso(m, otm, rep.omega_theta_witness));
        CHECK(module_iso(otm, m, rep.omega_theta_inverse));
        auto ton = theta(omega(n, s), s);
        CHECK(module_iso(ton, n, rep.theta_omega_witness));
        CHECK(module_iso(n, ton, rep.theta_omega_inverse));
      }
    }
  }
}

TEST_CASE("one-object categories: theta is the identity on spaces") {
  auto k = Field::prime(5);
  auto r = fixtures::c2_swap(k);
  SkewCategoryAlgebra s(r);
  Rng rng(8);
  auto m = random_module_presheaf(r, rng);
  auto n = theta(m, s);
  CHECK(n.dim() == m.dim(0));
  // the identity basis elements act as the R(*)-action
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(n.action(s.index(r.category().identity(0), i)) == m.action(0, i));
  }
}

TEST_CASE("module isomorphism search") {
  auto k = Field::prime(3);
  auto r = fixtures::chain3_dual_numbers(k);
  Rng rng(31);
  auto m = random_module_presheaf(r, rng);
  auto g = random_gauge(m, rng);
  auto phi = find_isomorphism(m, g);
  REQUIRE(phi.has_value());
  CHECK(module_iso(m, g, *phi));
  CHECK_FALSE(find_isomorphism(m, direct_sum(m, regular_module(r))).has_value());
}

TEST_CASE("module axioms are enforced") {
  auto k = Field::prime(2);
  auto a = FiniteDimAlgebra::truncated_polynomial(k, 2);
  Matrix t(1, 1);
  t(0, 0) = 1;  // t acting as 1 contradicts t^2 = 0
  CHECK_THROWS_AS(AlgebraModule(a, 1, {Matrix::identity(1), t}), InvalidData);
}

TEST_CASE("transport along a subcategory topology") {
  auto k = Field::prime(3);
  auto r = fixtures::chain3_dual_numbers(k);
  auto const& c = r.category();
  auto d = FullSubcategory::from_names(c, {"x", "y"});
  Rng rng(12);
  SkewCategoryAlgebra sd(restrict(r, d));
  for (int i = 0; i < 5; ++i) {
    auto m = random_gauge(right_kan_extend(random_module_presheaf(restrict(r, d), rng), r, d), rng);
    auto n = random_algebra_module(sd.algebra(), rng);
    CHECK(m.dim(2) == m.dim(1));
    auto to = transport_to_subcategory(m, d);
    CHECK(to.dim() == m.dim(0) + m.dim(1));
    auto rep = verify_transport_roundtrip(m, n, d);
    REQUIRE(rep.ok);
    auto back = transport_from_subcategory(to, r, d);
    CHECK(module_iso(m, back, rep.forward));
    CHECK(module_iso(back, m, rep.forward_inverse));
    auto there = transport_to_subcategory(transport_from_subcategory(n, r, d), d);
    CHECK(module_iso(n, there, rep.backward));
  }
}

TEST_CASE("transport over the whole category is theta") {
  auto k = Field::prime(2);
  auto r = fixtures::involution_swap(k);
  Rng rng(6);
  auto m = random_module_presheaf(r, rng);
  auto to = transport_to_subcategory(m, FullSubcategory::whole(r.category()));
  auto th = theta(m, SkewCategoryAlgebra(r));
  CHECK(to.actions() == th.actions());
}

TEST_CASE("transport refuses non-sheaves") {
  auto k = Field::prime(2);
  auto c = chain_poset(3);
  auto r = AlgebraPresheaf::constant(c, FiniteDimAlgebra::ground(k));
  auto m = regular_module(r);
  // regular module of a constant ring is constant, hence a sheaf for J^{xy}
  CHECK_NOTHROW(transport_to_subcategory(m, FullSubcategory::from_names(c, {"x", "y"})));
  auto dz = FullSubcategory::from_names(c, {"z"});
  try {
    transport_to_subcategory(m, dz);
    FAIL("expected a precondition error");
  } catch (PreconditionError const& e) {
    CHECK(std::string(e.what()).find("covering sieve") != std::string::npos);
  }
}

TEST_CASE("dense block decomposition") {
  auto k = Field::prime(2);
  auto o3 = orbit_category(FiniteGroup::symmetric(3), SubgroupFamily::nontrivial_p_subgroups, 3);
  auto b = block_decomposition_dense(AlgebraPresheaf::constant(o3.category, FiniteDimAlgebra::ground(k)));
  REQUIRE(b.blocks.size() == 1);
  CHECK(b.total_dim == 2);
  auto n = o3.group.normalizer(o3.subgroups[0]).size();
  CHECK(b.total_dim == n / o3.subgroups[0].size());

  for (std::size_t p : {2, 3, 5}) {
    auto op = orbit_category(FiniteGroup::cyclic(p), SubgroupFamily::nontrivial_p_subgroups, p);
    auto bp = block_decomposition_dense(AlgebraPresheaf::constant(op.category, FiniteDimAlgebra::ground(k)));
    CHECK(bp.blocks.size() == 1);
    CHECK(bp.total_dim == 1);
  }

  auto r = fixtures::involution_swap(k);
  auto bi = block_decomposition_dense(r);
  REQUIRE(bi.blocks.size() == 1);
  CHECK(bi.blocks[0].object == r.category().object_at("x"));
  CHECK(bi.total_dim == 2 * r.algebra(0).dim());

  CHECK_THROWS_AS(block_decomposition_dense(AlgebraPresheaf::constant(idempotent_monoid(),
                                                                      FiniteDimAlgebra::ground(k))),
                  PreconditionError);
}

TEST_CASE("modules to blocks") {
  auto k = Field::prime(2);
  auto r = fixtures::involution_swap(k);
  auto blocks = block_decomposition_dense(r);
  auto d = FullSubcategory::from_names(r.category(), {"x"});
  Rng rng(44);
  for (int i = 0; i < 4; ++i) {
    auto m = right_kan_extend(random_module_presheaf(restrict(r, d), rng), r, d);
    auto mods = transport_to_blocks(m, blocks);
    REQUIRE(mods.size() == 1);
    CHECK(mods[0].dim() == m.dim(0));
  }
}
