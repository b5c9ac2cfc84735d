#include "doctest.h"

#include "finsite/finsite.hpp"
#include "fixtures.hpp"
#include "oracles/oracles.hpp"

using namespace finsite;
using fixtures::set_presheaf;
using fixtures::sieve_of;

namespace {

  bool isomorphic_by_witness(SetPresheaf const& a, SetPresheaf const& b) {
    auto eta = find_isomorphism(a, b);
    return eta.has_value() && oracle::verify_set_iso(a, b, *eta);
  }

  FullSubcategory sub(FiniteCategory const& c, std::vector<std::string> const& names) {
    return FullSubcategory::from_names(c, names);
  }

}  // namespace

TEST_CASE("matching families") {
  auto c = chain_poset(3);
  auto f = set_presheaf(c, {{"a", "b"}, {"p", "q", "r"}, {"s"}}, {{"f", {0, 1, 1}}, {"g", {0}}, {"gf", {0}}});
  CHECK(matching_families(f, maximal_sieve(c, 1)).families.size() == 3);
  CHECK(matching_families(f, empty_sieve(c, 2)).families.size() == 1);

  auto hy = representable(c, c.object_at("y"));
  auto s = sieve_of(c, "z", {"g", "gf"});
  auto got = matching_families(hy, s);
  auto expected = oracle::families(hy, s.members());
  CHECK(got.members == s.members());
  CHECK(got.families == expected);

  auto lin = constant_presheaf(c, Field::prime(3), 2);
  CHECK(matching_families(lin, empty_sieve(c, 2)).basis.cols() == 0);
  CHECK(matching_families(lin, maximal_sieve(c, 2)).basis.cols() == 2);
}

TEST_CASE("sheaf condition") {
  auto c = chain_poset(3);
  Rng rng(7);
  for (int i = 0; i < 10; ++i) {
    CHECK(is_sheaf(Presheaf(random_set_presheaf(c, rng)), minimal_topology(c)));
  }
  // F(y) = F(z), F(g) = Id
  auto f = set_presheaf(c, {{"a", "b"}, {"p", "q", "r"}, {"p", "q", "r"}}, {{"f", {0, 1, 1}}, {"gf", {0, 1, 1}}});
  auto jxy = subcategory_topology(sub(c, {"x", "y"}));
  CHECK(is_sheaf(Presheaf(f), jxy));
  CHECK(oracle::is_sheaf(f, oracle::to_covering(jxy)));

  CHECK(is_sheaf(Presheaf(terminal_presheaf(c)), maximal_topology(c)));
  auto two = constant_presheaf(c, 2);
  auto check = check_sheaf(two, maximal_topology(c));
  CHECK_FALSE(check.sheaf);
  CHECK(check.failing.has_value());
}

TEST_CASE("sheaf check agrees with the oracle on every chain3 topology") {
  auto c = chain_poset(3);
  Rng rng(11);
  auto tops = enumerate_topologies(c);
  for (int i = 0; i < 15; ++i) {
    auto f = random_set_presheaf(c, rng);
    for (auto const& j : tops) {
      CHECK(check_sheaf(f, j).sheaf == oracle::is_sheaf(f, oracle::to_covering(j)));
    }
  }
}

TEST_CASE("half-sheafification") {
  auto c = chain_poset(3);
  auto jxy = subcategory_topology(sub(c, {"x", "y"}));
  auto sheaf = set_presheaf(c, {{"a"}, {"p", "q"}, {"p", "q"}}, {{"f", {0, 0}}, {"gf", {0, 0}}});
  CHECK(isomorphic_by_witness(half_sheafify(sheaf, jxy), sheaf));

  // upper row of the chain3 diagram: F(z) -> F(y) -> F(x)
  auto upper = set_presheaf(c, {{"a", "b"}, {"p", "q", "r"}, {"s"}}, {{"f", {0, 1, 1}}, {"g", {0}}, {"gf", {0}}});
  auto dagger = half_sheafify(upper, jxy);
  CHECK(dagger.size(2) == 3);
  CHECK(dagger.size(1) == 3);
  CHECK(dagger.size(0) == 2);
  auto g = dagger.map(c.morphism_at("g"));
  CHECK(std::set<std::size_t>(g.begin(), g.end()).size() == 3);
  CHECK(isomorphic_by_witness(dagger, oracle::colimit_half_sheafify(upper, oracle::to_covering(jxy))));
}

TEST_CASE("half-sheafification matches the colimit oracle") {
  Rng rng(3);
  for (auto const& c : {chain_poset(3), example_involution(), idempotent_completion()}) {
    for (auto const& j : enumerate_topologies(c)) {
      for (int i = 0; i < 4; ++i) {
        auto f = random_set_presheaf(c, rng);
        auto mine = half_sheafify(f, j);
        auto theirs = oracle::colimit_half_sheafify(f, oracle::to_covering(j));
        CHECK(isomorphic_by_witness(mine, theirs));
        auto unit = half_sheafification_unit(f, j);
        CHECK(is_natural(f, mine, unit));
      }
    }
  }
}

TEST_CASE("sheafification produces sheaves") {
  auto c = chain_poset(3);
  Rng rng(5);
  auto k = Field::prime(2);
  for (auto const& j : enumerate_topologies(c)) {
    for (int i = 0; i < 3; ++i) {
      auto f = random_linear_presheaf(c, k, rng, 2);
      auto fa = sheafify(f, j);
      CHECK(check_sheaf(fa, j).sheaf);
      CHECK(oracle::is_sheaf(oracle::points(fa), oracle::to_covering(j)));
      CHECK(find_isomorphism(sheafify(fa, j), fa).has_value());
    }
    auto s = random_set_presheaf(c, rng);
    CHECK(oracle::is_sheaf(sheafify(s, j), oracle::to_covering(j)));
  }
}

TEST_CASE("linear sheaf check agrees with the point oracle") {
  Rng rng(23);
  auto k = Field::prime(2);
  for (auto const& c : {chain_poset(3), example_involution()}) {
    auto tops = enumerate_topologies(c);
    for (int i = 0; i < 8; ++i) {
      auto f = random_linear_presheaf(c, k, rng, 2);
      for (auto const& j : tops) {
        CHECK(check_sheaf(f, j).sheaf == oracle::is_sheaf(oracle::points(f), oracle::to_covering(j)));
      }
    }
  }
}

TEST_CASE("dense sheafification by fixed points") {
  auto c = example_involution();
  // F(x) = {a, b} swapped by h
  auto f = set_presheaf(c, {{"a", "b"}, {"p"}}, {{"h", {1, 0}}, {"f", {0}}, {"g", {1}}});
  auto fa = sheafify_ei_dense(f);
  CHECK(fa.size(c.object_at("y")) == 2);
  CHECK(isomorphic_by_witness(fa, sheafify(f, dense_topology(c))));

  auto g = group_category(FiniteGroup::symmetric(3));
  Rng rng(9);
  auto s = random_set_presheaf(g, rng);
  CHECK(isomorphic_by_witness(sheafify_ei_dense(s), s));
  CHECK_THROWS_AS(sheafify_ei_dense(terminal_presheaf(idempotent_monoid())), PreconditionError);
}

TEST_CASE("restriction") {
  auto c = chain_poset(3);
  Rng rng(1);
  auto f = random_set_presheaf(c, rng);
  CHECK(restrict(f, FullSubcategory::whole(c)) == f);
  auto r = restrict(f, sub(c, {"x", "y"}));
  CHECK(r.category().object_count() == 2);
  CHECK(r.elements(0) == f.elements(0));
  CHECK(r.elements(1) == f.elements(1));
  CHECK(r.map(r.category().morphism_at("f")) == f.map(c.morphism_at("f")));
}

TEST_CASE("right Kan extension") {
  auto c = chain_poset(3);
  Rng rng(2);
  auto whole = FullSubcategory::whole(c);
  auto f = random_set_presheaf(c, rng);
  CHECK(isomorphic_by_witness(right_kan_extend(f, whole), f));

  auto dx = sub(c, {"x"});
  auto g = set_presheaf(dx.category(), {{"a", "b", "c"}}, {});
  auto rk = right_kan_extend(g, dx);
  for (ObjectIndex x = 0; x < 3; ++x) {
    CHECK(rk.size(x) == 3);
  }
  for (MorphismIndex m = 0; m < c.morphism_count(); ++m) {
    auto const& map = rk.map(m);
    CHECK(std::set<std::size_t>(map.begin(), map.end()).size() == 3);
  }
  CHECK(oracle::is_sheaf(rk, oracle::to_covering(subcategory_topology(dx))));

  for (auto const& names : std::vector<std::vector<std::string>>{{"x"}, {"x", "y"}, {"y"}, {"x", "z"}}) {
    auto d = sub(c, names);
    for (int i = 0; i < 5; ++i) {
      auto h = random_set_presheaf(d.category(), rng);
      auto ext = right_kan_extend(h, d);
      CHECK(oracle::verify_set_iso(restrict(ext, d), h, kan_counit(h, d)));
      CHECK(oracle::is_sheaf(ext, oracle::to_covering(subcategory_topology(d))));
    }
  }
}

TEST_CASE("extension by default") {
  auto c = chain_poset(3);
  Rng rng(4);
  auto f = random_set_presheaf(c, rng);
  CHECK(isomorphic_by_witness(extend_by_default(f, FullSubcategory::whole(c)), f));

  auto dx = sub(c, {"x"});
  auto g = set_presheaf(dx.category(), {{"a", "b"}}, {});
  auto ext = extend_by_default(g, dx);
  CHECK(ext.size(1) == 0);
  CHECK(isomorphic_by_witness(sheafify(ext, subcategory_topology(dx)), right_kan_extend(g, dx)));

  auto inv = example_involution();
  auto ix = sub(inv, {"x"});
  auto swap = set_presheaf(ix.category(), {{"a", "b"}}, {{"h", {1, 0}}});
  auto sw = extend_by_default(swap, ix);
  auto fa = sheafify(sw, dense_topology(inv));
  CHECK(fa.size(inv.object_at("y")) == 2);
  CHECK(isomorphic_by_witness(sheafify_ei_dense(sw), fa));
}
