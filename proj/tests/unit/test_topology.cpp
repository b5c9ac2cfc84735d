#include "doctest.h"

#include <algorithm>
#include <set>

#include "finsite/finsite.hpp"
#include "fixtures.hpp"
#include "oracles/oracles.hpp"

using namespace finsite;
using fixtures::sieve_of;

namespace {

  std::set<oracle::Covering> as_set(std::vector<GrothendieckTopology> const& ts) {
    std::set<oracle::Covering> out;
    for (auto const& t : ts) {
      out.insert(oracle::to_covering(t));
    }
    return out;
  }

  std::vector<FiniteCategory> small_gallery() {
    return {chain_poset(1),
            chain_poset(2),
            chain_poset(3),
            chain_poset(4),
            example_involution(),
            group_category(FiniteGroup::cyclic(2)),
            group_category(FiniteGroup::symmetric(3)),
            orbit_category(FiniteGroup::cyclic(2), SubgroupFamily::all).category,
            idempotent_monoid(),
            idempotent_completion()};
  }

}  // namespace

TEST_CASE("sieves agree with a subset scan") {
  auto c = chain_poset(3);
  CHECK(sieves_on(c, c.object_at("z")).size() == 4);
  CHECK(sieves_on(c, c.object_at("x")).size() == 2);
  CHECK(sieves_on(group_category(FiniteGroup::cyclic(2)), 0).size() == 2);
  for (auto const& cat : small_gallery()) {
    for (ObjectIndex x = 0; x < cat.object_count(); ++x) {
      std::set<oracle::MorphSet> got;
      for (auto const& s : sieves_on(cat, x)) {
        got.insert(s.members());
      }
      CHECK(got == oracle::sieves(cat, x));
    }
  }
}

TEST_CASE("sieve formatting and generation") {
  auto c = chain_poset(3);
  auto z = c.object_at("z");
  CHECK(format_sieve(c, maximal_sieve(c, z)) == "Hom(-,z)");
  CHECK(format_sieve(c, empty_sieve(c, z)) == "{}");
  CHECK(format_sieve(c, sieve_of(c, "z", {"g", "gf"})) == "{g,gf}");
  std::vector<MorphismIndex> gens{c.morphism_at("g")};
  CHECK(generated_sieve(c, z, gens) == sieve_of(c, "z", {"g", "gf"}));
  CHECK(is_sieve(c, z, sieve_of(c, "z", {"gf"}).bits() | sieve_of(c, "z", {"g", "gf"}).bits()));
  boost::dynamic_bitset<> only_g(c.morphism_count());
  only_g.set(c.morphism_at("g"));
  CHECK_FALSE(is_sieve(c, z, only_g));
}

TEST_CASE("pullback sieves") {
  auto c = chain_poset(3);
  auto s = sieve_of(c, "z", {"g", "gf"});
  CHECK(pullback_sieve(c, s, c.identity(c.object_at("z"))) == s);
  CHECK(pullback_sieve(c, s, c.morphism_at("g")) == maximal_sieve(c, c.object_at("y")));
  CHECK(pullback_sieve(c, empty_sieve(c, 2), c.morphism_at("gf")).empty());
  CHECK(pullback_sieve(c, sieve_of(c, "z", {"gf"}), c.morphism_at("g")) == sieve_of(c, "y", {"f"}));
}

TEST_CASE("minimal sieve rows generate topologies") {
  auto c = chain_poset(3);
  auto max = [&](char o) { return maximal_sieve(c, c.object_at(std::string(1, o))); };
  auto none = [&](char o) { return empty_sieve(c, c.object_at(std::string(1, o))); };
  std::vector<std::vector<Sieve>> rows{
      {max('x'), max('y'), max('z')},
      {max('x'), sieve_of(c, "y", {"f"}), sieve_of(c, "z", {"gf"})},
      {none('x'), max('y'), sieve_of(c, "z", {"g", "gf"})},
      {none('x'), none('y'), max('z')},
      {max('x'), max('y'), sieve_of(c, "z", {"g", "gf"})},
      {max('x'), sieve_of(c, "y", {"f"}), max('z')},
      {none('x'), max('y'), max('z')},
      {none('x'), none('y'), none('z')},
  };
  for (auto const& row : rows) {
    auto j = topology_from_minimal(c, row);
    CHECK(check_topology(c, j.covering()).ok());
    CHECK(oracle::is_topology(c, oracle::to_covering(j)));
  }
}

TEST_CASE("axiom violations are named") {
  auto c = chain_poset(3);
  auto j = maximal_topology(c).covering();
  SUBCASE("maximal sieve missing") {
    auto& at_x = j[c.object_at("x")];
    at_x.erase(std::find(at_x.begin(), at_x.end(), maximal_sieve(c, c.object_at("x"))));
    auto report = check_topology(c, j);
    REQUIRE_FALSE(report.ok());
    CHECK(report.violations.front().axiom == 1);
  }
  SUBCASE("a small sieve on z without the matching sieve on y") {
    std::vector<std::vector<Sieve>> cov{
        {maximal_sieve(c, 0)},
        {maximal_sieve(c, 1)},
        {sieve_of(c, "z", {"gf"}), sieve_of(c, "z", {"g", "gf"}), maximal_sieve(c, 2)}};
    auto report = check_topology(c, cov);
    REQUIRE_FALSE(report.ok());
    bool cites = false;
    for (auto const& v : report.violations) {
      cites = cites || v.axiom == 2 || v.axiom == 3;
    }
    CHECK(cites);
    CHECK_THROWS_AS(make_topology(c, cov), InvalidData);
    CHECK_FALSE(oracle::is_topology(c, {{maximal_sieve(c, 0).members()},
                                        {maximal_sieve(c, 1).members()},
                                        {sieve_of(c, "z", {"gf"}).members(), sieve_of(c, "z", {"g", "gf"}).members(),
                                         maximal_sieve(c, 2).members()}}));
  }
}

TEST_CASE("census counts") {
  CHECK(enumerate_topologies(chain_poset(3)).size() == 8);
  CHECK(enumerate_topologies(example_involution()).size() == 4);
  CHECK(enumerate_topologies(group_category(FiniteGroup::symmetric(3))).size() == 2);
}

TEST_CASE("census agrees with the power-set oracle") {
  for (auto const& cat : small_gallery()) {
    auto got = enumerate_topologies(cat);
    auto expected = oracle::topologies(cat);
    CHECK(got.size() == expected.size());
    CHECK(as_set(got) == std::set<oracle::Covering>(expected.begin(), expected.end()));
  }
}

TEST_CASE("census guard") {
  CHECK_THROWS_AS(enumerate_topologies(chain_poset(3), 4), SearchSpaceTooLarge);
}

TEST_CASE("census size matches strictly full Karoubian subcategories") {
  for (auto const& cat : small_gallery()) {
    if (!is_karoubian(cat)) {
      continue;
    }
    CHECK(enumerate_topologies(cat).size() == strictly_full_karoubian_subcategories(cat).size());
  }
}

TEST_CASE("subcategory topologies") {
  auto c = chain_poset(3);
  auto jxy = subcategory_topology(FullSubcategory::from_names(c, {"x", "y"}));
  CHECK(minimal_covering_sieve(jxy, 0) == maximal_sieve(c, 0));
  CHECK(minimal_covering_sieve(jxy, 1) == maximal_sieve(c, 1));
  CHECK(minimal_covering_sieve(jxy, 2) == sieve_of(c, "z", {"g", "gf"}));
  CHECK(subcategory_topology(FullSubcategory::whole(c)) == minimal_topology(c));
  CHECK(subcategory_topology(FullSubcategory::empty(c)) == maximal_topology(c));
  CHECK(minimal_covering_sieve(subcategory_topology(FullSubcategory::from_names(c, {"x"})), 2) ==
        sieve_of(c, "z", {"gf"}));
  CHECK(minimal_covering_sieve(subcategory_topology(FullSubcategory::from_names(c, {"y", "z"})), 0).empty());
  for (ObjectIndex x = 0; x < 3; ++x) {
    CHECK(minimal_covering_sieve(minimal_topology(c), x) == maximal_sieve(c, x));
  }

  for (auto const& cat : small_gallery()) {
    for (auto const& d : strictly_full_karoubian_subcategories(cat)) {
      CHECK(oracle::to_covering(subcategory_topology(d)) == oracle::subcategory_covering(cat, d.objects()));
    }
  }
}

TEST_CASE("non strictly full subcategories are refused") {
  auto o = orbit_category(FiniteGroup::symmetric(3), SubgroupFamily::all);
  // two conjugate order-2 subgroups give isomorphic objects
  std::vector<ObjectIndex> one;
  for (ObjectIndex x = 0; x < o.category.object_count(); ++x) {
    if (o.subgroups[x].size() == 2) {
      one.push_back(x);
      break;
    }
  }
  CHECK_THROWS_AS(subcategory_topology(FullSubcategory(o.category, one)), PreconditionError);
}

TEST_CASE("dense topologies") {
  auto c = chain_poset(3);
  CHECK(dense_topology(c) == subcategory_topology(FullSubcategory::from_names(c, {"x"})));
  auto g = group_category(FiniteGroup::symmetric(3));
  CHECK(dense_topology(g) == minimal_topology(g));
  for (auto const& cat : small_gallery()) {
    if (is_ei(cat)) {
      CHECK(dense_topology(cat) == subcategory_topology(iso_class_poset(cat).minimal_subcategory()));
    }
  }
}

TEST_CASE("classification") {
  auto c = chain_poset(3);
  auto yz = FullSubcategory::from_names(c, {"y", "z"});
  CHECK(classify_topology(subcategory_topology(yz)) == yz);
  CHECK(classify_topology(minimal_topology(c)) == FullSubcategory::whole(c));
  CHECK(topology_label(yz) == "J^yz");
  CHECK(topology_label(FullSubcategory::empty(c)) == "J^{}");

  auto m = idempotent_monoid();
  std::size_t unclassified = 0;
  for (auto const& j : enumerate_topologies(m)) {
    try {
      classify_topology(j);
    } catch (Error const&) {
      ++unclassified;
    }
  }
  CHECK(unclassified > 0);
}

TEST_CASE("finest topology for a presheaf") {
  auto c = chain_poset(3);
  CHECK(finest_topology_for(Presheaf(terminal_presheaf(c))) == maximal_topology(c));

  auto f = fixtures::set_presheaf(c, {{"a"}, {"a"}, {"a", "b"}}, {{"g", {0, 0}}, {"gf", {0, 0}}});
  auto finest = finest_topology_for(Presheaf(f));
  CHECK(minimal_topology(c).is_contained_in(finest));
  CHECK_FALSE(subcategory_topology(FullSubcategory::from_names(c, {"x", "y"})).is_contained_in(finest));
  // the largest of the topologies the oracle accepts
  std::vector<oracle::Covering> sheafy;
  for (auto const& j : oracle::topologies(c)) {
    if (oracle::is_sheaf(f, j)) {
      sheafy.push_back(j);
    }
  }
  auto finest_cov = oracle::to_covering(finest);
  for (auto const& j : sheafy) {
    for (ObjectIndex x = 0; x < 3; ++x) {
      for (auto const& s : j[x]) {
        CHECK(finest_cov[x].count(s) == 1);
      }
    }
  }
  CHECK(std::find(sheafy.begin(), sheafy.end(), finest_cov) != sheafy.end());
}
