#include "finsite/catalog.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "finsite/errors.hpp"

namespace finsite {

  FiniteCategory chain_poset(std::size_t n) {
    if (n == 0) {
      throw InvalidData("chain_poset needs at least one object");
    }
    std::vector<std::string> obj;
    for (std::size_t i = 0; i < n; ++i) {
      obj.push_back(n <= 3 ? std::string(1, static_cast<char>('x' + i)) : "x" + std::to_string(i + 1));
    }
    // Arrow i -> i+1 gets letter f, g, h, ... when there are few enough of
    // them, otherwise a numbered name.
    std::vector<std::string> step;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      step.push_back(n - 1 <= 20 ? std::string(1, static_cast<char>('f' + i)) : "a" + std::to_string(i + 1) + "_");
    }
    auto arrow = [&](std::size_t i, std::size_t j) {
      if (i == j) {
        return "1" + obj[i];
      }
      std::string s;
      for (std::size_t k = j; k-- > i;) {
        s += step[k];
      }
      return s;
    };

    RawCategory raw;
    raw.objects = obj;
    for (std::size_t len = 0; len < n; ++len) {
      for (std::size_t i = 0; i + len < n; ++i) {
        raw.morphisms.push_back({arrow(i, i + len), obj[i], obj[i + len]});
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      raw.identities.emplace_back(obj[i], arrow(i, i));
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        for (std::size_t k = j; k < n; ++k) {
          raw.compose.push_back({arrow(j, k), arrow(i, j), arrow(i, k)});
        }
      }
    }
    return validate_category(raw);
  }

  FiniteCategory example_involution() {
    RawCategory raw;
    raw.objects = {"x", "y"};
    raw.morphisms = {{"1x", "x", "x"}, {"h", "x", "x"}, {"1y", "y", "y"}, {"f", "x", "y"}, {"g", "x", "y"}};
    raw.identities = {{"x", "1x"}, {"y", "1y"}};
    raw.compose = {
        {"1x", "1x", "1x"}, {"1x", "h", "h"}, {"h", "1x", "h"}, {"h", "h", "1x"},
        {"1y", "1y", "1y"}, {"1y", "f", "f"}, {"1y", "g", "g"},
        {"f", "1x", "f"},   {"g", "1x", "g"}, {"f", "h", "g"},  {"g", "h", "f"},
    };
    return validate_category(raw);
  }

  FiniteCategory group_category(FiniteGroup const& g) {
    RawCategory raw;
    raw.objects = {"*"};
    for (GroupElement a = 0; a < g.order(); ++a) {
      raw.morphisms.push_back({g.name(a), "*", "*"});
    }
    raw.identities = {{"*", g.name(g.identity())}};
    for (GroupElement a = 0; a < g.order(); ++a) {
      for (GroupElement b = 0; b < g.order(); ++b) {
        raw.compose.push_back({g.name(a), g.name(b), g.name(g.multiply(a, b))});
      }
    }
    return validate_category(raw);
  }

  FiniteCategory idempotent_monoid() {
    RawCategory raw;
    raw.objects = {"*"};
    raw.morphisms = {{"1", "*", "*"}, {"e", "*", "*"}};
    raw.identities = {{"*", "1"}};
    raw.compose = {{"1", "1", "1"}, {"1", "e", "e"}, {"e", "1", "e"}, {"e", "e", "e"}};
    return validate_category(raw);
  }

  FiniteCategory idempotent_completion() {
    RawCategory raw;
    raw.objects = {"a", "b"};
    raw.morphisms = {{"1a", "a", "a"}, {"e", "a", "a"}, {"1b", "b", "b"}, {"r", "a", "b"}, {"s", "b", "a"}};
    raw.identities = {{"a", "1a"}, {"b", "1b"}};
    // Composites with an identity are listed in full; the rest follow from
    // e = s r and r s = 1b.
    std::vector<std::pair<std::string, std::string>> ends = {
        {"1a", "a"}, {"e", "a"}, {"1b", "b"}, {"r", "a"}, {"s", "b"}};
    std::map<std::pair<std::string, std::string>, std::string> table = {
        {{"e", "e"}, "e"}, {{"r", "e"}, "r"}, {{"e", "s"}, "s"}, {{"s", "r"}, "e"}, {{"r", "s"}, "1b"}};
    for (auto const& m : raw.morphisms) {
      for (auto const& id : {"1a", "1b"}) {
        std::string obj = id == std::string("1a") ? "a" : "b";
        if (m.dom == obj) {
          raw.compose.push_back({m.id, id, m.id});
        }
        if (m.cod == obj && m.id != id) {
          raw.compose.push_back({id, m.id, m.id});
        }
      }
    }
    for (auto const& [gf, v] : table) {
      raw.compose.push_back({gf.first, gf.second, v});
    }
    return validate_category(raw);
  }

  std::vector<std::string> subgroup_labels(FiniteGroup const& g, std::vector<Subgroup> const& subgroups) {
    auto all = all_subgroups(g);
    std::map<Subgroup, std::string> names;
    std::map<std::size_t, std::size_t> seen;
    for (auto const& h : all) {
      if (h.size() == 1) {
        names[h] = "1";
      } else if (h.size() == g.order()) {
        names[h] = "G";
      } else {
        names[h] = "H" + std::to_string(h.size()) + "_" + std::to_string(seen[h.size()]++);
      }
    }
    std::vector<std::string> out;
    for (auto const& h : subgroups) {
      out.push_back(names.at(h));
    }
    return out;
  }

  OrbitCategory orbit_category(FiniteGroup const& g, std::function<bool(Subgroup const&)> const& keep) {
    OrbitCategory out{g, FiniteCategory(), {}, {}, {}};
    for (auto const& h : all_subgroups(g)) {
      if (keep(h)) {
        out.subgroups.push_back(h);
      }
    }
    for (auto const& h : out.subgroups) {
      for (GroupElement x = 0; x < g.order(); ++x) {
        auto c = g.conjugate(h, x);
        if (std::find(out.subgroups.begin(), out.subgroups.end(), c) == out.subgroups.end()) {
          out.warnings.push_back("subgroup family is not closed under conjugation");
          break;
        }
      }
      if (!out.warnings.empty()) {
        break;
      }
    }

    auto labels = subgroup_labels(g, out.subgroups);
    std::size_t const n = out.subgroups.size();
    auto contains = [](Subgroup const& big, Subgroup const& small) {
      return std::includes(big.begin(), big.end(), small.begin(), small.end());
    };
    auto coset = [&](GroupElement x, Subgroup const& k) {
      Subgroup c;
      for (auto y : k) {
        c.push_back(g.multiply(x, y));
      }
      std::sort(c.begin(), c.end());
      return c;
    };

    RawCategory raw;
    for (auto const& l : labels) {
      raw.objects.push_back("G/" + l);
    }
    // hom[i][j] lists the cosets inducing maps G/H_i -> G/H_j.
    std::vector<std::vector<std::vector<Subgroup>>> hom(n, std::vector<std::vector<Subgroup>>(n));
    std::map<std::tuple<std::size_t, std::size_t, Subgroup>, std::string> name_of;
    for (std::size_t len = 0; len < 2; ++len) {
      // Identities first so that they lead every object's list.
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if ((len == 0) != (i == j)) {
            continue;
          }
          for (GroupElement x = 0; x < g.order(); ++x) {
            if (!contains(out.subgroups[j], g.conjugate(out.subgroups[i], x))) {
              continue;
            }
            auto c = coset(x, out.subgroups[j]);
            if (std::find(hom[i][j].begin(), hom[i][j].end(), c) != hom[i][j].end()) {
              continue;
            }
            hom[i][j].push_back(c);
          }
          std::sort(hom[i][j].begin(), hom[i][j].end(), [&](auto const& a, auto const& b) {
            // The identity coset (the subgroup itself) first.
            bool ia = std::binary_search(a.begin(), a.end(), g.identity());
            bool ib = std::binary_search(b.begin(), b.end(), g.identity());
            return ia != ib ? ia : a < b;
          });
          for (auto const& c : hom[i][j]) {
            std::string id = "c_" + g.name(c.front()) + ":" + labels[i] + "->" + labels[j];
            name_of[{i, j, c}] = id;
            raw.morphisms.push_back({id, raw.objects[i], raw.objects[j]});
            out.cosets.push_back(c);
          }
        }
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      raw.identities.emplace_back(raw.objects[i], name_of.at({i, i, out.subgroups[i]}));
    }
    // c_{g'} : G/K -> G/L after c_g : G/H -> G/K is c_{g g'}.
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t l = 0; l < n; ++l) {
          for (auto const& c1 : hom[i][j]) {
            for (auto const& c2 : hom[j][l]) {
              auto c = coset(g.multiply(c1.front(), c2.front()), out.subgroups[l]);
              raw.compose.push_back({name_of.at({j, l, c2}), name_of.at({i, j, c1}), name_of.at({i, l, c})});
            }
          }
        }
      }
    }
    out.category = validate_category(raw);
    // Morphism order in the category follows raw.morphisms, as does cosets.
    return out;
  }

  OrbitCategory orbit_category(FiniteGroup const& g, SubgroupFamily family, std::size_t p) {
    switch (family) {
      case SubgroupFamily::all:
        return orbit_category(g, [](Subgroup const&) { return true; });
      case SubgroupFamily::p_subgroups:
        return orbit_category(g, [p](Subgroup const& h) { return is_p_subgroup(h, p); });
      case SubgroupFamily::nontrivial_p_subgroups:
        return orbit_category(g, [p](Subgroup const& h) { return h.size() > 1 && is_p_subgroup(h, p); });
    }
    throw PreconditionError("unknown subgroup family");
  }

  FiniteCategory gallery_category(std::string_view name, GalleryOptions const& options) {
    if (name.size() == 6 && name.substr(0, 5) == "chain" && name[5] >= '1' && name[5] <= '9') {
      return chain_poset(static_cast<std::size_t>(name[5] - '0'));
    }
    if (name == "involution") {
      return example_involution();
    }
    if (name == "idempotent") {
      return idempotent_monoid();
    }
    if (name == "idempotent-split") {
      return idempotent_completion();
    }
    auto group = [&] { return FiniteGroup::named(options.group); };
    if (name == "group") {
      return group_category(group());
    }
    if (name == "orbit") {
      return orbit_category(group(), SubgroupFamily::all).category;
    }
    if (name == "orbit-p" || name == "orbit-p-full") {
      bool prime = options.p >= 2;
      for (std::size_t d = 2; prime && d * d <= options.p; ++d) {
        prime = options.p % d != 0;
      }
      if (!prime) {
        throw InvalidData("gallery '" + std::string(name) + "' needs a prime p, got " + std::to_string(options.p));
      }
      auto family = name == "orbit-p" ? SubgroupFamily::nontrivial_p_subgroups : SubgroupFamily::p_subgroups;
      return orbit_category(group(), family, options.p).category;
    }
    throw InvalidData("unknown gallery category '" + std::string(name) + "'");
  }

  std::vector<std::string> gallery_names() {
    return {"chain1",     "chain2", "chain3",  "chain4",         "involution",
            "idempotent", "idempotent-split", "group", "orbit", "orbit-p", "orbit-p-full"};
  }

}  // namespace finsite
