#include "finsite/sheaf.hpp"

#include <algorithm>
#include <map>

#include "finsite/errors.hpp"

namespace finsite {

  namespace {

    // Unknown values m_i in P(object[i]) tied by P(v)(m_i) = m_j for every
    // (v, j) in links[i]. Matching families and right Kan extensions are
    // both solution sets of such a system.
    struct SlotSystem {
      std::vector<ObjectIndex> object;
      std::vector<std::vector<std::pair<MorphismIndex, std::size_t>>> links;
    };

    // Slots are the morphisms of a precomposition-closed set into x.
    SlotSystem sieve_slots(FiniteCategory const& cat, std::vector<MorphismIndex> const& members) {
      SlotSystem s;
      std::map<MorphismIndex, std::size_t> slot;
      for (std::size_t i = 0; i < members.size(); ++i) {
        slot[members[i]] = i;
        s.object.push_back(cat.dom(members[i]));
      }
      s.links.resize(members.size());
      for (std::size_t i = 0; i < members.size(); ++i) {
        for (auto v : cat.into(cat.dom(members[i]))) {
          auto it = slot.find(cat.compose(members[i], v));
          if (it == slot.end()) {
            throw PreconditionError("morphism set is not closed under precomposition");
          }
          if (it->second != i || !cat.is_identity(v)) {
            s.links[i].emplace_back(v, it->second);
          }
        }
      }
      return s;
    }

    std::vector<std::vector<std::size_t>> solve(SetPresheaf const& p, SlotSystem const& s) {
      std::size_t const n = s.object.size();
      std::vector<std::size_t> value(n, kNone);
      std::vector<std::size_t> trail;
      std::vector<std::vector<std::size_t>> out;

      auto assign = [&](std::size_t i, std::size_t a) {
        std::vector<std::pair<std::size_t, std::size_t>> queue{{i, a}};
        while (!queue.empty()) {
          auto [k, b] = queue.back();
          queue.pop_back();
          if (value[k] != kNone) {
            if (value[k] != b) {
              return false;
            }
            continue;
          }
          value[k] = b;
          trail.push_back(k);
          for (auto [v, j] : s.links[k]) {
            queue.emplace_back(j, p.apply(v, b));
          }
        }
        return true;
      };
      auto undo = [&](std::size_t mark) {
        while (trail.size() > mark) {
          value[trail.back()] = kNone;
          trail.pop_back();
        }
      };
      auto rec = [&](auto& self, std::size_t pos) -> void {
        while (pos < n && value[pos] != kNone) {
          ++pos;
        }
        if (pos == n) {
          out.push_back(value);
          return;
        }
        for (std::size_t a = 0; a < p.size(s.object[pos]); ++a) {
          std::size_t mark = trail.size();
          if (assign(pos, a)) {
            self(self, pos + 1);
          }
          undo(mark);
        }
      };
      rec(rec, 0);
      return out;
    }

    struct LinearSolution {
      std::vector<std::size_t> offsets;
      std::size_t ambient = 0;
      Matrix basis;
    };

    LinearSolution solve(LinearPresheaf const& p, SlotSystem const& s) {
      LinearSolution out;
      for (auto x : s.object) {
        out.offsets.push_back(out.ambient);
        out.ambient += p.dim(x);
      }
      std::vector<std::vector<Scalar>> rows;
      auto const& k = p.field();
      for (std::size_t i = 0; i < s.object.size(); ++i) {
        for (auto [v, j] : s.links[i]) {
          auto const& a = p.map(v);
          for (std::size_t r = 0; r < a.rows(); ++r) {
            std::vector<Scalar> row(out.ambient);
            for (std::size_t c = 0; c < a.cols(); ++c) {
              row[out.offsets[i] + c] = a(r, c);
            }
            row[out.offsets[j] + r] = k.sub(row[out.offsets[j] + r], k.one());
            rows.push_back(std::move(row));
          }
        }
      }
      Matrix e(rows.size(), out.ambient);
      for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < out.ambient; ++c) {
          e(r, c) = rows[r][c];
        }
      }
      out.basis = rows.empty() ? Matrix::identity(out.ambient) : linalg::nullspace(k, e);
      return out;
    }

    std::string family_name(SetPresheaf const& p, SlotSystem const& s, std::vector<std::size_t> const& values) {
      std::string out = "[";
      for (std::size_t i = 0; i < values.size(); ++i) {
        out += (i ? "," : "") + p.elements(s.object[i])[values[i]];
      }
      return out + "]";
    }

    std::vector<Sieve> minimal_sieves(GrothendieckTopology const& j) {
      std::vector<Sieve> out;
      for (ObjectIndex x = 0; x < j.category().object_count(); ++x) {
        out.push_back(minimal_covering_sieve(j, x));
      }
      return out;
    }

    void require_same(FiniteCategory const& a, FiniteCategory const& b) {
      if (!(a == b)) {
        throw PreconditionError("presheaf and topology live on different categories");
      }
    }

    // Everything a half-sheafification or Kan extension needs about the
    // slot system at each object, plus how a morphism of the ambient
    // category acts on slots: slot h' at x' goes to slot k h' at x.
    struct Plan {
      std::vector<std::vector<MorphismIndex>> members;
      std::vector<SlotSystem> systems;
    };

    // result(k) for k : x' -> x sends the family m at x to (m_{k h'})_{h'}.
    std::vector<std::size_t> slot_transfer(FiniteCategory const& cat, Plan const& plan, MorphismIndex k) {
      auto const& from = plan.members[cat.cod(k)];
      auto const& to = plan.members[cat.dom(k)];
      std::vector<std::size_t> out;
      for (auto h : to) {
        auto kh = cat.compose(k, h);
        auto it = std::find(from.begin(), from.end(), kh);
        if (it == from.end()) {
          throw Error("internal: restricted family leaves the target slots");
        }
        out.push_back(static_cast<std::size_t>(it - from.begin()));
      }
      return out;
    }

    // Builds the presheaf of solution sets of plan over the ambient category.
    SetPresheaf families_presheaf(FiniteCategory const& cat, SetPresheaf const& p, Plan const& plan) {
      std::size_t const n = cat.object_count();
      std::vector<std::vector<std::vector<std::size_t>>> sols(n);
      std::vector<std::map<std::vector<std::size_t>, std::size_t>> index(n);
      std::vector<std::vector<std::string>> elements(n);
      for (ObjectIndex x = 0; x < n; ++x) {
        sols[x] = solve(p, plan.systems[x]);
        for (std::size_t i = 0; i < sols[x].size(); ++i) {
          index[x][sols[x][i]] = i;
          elements[x].push_back(family_name(p, plan.systems[x], sols[x][i]));
        }
      }
      std::vector<std::vector<std::size_t>> maps(cat.morphism_count());
      for (MorphismIndex k = 0; k < cat.morphism_count(); ++k) {
        auto transfer = slot_transfer(cat, plan, k);
        for (auto const& fam : sols[cat.cod(k)]) {
          std::vector<std::size_t> r;
          for (auto t : transfer) {
            r.push_back(fam[t]);
          }
          maps[k].push_back(index[cat.dom(k)].at(r));
        }
      }
      return SetPresheaf(cat, std::move(elements), std::move(maps));
    }

    LinearPresheaf families_presheaf(FiniteCategory const& cat, LinearPresheaf const& p, Plan const& plan) {
      std::size_t const n = cat.object_count();
      auto const& k = p.field();
      std::vector<LinearSolution> sols(n);
      std::vector<Subspace> spaces(n);
      std::vector<std::size_t> dims(n);
      for (ObjectIndex x = 0; x < n; ++x) {
        sols[x] = solve(p, plan.systems[x]);
        spaces[x] = Subspace(k, sols[x].basis);
        dims[x] = sols[x].basis.cols();
      }
      std::vector<Matrix> maps(cat.morphism_count());
      for (MorphismIndex m = 0; m < cat.morphism_count(); ++m) {
        ObjectIndex x = cat.cod(m);
        ObjectIndex w = cat.dom(m);
        auto transfer = slot_transfer(cat, plan, m);
        // Restricted basis families, as columns in the ambient space at w.
        Matrix r(sols[w].ambient, dims[x]);
        for (std::size_t t = 0; t < transfer.size(); ++t) {
          std::size_t src = sols[x].offsets[transfer[t]];
          std::size_t dst = sols[w].offsets[t];
          std::size_t d = p.dim(plan.systems[w].object[t]);
          for (std::size_t row = 0; row < d; ++row) {
            for (std::size_t c = 0; c < dims[x]; ++c) {
              r(dst + row, c) = sols[x].basis(src + row, c);
            }
          }
        }
        maps[m] = spaces[w].coordinates(r);
      }
      return LinearPresheaf(cat, k, std::move(dims), std::move(maps));
    }

    Plan sieve_plan(FiniteCategory const& cat, std::vector<Sieve> const& sieves) {
      Plan plan;
      for (auto const& s : sieves) {
        plan.members.push_back(s.members());
        plan.systems.push_back(sieve_slots(cat, plan.members.back()));
      }
      return plan;
    }

    // Slots at x are h : w -> x with w in D; values live in G(w) with G on
    // d.category(), and links follow the morphisms of D.
    Plan kan_plan(FullSubcategory const& d) {
      auto const& cat = d.parent();
      auto const& sub = d.category();
      Plan plan;
      for (ObjectIndex x = 0; x < cat.object_count(); ++x) {
        std::vector<MorphismIndex> members;
        for (auto h : cat.into(x)) {
          if (d.contains(cat.dom(h))) {
            members.push_back(h);
          }
        }
        SlotSystem s;
        s.links.resize(members.size());
        for (std::size_t i = 0; i < members.size(); ++i) {
          ObjectIndex w = *d.from_parent_object(cat.dom(members[i]));
          s.object.push_back(w);
          for (auto v : sub.into(w)) {
            auto hv = cat.compose(members[i], d.to_parent_morphism(v));
            std::size_t j = static_cast<std::size_t>(std::find(members.begin(), members.end(), hv) - members.begin());
            if (j != i || !sub.is_identity(v)) {
              s.links[i].emplace_back(v, j);
            }
          }
        }
        plan.members.push_back(std::move(members));
        plan.systems.push_back(std::move(s));
      }
      return plan;
    }

    template <class P>
    SheafCheck check_sheaf_impl(P const& f, GrothendieckTopology const& j, SheafCheckMode mode) {
      auto const& cat = f.category();
      require_same(cat, j.category());
      for (ObjectIndex x = 0; x < cat.object_count(); ++x) {
        std::vector<Sieve> sieves;
        if (mode == SheafCheckMode::minimal_sieves_only) {
          sieves.push_back(minimal_covering_sieve(j, x));
        } else {
          sieves = j.covering(x);
        }
        for (auto const& s : sieves) {
          auto members = s.members();
          auto system = sieve_slots(cat, members);
          bool ok = true;
          if constexpr (std::is_same_v<P, SetPresheaf>) {
            auto fams = solve(f, system);
            std::map<std::vector<std::size_t>, std::size_t> hits;
            for (std::size_t a = 0; a < f.size(x); ++a) {
              std::vector<std::size_t> r;
              for (auto u : members) {
                r.push_back(f.apply(u, a));
              }
              ++hits[r];
            }
            ok = fams.size() == f.size(x) && hits.size() == f.size(x);
          } else {
            auto sol = solve(f, system);
            Matrix r(sol.ambient, f.dim(x));
            for (std::size_t i = 0; i < members.size(); ++i) {
              auto const& a = f.map(members[i]);
              for (std::size_t row = 0; row < a.rows(); ++row) {
                for (std::size_t c = 0; c < a.cols(); ++c) {
                  r(sol.offsets[i] + row, c) = a(row, c);
                }
              }
            }
            ok = sol.basis.cols() == f.dim(x) && linalg::rank(f.field(), r) == f.dim(x);
          }
          if (!ok) {
            return SheafCheck{false, s};
          }
        }
      }
      return SheafCheck{};
    }

  }  // namespace

  SetFamilies matching_families(SetPresheaf const& f, Sieve const& s) {
    auto members = s.members();
    auto system = sieve_slots(f.category(), members);
    return SetFamilies{members, solve(f, system)};
  }

  LinearFamilies matching_families(LinearPresheaf const& f, Sieve const& s) {
    auto members = s.members();
    auto sol = solve(f, sieve_slots(f.category(), members));
    return LinearFamilies{members, sol.offsets, sol.ambient, sol.basis};
  }

  SheafCheck check_sheaf(SetPresheaf const& f, GrothendieckTopology const& j, SheafCheckMode mode) {
    return check_sheaf_impl(f, j, mode);
  }

  SheafCheck check_sheaf(LinearPresheaf const& f, GrothendieckTopology const& j, SheafCheckMode mode) {
    return check_sheaf_impl(f, j, mode);
  }

  SheafCheck check_sheaf(Presheaf const& f, GrothendieckTopology const& j, SheafCheckMode mode) {
    return std::visit([&](auto const& p) { return check_sheaf_impl(p, j, mode); }, f);
  }

  bool is_sheaf(Presheaf const& f, GrothendieckTopology const& j, SheafCheckMode mode) {
    return check_sheaf(f, j, mode).sheaf;
  }

  SetPresheaf half_sheafify(SetPresheaf const& f, GrothendieckTopology const& j) {
    require_same(f.category(), j.category());
    return families_presheaf(f.category(), f, sieve_plan(f.category(), minimal_sieves(j)));
  }

  LinearPresheaf half_sheafify(LinearPresheaf const& f, GrothendieckTopology const& j) {
    require_same(f.category(), j.category());
    return families_presheaf(f.category(), f, sieve_plan(f.category(), minimal_sieves(j)));
  }

  Presheaf half_sheafify(Presheaf const& f, GrothendieckTopology const& j) {
    return std::visit([&](auto const& p) -> Presheaf { return half_sheafify(p, j); }, f);
  }

  SetNatTrans half_sheafification_unit(SetPresheaf const& f, GrothendieckTopology const& j) {
    require_same(f.category(), j.category());
    auto const& cat = f.category();
    auto plan = sieve_plan(cat, minimal_sieves(j));
    SetNatTrans eta;
    for (ObjectIndex x = 0; x < cat.object_count(); ++x) {
      auto sols = solve(f, plan.systems[x]);
      std::map<std::vector<std::size_t>, std::size_t> index;
      for (std::size_t i = 0; i < sols.size(); ++i) {
        index[sols[i]] = i;
      }
      std::vector<std::size_t> comp;
      for (std::size_t a = 0; a < f.size(x); ++a) {
        std::vector<std::size_t> r;
        for (auto u : plan.members[x]) {
          r.push_back(f.apply(u, a));
        }
        comp.push_back(index.at(r));
      }
      eta.components.push_back(std::move(comp));
    }
    return eta;
  }

  LinearNatTrans half_sheafification_unit(LinearPresheaf const& f, GrothendieckTopology const& j) {
    require_same(f.category(), j.category());
    auto const& cat = f.category();
    auto plan = sieve_plan(cat, minimal_sieves(j));
    LinearNatTrans eta;
    for (ObjectIndex x = 0; x < cat.object_count(); ++x) {
      auto sol = solve(f, plan.systems[x]);
      Matrix r(sol.ambient, f.dim(x));
      for (std::size_t i = 0; i < plan.members[x].size(); ++i) {
        auto const& a = f.map(plan.members[x][i]);
        for (std::size_t row = 0; row < a.rows(); ++row) {
          for (std::size_t c = 0; c < a.cols(); ++c) {
            r(sol.offsets[i] + row, c) = a(row, c);
          }
        }
      }
      eta.components.push_back(Subspace(f.field(), sol.basis).coordinates(r));
    }
    return eta;
  }

  SetPresheaf sheafify(SetPresheaf const& f, GrothendieckTopology const& j) {
    return half_sheafify(half_sheafify(f, j), j);
  }

  LinearPresheaf sheafify(LinearPresheaf const& f, GrothendieckTopology const& j) {
    return half_sheafify(half_sheafify(f, j), j);
  }

  Presheaf sheafify(Presheaf const& f, GrothendieckTopology const& j) {
    return std::visit([&](auto const& p) -> Presheaf { return sheafify(p, j); }, f);
  }

  SetPresheaf restrict(SetPresheaf const& f, FullSubcategory const& d) {
    require_same(f.category(), d.parent());
    auto const& sub = d.category();
    std::vector<std::vector<std::string>> elements;
    for (ObjectIndex x = 0; x < sub.object_count(); ++x) {
      elements.push_back(f.elements(d.to_parent_object(x)));
    }
    std::vector<std::vector<std::size_t>> maps;
    for (MorphismIndex m = 0; m < sub.morphism_count(); ++m) {
      maps.push_back(f.map(d.to_parent_morphism(m)));
    }
    return SetPresheaf(sub, std::move(elements), std::move(maps));
  }

  LinearPresheaf restrict(LinearPresheaf const& f, FullSubcategory const& d) {
    require_same(f.category(), d.parent());
    auto const& sub = d.category();
    std::vector<std::size_t> dims;
    for (ObjectIndex x = 0; x < sub.object_count(); ++x) {
      dims.push_back(f.dim(d.to_parent_object(x)));
    }
    std::vector<Matrix> maps;
    for (MorphismIndex m = 0; m < sub.morphism_count(); ++m) {
      maps.push_back(f.map(d.to_parent_morphism(m)));
    }
    return LinearPresheaf(sub, f.field(), std::move(dims), std::move(maps));
  }

  Presheaf restrict(Presheaf const& f, FullSubcategory const& d) {
    return std::visit([&](auto const& p) -> Presheaf { return restrict(p, d); }, f);
  }

  namespace {

    void require_kan_input(FiniteCategory const& g, FullSubcategory const& d) {
      if (!(g == d.category())) {
        throw PreconditionError("presheaf does not live on the subcategory " + d.label());
      }
      if (!d.is_strictly_full()) {
        throw PreconditionError("subcategory " + d.label() + " is not strictly full");
      }
    }

  }  // namespace

  SetPresheaf right_kan_extend(SetPresheaf const& g, FullSubcategory const& d) {
    require_kan_input(g.category(), d);
    return families_presheaf(d.parent(), g, kan_plan(d));
  }

  LinearPresheaf right_kan_extend(LinearPresheaf const& g, FullSubcategory const& d) {
    require_kan_input(g.category(), d);
    return families_presheaf(d.parent(), g, kan_plan(d));
  }

  Presheaf right_kan_extend(Presheaf const& g, FullSubcategory const& d) {
    return std::visit([&](auto const& p) -> Presheaf { return right_kan_extend(p, d); }, g);
  }

  LinearFamilies kan_families(LinearPresheaf const& g, FullSubcategory const& d, ObjectIndex x) {
    require_kan_input(g.category(), d);
    auto plan = kan_plan(d);
    auto sol = solve(g, plan.systems.at(x));
    return LinearFamilies{plan.members[x], sol.offsets, sol.ambient, sol.basis};
  }

  SetNatTrans kan_counit(SetPresheaf const& g, FullSubcategory const& d) {
    require_kan_input(g.category(), d);
    auto plan = kan_plan(d);
    SetNatTrans eps;
    for (ObjectIndex w = 0; w < d.size(); ++w) {
      ObjectIndex x = d.to_parent_object(w);
      auto const& members = plan.members[x];
      std::size_t slot = static_cast<std::size_t>(
          std::find(members.begin(), members.end(), d.parent().identity(x)) - members.begin());
      auto sols = solve(g, plan.systems[x]);
      std::vector<std::size_t> comp;
      for (auto const& fam : sols) {
        comp.push_back(fam[slot]);
      }
      eps.components.push_back(std::move(comp));
    }
    return eps;
  }

  LinearNatTrans kan_counit(LinearPresheaf const& g, FullSubcategory const& d) {
    require_kan_input(g.category(), d);
    auto plan = kan_plan(d);
    LinearNatTrans eps;
    for (ObjectIndex w = 0; w < d.size(); ++w) {
      ObjectIndex x = d.to_parent_object(w);
      auto const& members = plan.members[x];
      std::size_t slot = static_cast<std::size_t>(
          std::find(members.begin(), members.end(), d.parent().identity(x)) - members.begin());
      auto sol = solve(g, plan.systems[x]);
      std::size_t n = g.dim(w);
      Matrix e(n, sol.basis.cols());
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < sol.basis.cols(); ++c) {
          e(r, c) = sol.basis(sol.offsets[slot] + r, c);
        }
      }
      eps.components.push_back(std::move(e));
    }
    return eps;
  }

  namespace {

    void require_co_ideal(FiniteCategory const& g, FullSubcategory const& d) {
      if (!(g == d.category())) {
        throw PreconditionError("presheaf does not live on the subcategory " + d.label());
      }
      if (!is_ei(d.parent()) || !d.is_co_ideal()) {
        throw PreconditionError("subcategory " + d.label() + " is not a co-ideal of an EI category");
      }
    }

  }  // namespace

  SetPresheaf extend_by_default(SetPresheaf const& g, FullSubcategory const& d) {
    require_co_ideal(g.category(), d);
    auto const& cat = d.parent();
    std::vector<std::vector<std::string>> elements(cat.object_count());
    for (ObjectIndex w = 0; w < d.size(); ++w) {
      elements[d.to_parent_object(w)] = g.elements(w);
    }
    std::vector<std::vector<std::size_t>> maps(cat.morphism_count());
    for (MorphismIndex m = 0; m < cat.morphism_count(); ++m) {
      if (auto sub = d.from_parent_morphism(m)) {
        maps[m] = g.map(*sub);
      }
      // Otherwise the codomain is outside D (D is a co-ideal), so F(m) is a
      // map out of the empty set.
    }
    return SetPresheaf(cat, std::move(elements), std::move(maps));
  }

  LinearPresheaf extend_by_default(LinearPresheaf const& g, FullSubcategory const& d) {
    require_co_ideal(g.category(), d);
    auto const& cat = d.parent();
    std::vector<std::size_t> dims(cat.object_count(), 0);
    for (ObjectIndex w = 0; w < d.size(); ++w) {
      dims[d.to_parent_object(w)] = g.dim(w);
    }
    std::vector<Matrix> maps;
    for (MorphismIndex m = 0; m < cat.morphism_count(); ++m) {
      if (auto sub = d.from_parent_morphism(m)) {
        maps.push_back(g.map(*sub));
      } else {
        maps.push_back(Matrix::zero(dims[cat.dom(m)], dims[cat.cod(m)]));
      }
    }
    return LinearPresheaf(cat, g.field(), std::move(dims), std::move(maps));
  }

  Presheaf extend_by_default(Presheaf const& g, FullSubcategory const& d) {
    return std::visit([&](auto const& p) -> Presheaf { return extend_by_default(p, d); }, g);
  }

  GrothendieckTopology finest_topology_for(Presheaf const& f) {
    auto const& cat = category_of(f);
    std::vector<GrothendieckTopology> good;
    for (auto& j : enumerate_topologies(cat)) {
      if (is_sheaf(f, j)) {
        good.push_back(std::move(j));
      }
    }
    std::vector<std::size_t> maximal;
    for (std::size_t a = 0; a < good.size(); ++a) {
      bool dominated = false;
      for (std::size_t b = 0; b < good.size() && !dominated; ++b) {
        dominated = b != a && good[a].is_contained_in(good[b]) && !(good[a] == good[b]);
      }
      if (!dominated) {
        maximal.push_back(a);
      }
    }
    if (maximal.size() != 1) {
      throw Error("finest topology is not unique: " + std::to_string(maximal.size())
                  + " maximal topologies make this presheaf a sheaf");
    }
    return good[maximal.front()];
  }

}  // namespace finsite
