#include "finsite/topology.hpp"

#include <algorithm>
#include <sstream>

#include "finsite/errors.hpp"

namespace finsite {

  GrothendieckTopology::GrothendieckTopology(FiniteCategory cat, std::vector<std::vector<Sieve>> covering)
      : cat_(std::move(cat)), covering_(std::move(covering)) {
    if (covering_.size() != cat_.object_count()) {
      throw PreconditionError("topology must list covering sieves for every object");
    }
    for (auto& row : covering_) {
      std::sort(row.begin(), row.end());
      row.erase(std::unique(row.begin(), row.end()), row.end());
    }
  }

  bool GrothendieckTopology::covers(Sieve const& s) const {
    auto const& row = covering_.at(s.target());
    return std::binary_search(row.begin(), row.end(), s);
  }

  bool GrothendieckTopology::is_contained_in(GrothendieckTopology const& other) const {
    for (std::size_t x = 0; x < covering_.size(); ++x) {
      for (auto const& s : covering_[x]) {
        if (!other.covers(s)) {
          return false;
        }
      }
    }
    return true;
  }

  std::string TopologyReport::to_string() const {
    std::ostringstream os;
    for (auto const& v : violations) {
      os << v.message << '\n';
    }
    return os.str();
  }

  TopologyReport check_topology(FiniteCategory const& cat, std::vector<std::vector<Sieve>> const& covering) {
    TopologyReport report;
    auto fail = [&](int axiom, ObjectIndex x, std::optional<Sieve> s, std::optional<MorphismIndex> f, std::string msg) {
      report.violations.push_back({axiom, x, std::move(s), f, std::move(msg)});
    };
    if (covering.size() != cat.object_count()) {
      fail(0, 0, std::nullopt, std::nullopt, "covering sieves are not given for every object");
      return report;
    }
    std::vector<std::vector<Sieve>> all(cat.object_count());
    std::vector<std::vector<Sieve>> sorted = covering;
    for (ObjectIndex x = 0; x < cat.object_count(); ++x) {
      all[x] = sieves_on(cat, x);
      std::sort(sorted[x].begin(), sorted[x].end());
      for (auto const& s : covering[x]) {
        if (s.target() != x || !is_sieve(cat, x, s.bits())) {
          fail(0, x, s, std::nullopt, "entry at " + cat.object_name(x) + " is not a sieve on it");
        }
      }
    }
    if (!report.ok()) {
      return report;
    }
    auto covers = [&](Sieve const& s) {
      auto const& row = sorted[s.target()];
      return std::binary_search(row.begin(), row.end(), s);
    };

    for (ObjectIndex x = 0; x < cat.object_count(); ++x) {
      std::string const& xn = cat.object_name(x);
      if (!covers(maximal_sieve(cat, x))) {
        fail(1, x, maximal_sieve(cat, x), std::nullopt, "axiom 1: maximal sieve on " + xn + " is not covering");
      }
      for (auto const& s : sorted[x]) {
        for (auto f : cat.into(x)) {
          auto p = pullback_sieve(cat, s, f);
          if (!covers(p)) {
            fail(2, x, s, f,
                 "axiom 2: pullback of " + format_sieve(cat, s) + " along " + cat.morphism_name(f) + " is not covering");
          }
        }
      }
      for (auto const& s1 : sorted[x]) {
        for (auto const& s2 : all[x]) {
          if (covers(s2)) {
            continue;
          }
          bool locally = true;
          for (auto f : s1.members()) {
            if (!covers(pullback_sieve(cat, s2, f))) {
              locally = false;
              break;
            }
          }
          if (locally) {
            fail(3, x, s2, std::nullopt,
                 "axiom 3: " + format_sieve(cat, s2) + " on " + xn + " is locally covering over "
                     + format_sieve(cat, s1) + " but not covering");
          }
        }
      }
    }
    return report;
  }

  bool is_topology(FiniteCategory const& cat, std::vector<std::vector<Sieve>> const& covering) {
    return check_topology(cat, covering).ok();
  }

  GrothendieckTopology make_topology(FiniteCategory const& cat, std::vector<std::vector<Sieve>> covering) {
    auto report = check_topology(cat, covering);
    if (!report.ok()) {
      throw InvalidData("not a Grothendieck topology:\n" + report.to_string());
    }
    return GrothendieckTopology(cat, std::move(covering));
  }

  GrothendieckTopology topology_from_minimal(FiniteCategory const& cat, std::vector<Sieve> const& minimal) {
    if (minimal.size() != cat.object_count()) {
      throw PreconditionError("one minimal sieve per object expected");
    }
    std::vector<std::vector<Sieve>> covering(cat.object_count());
    for (ObjectIndex x = 0; x < cat.object_count(); ++x) {
      for (auto const& s : sieves_on(cat, x)) {
        if (minimal[x].is_subset_of(s)) {
          covering[x].push_back(s);
        }
      }
    }
    return GrothendieckTopology(cat, std::move(covering));
  }

  std::vector<GrothendieckTopology> enumerate_topologies(FiniteCategory const& cat, std::size_t sieve_limit) {
    std::size_t const n = cat.object_count();
    std::vector<std::vector<Sieve>> all(n);
    std::size_t total = 0;
    for (ObjectIndex x = 0; x < n; ++x) {
      all[x] = sieves_on(cat, x);
      total += all[x].size();
    }
    if (total > sieve_limit) {
      throw SearchSpaceTooLarge("topology census needs 2^" + std::to_string(total)
                                + " candidate assignments; the limit is 2^" + std::to_string(sieve_limit));
    }
    // In a topology each J(x) is upward closed (transitivity applied to a
    // smaller covering sieve) and closed under finite intersection (stability
    // then transitivity), so it is determined by its least element. The search
    // therefore picks one candidate least sieve per object, prunes with the
    // stability condition f*(S_x) >= S_y between objects already chosen, and
    // confirms every survivor with the full axiom check.
    std::vector<std::size_t> choice(n, 0);
    std::vector<GrothendieckTopology> out;
    auto consistent = [&](ObjectIndex upto) {
      for (ObjectIndex x = 0; x <= upto; ++x) {
        for (auto f : cat.into(x)) {
          ObjectIndex y = cat.dom(f);
          if (y > upto || (x != upto && y != upto)) {
            continue;
          }
          if (!all[y][choice[y]].is_subset_of(pullback_sieve(cat, all[x][choice[x]], f))) {
            return false;
          }
        }
      }
      return true;
    };
    auto recurse = [&](auto& self, ObjectIndex x) -> void {
      if (x == n) {
        std::vector<Sieve> minimal;
        for (ObjectIndex y = 0; y < n; ++y) {
          minimal.push_back(all[y][choice[y]]);
        }
        auto j = topology_from_minimal(cat, minimal);
        if (is_topology(cat, j.covering())) {
          out.push_back(std::move(j));
        }
        return;
      }
      for (std::size_t i = 0; i < all[x].size(); ++i) {
        choice[x] = i;
        if (consistent(x)) {
          self(self, x + 1);
        }
      }
    };
    recurse(recurse, 0);
    return out;
  }

  GrothendieckTopology minimal_topology(FiniteCategory const& cat) {
    std::vector<std::vector<Sieve>> covering;
    for (ObjectIndex x = 0; x < cat.object_count(); ++x) {
      covering.push_back({maximal_sieve(cat, x)});
    }
    return GrothendieckTopology(cat, std::move(covering));
  }

  GrothendieckTopology maximal_topology(FiniteCategory const& cat) {
    std::vector<std::vector<Sieve>> covering;
    for (ObjectIndex x = 0; x < cat.object_count(); ++x) {
      covering.push_back(sieves_on(cat, x));
    }
    return GrothendieckTopology(cat, std::move(covering));
  }

  GrothendieckTopology subcategory_topology(FullSubcategory const& d) {
    if (!d.is_strictly_full()) {
      throw PreconditionError("subcategory " + d.label() + " is not strictly full");
    }
    auto const& cat = d.parent();
    std::vector<std::vector<Sieve>> covering(cat.object_count());
    for (ObjectIndex x = 0; x < cat.object_count(); ++x) {
      for (auto const& s : sieves_on(cat, x)) {
        bool surjective = true;
        for (ObjectIndex w : d.objects()) {
          for (auto h : cat.hom(w, x)) {
            // h must be u v with u : y -> x in S and v : w -> y.
            bool hit = false;
            for (auto u : s.members()) {
              for (auto v : cat.hom(w, cat.dom(u))) {
                if (cat.compose(u, v) == h) {
                  hit = true;
                  break;
                }
              }
              if (hit) {
                break;
              }
            }
            if (!hit) {
              surjective = false;
              break;
            }
          }
          if (!surjective) {
            break;
          }
        }
        if (surjective) {
          covering[x].push_back(s);
        }
      }
    }
    return GrothendieckTopology(cat, std::move(covering));
  }

  Sieve minimal_covering_sieve(GrothendieckTopology const& j, ObjectIndex x) {
    auto const& row = j.covering(x);
    if (row.empty()) {
      throw InvalidData("no covering sieves on " + j.category().object_name(x));
    }
    Sieve m = row.front();
    for (auto const& s : row) {
      m = intersect(m, s);
    }
    if (!j.covers(m)) {
      throw InvalidData("covering sieves on " + j.category().object_name(x) + " are not closed under intersection");
    }
    return m;
  }

  GrothendieckTopology dense_topology(FiniteCategory const& cat) {
    std::vector<std::vector<Sieve>> covering(cat.object_count());
    for (ObjectIndex x = 0; x < cat.object_count(); ++x) {
      for (auto const& s : sieves_on(cat, x)) {
        bool dense = true;
        for (auto f : cat.into(x)) {
          bool refined = false;
          for (auto g : cat.into(cat.dom(f))) {
            if (s.contains(cat.compose(f, g))) {
              refined = true;
              break;
            }
          }
          if (!refined) {
            dense = false;
            break;
          }
        }
        if (dense) {
          covering[x].push_back(s);
        }
      }
    }
    return GrothendieckTopology(cat, std::move(covering));
  }

  FullSubcategory classify_topology(GrothendieckTopology const& j) {
    for (auto const& d : strictly_full_karoubian_subcategories(j.category())) {
      if (subcategory_topology(d) == j) {
        return d;
      }
    }
    throw Error("no classifying subcategory: no strictly full Karoubian subcategory D has J^D equal to this topology");
  }

  std::string minimal_sieve_grid(FiniteCategory const& cat, std::vector<std::string> const& row_labels,
                                 std::vector<GrothendieckTopology> const& topologies) {
    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> head{""};
    for (ObjectIndex x = 0; x < cat.object_count(); ++x) {
      head.push_back(cat.object_name(x));
    }
    cells.push_back(head);
    for (std::size_t i = 0; i < topologies.size(); ++i) {
      std::vector<std::string> row{i < row_labels.size() ? row_labels[i] : std::to_string(i)};
      for (ObjectIndex x = 0; x < cat.object_count(); ++x) {
        row.push_back(format_sieve(cat, minimal_covering_sieve(topologies[i], x)));
      }
      cells.push_back(std::move(row));
    }
    std::vector<std::size_t> width(head.size(), 0);
    for (auto const& row : cells) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        width[c] = std::max(width[c], row[c].size());
      }
    }
    std::ostringstream os;
    for (auto const& row : cells) {
      os << '|';
      for (std::size_t c = 0; c < row.size(); ++c) {
        os << ' ' << row[c] << std::string(width[c] - row[c].size(), ' ') << " |";
      }
      os << '\n';
    }
    return os.str();
  }

  std::string topology_label(FullSubcategory const& d) {
    auto const& cat = d.parent();
    bool short_names = std::all_of(d.objects().begin(), d.objects().end(),
                                   [&](ObjectIndex x) { return cat.object_name(x).size() == 1; });
    if (short_names && d.size() > 0) {
      std::string s = "J^";
      for (auto x : d.objects()) {
        s += cat.object_name(x);
      }
      return s;
    }
    return "J^" + d.label();
  }

}  // namespace finsite
