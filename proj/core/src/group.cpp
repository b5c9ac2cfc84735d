#include "finsite/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "finsite/errors.hpp"

namespace finsite {

  FiniteGroup::FiniteGroup(std::vector<std::string> elements, std::vector<std::vector<GroupElement>> table)
      : names_(std::move(elements)), table_(std::move(table)) {
    std::size_t const n = names_.size();
    if (n == 0) {
      throw InvalidData("a group has at least one element");
    }
    if (std::set<std::string>(names_.begin(), names_.end()).size() != n) {
      throw InvalidData("duplicate group element name");
    }
    if (table_.size() != n) {
      throw InvalidData("Cayley table must have one row per element");
    }
    for (auto const& row : table_) {
      if (row.size() != n || std::any_of(row.begin(), row.end(), [n](GroupElement v) { return v >= n; })) {
        throw InvalidData("Cayley table row has the wrong length or an unknown entry");
      }
    }
    identity_ = n;
    for (GroupElement e = 0; e < n && identity_ == n; ++e) {
      bool ok = true;
      for (GroupElement a = 0; a < n && ok; ++a) {
        ok = table_[e][a] == a && table_[a][e] == a;
      }
      if (ok) {
        identity_ = e;
      }
    }
    if (identity_ == n) {
      throw InvalidData("Cayley table has no identity element");
    }
    inverse_.assign(n, n);
    for (GroupElement a = 0; a < n; ++a) {
      for (GroupElement b = 0; b < n; ++b) {
        if (table_[a][b] == identity_ && table_[b][a] == identity_) {
          inverse_[a] = b;
          break;
        }
      }
      if (inverse_[a] == n) {
        throw InvalidData("element '" + names_[a] + "' has no inverse");
      }
    }
    for (GroupElement a = 0; a < n; ++a) {
      for (GroupElement b = 0; b < n; ++b) {
        for (GroupElement c = 0; c < n; ++c) {
          if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) {
            throw InvalidData("Cayley table is not associative on (" + names_[a] + "," + names_[b] + ","
                              + names_[c] + ")");
          }
        }
      }
    }
  }

  FiniteGroup FiniteGroup::trivial() {
    return cyclic(1);
  }

  FiniteGroup FiniteGroup::cyclic(std::size_t n) {
    if (n == 0) {
      throw InvalidData("cyclic group order must be positive");
    }
    std::vector<std::string> names;
    for (std::size_t k = 0; k < n; ++k) {
      names.push_back(k == 0 ? "e" : k == 1 ? "a" : "a^" + std::to_string(k));
    }
    std::vector<std::vector<GroupElement>> table(n, std::vector<GroupElement>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        table[i][j] = (i + j) % n;
      }
    }
    return FiniteGroup(std::move(names), std::move(table));
  }

  FiniteGroup FiniteGroup::symmetric(std::size_t n) {
    if (n == 0 || n > 5) {
      throw InvalidData("symmetric groups are supported for 1 <= n <= 5");
    }
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    std::vector<std::string> names;
    for (auto const& q : perms) {
      std::string s;
      for (auto v : q) {
        s += std::to_string(v);
      }
      names.push_back(s);
    }
    std::size_t const m = perms.size();
    std::vector<std::vector<GroupElement>> table(m, std::vector<GroupElement>(m));
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        std::vector<std::size_t> c(n);
        for (std::size_t i = 0; i < n; ++i) {
          c[i] = perms[a][perms[b][i]];
        }
        table[a][b] = static_cast<GroupElement>(std::find(perms.begin(), perms.end(), c) - perms.begin());
      }
    }
    return FiniteGroup(std::move(names), std::move(table));
  }

  FiniteGroup FiniteGroup::named(std::string_view name) {
    std::string s(name);
    if (s == "trivial" || s == "1") {
      return trivial();
    }
    if (s.size() >= 2 && (s[0] == 'C' || s[0] == 'S')
        && std::all_of(s.begin() + 1, s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      std::size_t n = std::stoul(s.substr(1));
      return s[0] == 'C' ? cyclic(n) : symmetric(n);
    }
    throw InvalidData("unknown group '" + s + "' (expected trivial, C<n> or S<n>)");
  }

  GroupElement FiniteGroup::element_at(std::string_view name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) {
      throw InvalidData("unknown group element '" + std::string(name) + "'");
    }
    return static_cast<GroupElement>(it - names_.begin());
  }

  Subgroup FiniteGroup::conjugate(Subgroup const& h, GroupElement g) const {
    Subgroup out;
    for (GroupElement x : h) {
      out.push_back(multiply(multiply(inverse(g), x), g));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  Subgroup FiniteGroup::generate(std::vector<GroupElement> const& gens) const {
    std::vector<bool> in(order(), false);
    Subgroup out{identity_};
    in[identity_] = true;
    for (std::size_t i = 0; i < out.size(); ++i) {
      for (GroupElement g : gens) {
        GroupElement x = multiply(out[i], g);
        if (!in[x]) {
          in[x] = true;
          out.push_back(x);
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool FiniteGroup::is_subgroup(std::vector<GroupElement> const& set) const {
    std::vector<bool> in(order(), false);
    for (auto x : set) {
      if (x >= order()) {
        return false;
      }
      in[x] = true;
    }
    if (!in[identity_]) {
      return false;
    }
    for (auto a : set) {
      if (!in[inverse(a)]) {
        return false;
      }
      for (auto b : set) {
        if (!in[multiply(a, b)]) {
          return false;
        }
      }
    }
    return true;
  }

  Subgroup FiniteGroup::normalizer(Subgroup const& h) const {
    Subgroup out;
    for (GroupElement g = 0; g < order(); ++g) {
      if (conjugate(h, g) == h) {
        out.push_back(g);
      }
    }
    return out;
  }

  std::vector<Subgroup> all_subgroups(FiniteGroup const& g) {
    // Every subgroup is reached from the trivial one by adjoining elements
    // one at a time, so closing the family under "adjoin one element" finds
    // all of them.
    std::set<Subgroup> found{g.generate({})};
    std::vector<Subgroup> frontier(found.begin(), found.end());
    while (!frontier.empty()) {
      std::vector<Subgroup> next;
      for (auto const& h : frontier) {
        for (GroupElement x = 0; x < g.order(); ++x) {
          if (std::binary_search(h.begin(), h.end(), x)) {
            continue;
          }
          std::vector<GroupElement> gens(h.begin(), h.end());
          gens.push_back(x);
          Subgroup k = g.generate(gens);
          if (found.insert(k).second) {
            next.push_back(std::move(k));
          }
        }
      }
      frontier = std::move(next);
    }
    std::vector<Subgroup> out(found.begin(), found.end());
    std::sort(out.begin(), out.end(), [](auto const& a, auto const& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
  }

  bool is_p_subgroup(Subgroup const& h, std::size_t p) {
    if (p < 2) {
      return h.size() == 1;
    }
    std::size_t n = h.size();
    while (n % p == 0) {
      n /= p;
    }
    return n == 1;
  }

}  // namespace finsite
