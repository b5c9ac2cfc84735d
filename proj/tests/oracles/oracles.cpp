#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace oracle {

  namespace {

    MorphSet all_into(FiniteCategory const& cat, ObjectIndex x) {
      MorphSet out;
      for (MorphismIndex f = 0; f < cat.morphism_count(); ++f) {
        if (cat.cod(f) == x) {
          out.push_back(f);
        }
      }
      return out;
    }

    bool contains(MorphSet const& s, MorphismIndex f) { return std::binary_search(s.begin(), s.end(), f); }

    MorphSet pullback(FiniteCategory const& cat, MorphSet const& s, MorphismIndex f) {
      MorphSet out;
      for (auto h : all_into(cat, cat.dom(f))) {
        if (contains(s, cat.compose(f, h))) {
          out.push_back(h);
        }
      }
      return out;
    }

  }  // namespace

  std::set<MorphSet> sieves(FiniteCategory const& cat, ObjectIndex x) {
    auto arrows = all_into(cat, x);
    if (arrows.size() > 20) {
      throw std::runtime_error("oracle sieve scan too large");
    }
    std::set<MorphSet> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << arrows.size()); ++mask) {
      MorphSet s;
      for (std::size_t i = 0; i < arrows.size(); ++i) {
        if ((mask >> i) & 1U) {
          s.push_back(arrows[i]);
        }
      }
      bool closed = true;
      for (auto h : s) {
        for (auto k : all_into(cat, cat.dom(h))) {
          if (!contains(s, cat.compose(h, k))) {
            closed = false;
          }
        }
      }
      if (closed) {
        out.insert(s);
      }
    }
    return out;
  }

  bool is_topology(FiniteCategory const& cat, Covering const& j) {
    for (ObjectIndex x = 0; x < cat.object_count(); ++x) {
      if (!j[x].count(all_into(cat, x))) {
        return false;
      }
      for (auto const& s : j[x]) {
        for (auto f : all_into(cat, x)) {
          if (!j[cat.dom(f)].count(pullback(cat, s, f))) {
            return false;
          }
        }
      }
      for (auto const& r : sieves(cat, x)) {
        if (j[x].count(r)) {
          continue;
        }
        for (auto const& s : j[x]) {
          bool locally = std::all_of(s.begin(), s.end(),
                                     [&](MorphismIndex f) { return j[cat.dom(f)].count(pullback(cat, r, f)) > 0; });
          if (locally) {
            return false;
          }
        }
      }
    }
    return true;
  }

  std::vector<Covering> topologies(FiniteCategory const& cat) {
    std::vector<std::pair<ObjectIndex, MorphSet>> all;
    for (ObjectIndex x = 0; x < cat.object_count(); ++x) {
      for (auto const& s : sieves(cat, x)) {
        all.emplace_back(x, s);
      }
    }
    if (all.size() > 24) {
      throw std::runtime_error("oracle topology scan too large");
    }
    std::vector<Covering> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << all.size()); ++mask) {
      Covering j(cat.object_count());
      for (std::size_t i = 0; i < all.size(); ++i) {
        if ((mask >> i) & 1U) {
          j[all[i].first].insert(all[i].second);
        }
      }
      if (is_topology(cat, j)) {
        out.push_back(std::move(j));
      }
    }
    return out;
  }

  Covering subcategory_covering(FiniteCategory const& cat, std::vector<ObjectIndex> const& objects) {
    Covering j(cat.object_count());
    for (ObjectIndex x = 0; x < cat.object_count(); ++x) {
      for (auto const& s : sieves(cat, x)) {
        bool surjective = true;
        for (auto w : objects) {
          for (auto h : all_into(cat, x)) {
            if (cat.dom(h) != w) {
              continue;
            }
            bool hit = false;
            for (auto g : s) {
              for (auto u : all_into(cat, cat.dom(g))) {
                if (cat.dom(u) == w && cat.compose(g, u) == h) {
                  hit = true;
                }
              }
            }
            surjective = surjective && hit;
          }
        }
        if (surjective) {
          j[x].insert(s);
        }
      }
    }
    return j;
  }

  Covering to_covering(finsite::GrothendieckTopology const& j) {
    auto const& cat = j.category();
    Covering out(cat.object_count());
    for (ObjectIndex x = 0; x < cat.object_count(); ++x) {
      for (auto const& s : j.covering(x)) {
        out[x].insert(s.members());
      }
    }
    return out;
  }

  std::vector<std::vector<std::size_t>> families(finsite::SetPresheaf const& f, MorphSet const& arrows) {
    auto const& cat = f.category();
    // Constraints m[b] = F(k)(m[a]) whenever arrows[b] = arrows[a] k.
    struct Link {
      std::size_t a;
      MorphismIndex k;
      std::size_t b;
    };
    std::vector<Link> links;
    for (std::size_t a = 0; a < arrows.size(); ++a) {
      for (auto k : all_into(cat, cat.dom(arrows[a]))) {
        auto it = std::lower_bound(arrows.begin(), arrows.end(), cat.compose(arrows[a], k));
        if (it == arrows.end() || *it != cat.compose(arrows[a], k)) {
          throw std::runtime_error("oracle families: arrows not closed");
        }
        links.push_back({a, k, static_cast<std::size_t>(it - arrows.begin())});
      }
    }
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> m(arrows.size());
    std::function<void(std::size_t)> go = [&](std::size_t i) {
      if (i == arrows.size()) {
        out.push_back(m);
        return;
      }
      for (std::size_t v = 0; v < f.size(cat.dom(arrows[i])); ++v) {
        m[i] = v;
        bool ok = true;
        for (auto const& l : links) {
          if (std::max(l.a, l.b) == i && m[l.b] != f.apply(l.k, m[l.a])) {
            ok = false;
            break;
          }
        }
        if (ok) {
          go(i + 1);
        }
      }
    };
    go(0);
    return out;
  }

  bool is_sheaf(finsite::SetPresheaf const& f, Covering const& j) {
    auto const& cat = f.category();
    for (ObjectIndex x = 0; x < cat.object_count(); ++x) {
      for (auto const& s : j[x]) {
        auto fams = families(f, s);
        std::set<std::vector<std::size_t>> images;
        for (std::size_t a = 0; a < f.size(x); ++a) {
          std::vector<std::size_t> m;
          for (auto h : s) {
            m.push_back(f.apply(h, a));
          }
          images.insert(m);
        }
        if (images.size() != f.size(x) || fams.size() != f.size(x)) {
          return false;
        }
      }
    }
    return true;
  }

  finsite::SetPresheaf colimit_half_sheafify(finsite::SetPresheaf const& f, Covering const& j) {
    auto const& cat = f.category();
    std::size_t const n = cat.object_count();
    struct Node {
      MorphSet sieve;
      std::vector<std::size_t> family;
    };
    std::vector<std::vector<Node>> nodes(n);
    std::vector<std::map<std::pair<MorphSet, std::vector<std::size_t>>, std::size_t>> lookup(n);
    for (ObjectIndex x = 0; x < n; ++x) {
      for (auto const& s : j[x]) {
        for (auto& m : families(f, s)) {
          lookup[x][{s, m}] = nodes[x].size();
          nodes[x].push_back({s, std::move(m)});
        }
      }
    }
    std::vector<std::vector<std::size_t>> parent(n);
    auto find = [&](ObjectIndex x, std::size_t a) {
      while (parent[x][a] != a) {
        a = parent[x][a] = parent[x][parent[x][a]];
      }
      return a;
    };
    for (ObjectIndex x = 0; x < n; ++x) {
      parent[x].resize(nodes[x].size());
      std::iota(parent[x].begin(), parent[x].end(), 0);
      for (std::size_t a = 0; a < nodes[x].size(); ++a) {
        auto const& big = nodes[x][a].sieve;
        for (auto const& small : j[x]) {
          if (!std::includes(big.begin(), big.end(), small.begin(), small.end())) {
            continue;
          }
          std::vector<std::size_t> restricted;
          for (auto h : small) {
            auto pos = std::lower_bound(big.begin(), big.end(), h) - big.begin();
            restricted.push_back(nodes[x][a].family[pos]);
          }
          auto b = lookup[x].at({small, restricted});
          parent[x][find(x, a)] = find(x, b);
        }
      }
    }
    std::vector<std::vector<std::string>> elements(n);
    std::vector<std::map<std::size_t, std::size_t>> class_index(n);
    std::vector<std::vector<std::size_t>> representative(n);
    for (ObjectIndex x = 0; x < n; ++x) {
      for (std::size_t a = 0; a < nodes[x].size(); ++a) {
        auto r = find(x, a);
        if (class_index[x].emplace(r, elements[x].size()).second) {
          elements[x].push_back("c" + std::to_string(elements[x].size()));
          representative[x].push_back(a);
        }
      }
    }
    std::vector<std::vector<std::size_t>> maps(cat.morphism_count());
    for (MorphismIndex k = 0; k < cat.morphism_count(); ++k) {
      ObjectIndex w = cat.dom(k);
      ObjectIndex x = cat.cod(k);
      for (auto a : representative[x]) {
        auto const& node = nodes[x][a];
        auto pulled = pullback(cat, node.sieve, k);
        std::vector<std::size_t> m;
        for (auto h : pulled) {
          auto pos = std::lower_bound(node.sieve.begin(), node.sieve.end(), cat.compose(k, h)) - node.sieve.begin();
          m.push_back(node.family[pos]);
        }
        maps[k].push_back(class_index[w].at(find(w, lookup[w].at({pulled, m}))));
      }
    }
    return finsite::SetPresheaf(cat, std::move(elements), std::move(maps));
  }

  bool verify_set_iso(finsite::SetPresheaf const& a, finsite::SetPresheaf const& b,
                      finsite::SetNatTrans const& eta) {
    auto const& cat = a.category();
    if (eta.components.size() != cat.object_count()) {
      return false;
    }
    for (ObjectIndex x = 0; x < cat.object_count(); ++x) {
      auto const& c = eta.components[x];
      if (a.size(x) != b.size(x) || c.size() != a.size(x)) {
        return false;
      }
      std::set<std::size_t> image(c.begin(), c.end());
      if (image.size() != c.size() || (!c.empty() && *image.rbegin() >= b.size(x))) {
        return false;
      }
    }
    for (MorphismIndex k = 0; k < cat.morphism_count(); ++k) {
      for (std::size_t i = 0; i < a.size(cat.cod(k)); ++i) {
        if (eta.components[cat.dom(k)][a.apply(k, i)] != b.apply(k, eta.components[cat.cod(k)][i])) {
          return false;
        }
      }
    }
    return true;
  }

  finsite::SetPresheaf points(finsite::LinearPresheaf const& f) {
    auto const& cat = f.category();
    auto const& k = f.field();
    std::uint64_t const p = k.characteristic();
    if (p == 0) {
      throw std::runtime_error("points needs a finite field");
    }
    auto index_of = [&](std::vector<std::uint64_t> const& v) {
      std::size_t i = 0;
      for (std::size_t c = v.size(); c-- > 0;) {
        i = i * p + v[c];
      }
      return i;
    };
    auto vector_of = [&](std::size_t i, std::size_t d) {
      std::vector<std::uint64_t> v(d);
      for (auto& e : v) {
        e = i % p;
        i /= p;
      }
      return v;
    };
    auto count = [&](std::size_t d) {
      std::size_t n = 1;
      for (std::size_t i = 0; i < d; ++i) {
        n *= p;
      }
      return n;
    };
    std::vector<std::vector<std::string>> elements(cat.object_count());
    for (ObjectIndex x = 0; x < cat.object_count(); ++x) {
      for (std::size_t i = 0; i < count(f.dim(x)); ++i) {
        std::string name;
        for (auto e : vector_of(i, f.dim(x))) {
          name += (name.empty() ? "" : ",") + std::to_string(e);
        }
        elements[x].push_back("(" + name + ")");
      }
    }
    std::vector<std::vector<std::size_t>> maps(cat.morphism_count());
    for (MorphismIndex m = 0; m < cat.morphism_count(); ++m) {
      auto const& a = f.map(m);
      for (std::size_t i = 0; i < count(f.dim(cat.cod(m))); ++i) {
        auto v = vector_of(i, f.dim(cat.cod(m)));
        std::vector<std::uint64_t> w(f.dim(cat.dom(m)), 0);
        for (std::size_t r = 0; r < w.size(); ++r) {
          for (std::size_t c = 0; c < v.size(); ++c) {
            w[r] = (w[r] + k.residue(a(r, c)) * v[c]) % p;
          }
        }
        maps[m].push_back(index_of(w));
      }
    }
    return finsite::SetPresheaf(cat, std::move(elements), std::move(maps));
  }

  WordCategory involution_by_words() {
    // A word lists letters left to right as a composite: "fh" is f after h.
    auto cod_of = [](std::string const& w) { return w == "1y" || w.front() == 'f' ? 'y' : 'x'; };
    auto dom_of = [](std::string const& w) { return w == "1y" ? 'y' : 'x'; };
    auto reduce = [](std::string w) {
      for (auto pos = w.find("hh"); pos != std::string::npos; pos = w.find("hh")) {
        w.erase(pos, 2);
      }
      return w;
    };
    auto letters = [](std::string const& w) { return w == "1x" || w == "1y" ? std::string() : w; };
    auto mul = [&](std::string const& g, std::string const& f) -> std::optional<std::string> {
      if (dom_of(g) != cod_of(f)) {
        return std::nullopt;
      }
      auto w = reduce(letters(g) + letters(f));
      if (w.empty()) {
        return std::string(1, '1') + cod_of(g);
      }
      return w;
    };
    std::set<std::string> words{"1x", "1y", "h", "f"};
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<std::string> current(words.begin(), words.end());
      for (auto const& a : current) {
        for (auto const& b : current) {
          if (auto c = mul(a, b); c && words.insert(*c).second) {
            grew = true;
          }
        }
      }
    }
    WordCategory out;
    out.words.assign(words.begin(), words.end());
    for (auto const& a : out.words) {
      for (auto const& b : out.words) {
        if (auto c = mul(a, b)) {
          out.compose[{a, b}] = *c;
        }
      }
    }
    return out;
  }

  std::size_t CosetSpace::index_of(std::vector<std::size_t> const& coset) const {
    for (std::size_t i = 0; i < cosets.size(); ++i) {
      if (cosets[i] == coset) {
        return i;
      }
    }
    throw std::runtime_error("not a coset");
  }

  CosetSpace left_cosets(finsite::FiniteGroup const& g, std::vector<std::size_t> const& h) {
    CosetSpace out;
    for (std::size_t x = 0; x < g.order(); ++x) {
      std::vector<std::size_t> c;
      for (auto e : h) {
        c.push_back(g.table()[x][e]);
      }
      std::sort(c.begin(), c.end());
      if (std::find(out.cosets.begin(), out.cosets.end(), c) == out.cosets.end()) {
        out.cosets.push_back(std::move(c));
      }
    }
    return out;
  }

  namespace {
    std::size_t table_inverse(finsite::FiniteGroup const& g, std::size_t a) {
      std::size_t e = 0;
      while (g.table()[e][e] != e) {
        ++e;
      }
      for (std::size_t b = 0; b < g.order(); ++b) {
        if (g.table()[a][b] == e) {
          return b;
        }
      }
      throw std::runtime_error("no inverse");
    }
  }  // namespace

  std::vector<std::vector<std::size_t>> gmaps(finsite::FiniteGroup const& g, std::vector<std::size_t> const& h,
                                              std::vector<std::size_t> const& k) {
    auto const& t = g.table();
    auto src = left_cosets(g, h);
    auto dst = left_cosets(g, k);
    std::set<std::vector<std::size_t>> out;
    for (std::size_t a = 0; a < g.order(); ++a) {
      auto ai = table_inverse(g, a);
      bool ok = std::all_of(h.begin(), h.end(), [&](std::size_t e) {
        return std::find(k.begin(), k.end(), t[t[ai][e]][a]) != k.end();
      });
      if (!ok) {
        continue;
      }
      std::vector<std::size_t> fn;
      for (auto const& c : src.cosets) {
        std::vector<std::size_t> img;
        for (auto e : k) {
          img.push_back(t[t[c.front()][a]][e]);
        }
        std::sort(img.begin(), img.end());
        fn.push_back(dst.index_of(img));
      }
      out.insert(fn);
    }
    return {out.begin(), out.end()};
  }

  std::size_t normalizer_order(finsite::FiniteGroup const& g, std::vector<std::size_t> const& h) {
    auto const& t = g.table();
    std::set<std::size_t> hs(h.begin(), h.end());
    std::size_t count = 0;
    for (std::size_t a = 0; a < g.order(); ++a) {
      auto ai = table_inverse(g, a);
      std::set<std::size_t> conj;
      for (auto e : h) {
        conj.insert(t[t[a][e]][ai]);
      }
      count += conj == hs;
    }
    return count;
  }

  // ---- algebras over F_p ------------------------------------------------------

  namespace {

    using Vec = std::vector<std::int64_t>;
    using Mat = std::vector<Vec>;  // row-major

    std::int64_t mod(std::int64_t a, std::uint32_t p) { return ((a % p) + p) % p; }

    std::int64_t inv_mod(std::int64_t a, std::uint32_t p) {
      std::int64_t r = 1;
      std::int64_t b = mod(a, p);
      for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
        if (e & 1U) {
          r = r * b % p;
        }
        b = b * b % p;
      }
      return r;
    }

    Vec mul(Table const& t, Vec const& x, Vec const& y) {
      Vec out(t.dim(), 0);
      for (std::size_t i = 0; i < t.dim(); ++i) {
        if (x[i] == 0) {
          continue;
        }
        for (std::size_t j = 0; j < t.dim(); ++j) {
          if (y[j] == 0) {
            continue;
          }
          for (std::size_t k = 0; k < t.dim(); ++k) {
            out[k] = mod(out[k] + x[i] * y[j] % t.p * t.c[i][j][k], t.p);
          }
        }
      }
      return out;
    }

    // Rank of a list of vectors and, optionally, the inverse of the square
    // matrix whose columns they are.
    std::optional<Mat> inverse_of_columns(std::vector<Vec> const& cols, std::uint32_t p) {
      std::size_t n = cols.size();
      Mat a(n, Vec(2 * n, 0));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          a[i][j] = cols[j][i];
        }
        a[i][n + i] = 1;
      }
      for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c] == 0) {
          ++piv;
        }
        if (piv == n) {
          return std::nullopt;
        }
        std::swap(a[piv], a[c]);
        auto iv = inv_mod(a[c][c], p);
        for (auto& v : a[c]) {
          v = v * iv % p;
        }
        for (std::size_t r = 0; r < n; ++r) {
          if (r != c && a[r][c] != 0) {
            auto f = a[r][c];
            for (std::size_t j = 0; j < 2 * n; ++j) {
              a[r][j] = mod(a[r][j] - f * a[c][j], p);
            }
          }
        }
      }
      Mat out(n, Vec(n));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          out[i][j] = a[i][n + j];
        }
      }
      return out;
    }

    std::size_t rank(std::vector<Vec> rows, std::uint32_t p) {
      std::size_t r = 0;
      std::size_t cols = rows.empty() ? 0 : rows[0].size();
      for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c] == 0) {
          ++piv;
        }
        if (piv == rows.size()) {
          continue;
        }
        std::swap(rows[piv], rows[r]);
        auto iv = inv_mod(rows[r][c], p);
        for (std::size_t i = 0; i < rows.size(); ++i) {
          if (i != r && rows[i][c] != 0) {
            auto f = rows[i][c] * iv % p;
            for (std::size_t j = 0; j < cols; ++j) {
              rows[i][j] = mod(rows[i][j] - f * rows[r][j], p);
            }
          }
        }
        ++r;
      }
      return r;
    }

    // Coefficients a_0..a_{d-1} with x^d = sum a_i x^i, d minimal.
    std::vector<std::int64_t> minimal_relation(Table const& t, Vec const& x) {
      std::vector<Vec> powers{t.unit};
      while (true) {
        Vec next = mul(t, powers.back(), x);
        auto with = powers;
        with.push_back(next);
        if (rank(with, t.p) < with.size()) {
          // Solve next = sum a_i powers[i] via the inverse on a spanning
          // coordinate subset: brute force over F_p^d is enough here.
          std::size_t d = powers.size();
          std::vector<std::int64_t> a(d, 0);
          while (true) {
            Vec s(t.dim(), 0);
            for (std::size_t i = 0; i < d; ++i) {
              for (std::size_t k = 0; k < t.dim(); ++k) {
                s[k] = mod(s[k] + a[i] * powers[i][k], t.p);
              }
            }
            if (s == next) {
              return a;
            }
            std::size_t i = 0;
            while (i < d && ++a[i] == static_cast<std::int64_t>(t.p)) {
              a[i++] = 0;
            }
            if (i == d) {
              throw std::runtime_error("relation not found");
            }
          }
        }
        powers.push_back(next);
      }
    }

    bool satisfies(Table const& t, Vec const& x, std::vector<std::int64_t> const& rel) {
      Vec power = t.unit;
      Vec s(t.dim(), 0);
      for (std::size_t i = 0; i < rel.size(); ++i) {
        for (std::size_t k = 0; k < t.dim(); ++k) {
          s[k] = mod(s[k] + rel[i] * power[k], t.p);
        }
        power = mul(t, power, x);
      }
      return s == power;
    }

  }  // namespace

  Table matrix_algebra(std::uint32_t p, std::size_t n) {
    Table t;
    t.p = p;
    std::size_t d = n * n;
    t.c.assign(d, std::vector<std::vector<std::int64_t>>(d, std::vector<std::int64_t>(d, 0)));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          for (std::size_t l = 0; l < n; ++l) {
            if (j == k) {
              t.c[i * n + j][k * n + l][i * n + l] = 1;
            }
          }
        }
      }
    }
    t.unit.assign(d, 0);
    for (std::size_t i = 0; i < n; ++i) {
      t.unit[i * n + i] = 1;
    }
    return t;
  }

  Table from_library(finsite::FiniteDimAlgebra const& a) {
    auto const& k = a.field();
    Table t;
    t.p = k.characteristic();
    auto dense = a.dense();
    t.c.resize(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
      for (std::size_t j = 0; j < a.dim(); ++j) {
        std::vector<std::int64_t> row;
        for (auto const& s : dense[i][j]) {
          row.push_back(static_cast<std::int64_t>(k.residue(s)));
        }
        t.c[i].push_back(std::move(row));
      }
    }
    for (auto const& s : a.unit()) {
      t.unit.push_back(static_cast<std::int64_t>(k.residue(s)));
    }
    return t;
  }

  bool is_associative_unital(Table const& t) {
    std::size_t n = t.dim();
    auto basis = [&](std::size_t i) {
      Vec v(n, 0);
      v[i] = 1;
      return v;
    };
    for (std::size_t i = 0; i < n; ++i) {
      if (mul(t, t.unit, basis(i)) != basis(i) || mul(t, basis(i), t.unit) != basis(i)) {
        return false;
      }
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          if (mul(t, t.c[i][j], basis(k)) != mul(t, basis(i), t.c[j][k])) {
            return false;
          }
        }
      }
    }
    return true;
  }

  std::optional<std::vector<std::vector<std::int64_t>>> find_algebra_iso(Table const& a, Table const& b, Vec const& u,
                                                                         Vec const& v) {
    if (a.dim() != b.dim() || a.p != b.p) {
      return std::nullopt;
    }
    std::size_t const n = a.dim();
    std::uint32_t const p = a.p;
    // Words in u, v (0 = u, 1 = v) whose values span a.
    std::vector<std::vector<int>> words{{}};
    std::vector<Vec> values{a.unit};
    std::vector<std::vector<int>> frontier{{}};
    for (int len = 1; len <= 2 * static_cast<int>(n) && values.size() < n; ++len) {
      std::vector<std::vector<int>> next;
      for (auto const& w : frontier) {
        for (int letter : {0, 1}) {
          auto w2 = w;
          w2.push_back(letter);
          Vec val = a.unit;
          for (int l : w2) {
            val = mul(a, val, l == 0 ? u : v);
          }
          auto with = values;
          with.push_back(val);
          if (rank(with, p) > values.size()) {
            values.push_back(val);
            words.push_back(w2);
          }
          next.push_back(w2);
        }
      }
      frontier = std::move(next);
    }
    if (values.size() < n) {
      return std::nullopt;
    }
    auto winv = *inverse_of_columns(values, p);
    auto rel_u = minimal_relation(a, u);
    auto rel_v = minimal_relation(a, v);
    std::vector<Vec> all;
    Vec x(n, 0);
    while (true) {
      all.push_back(x);
      std::size_t i = 0;
      while (i < n && ++x[i] == static_cast<std::int64_t>(p)) {
        x[i++] = 0;
      }
      if (i == n) {
        break;
      }
    }
    std::vector<Vec> cand_u;
    std::vector<Vec> cand_v;
    for (auto const& y : all) {
      if (satisfies(b, y, rel_u)) {
        cand_u.push_back(y);
      }
      if (satisfies(b, y, rel_v)) {
        cand_v.push_back(y);
      }
    }
    for (auto const& X : cand_u) {
      for (auto const& Y : cand_v) {
        std::vector<Vec> images;
        for (auto const& w : words) {
          Vec val = b.unit;
          for (int l : w) {
            val = mul(b, val, l == 0 ? X : Y);
          }
          images.push_back(val);
        }
        // P = V W^-1, column j = image of basis vector j.
        std::vector<Vec> pcols(n, Vec(n, 0));
        for (std::size_t j = 0; j < n; ++j) {
          for (std::size_t r = 0; r < n; ++r) {
            std::int64_t s = 0;
            for (std::size_t c = 0; c < n; ++c) {
              s = mod(s + images[c][r] * winv[c][j], p);
            }
            pcols[j][r] = s;
          }
        }
        if (!inverse_of_columns(pcols, p)) {
          continue;
        }
        auto apply = [&](Vec const& z) {
          Vec out(n, 0);
          for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t r = 0; r < n; ++r) {
              out[r] = mod(out[r] + z[j] * pcols[j][r], p);
            }
          }
          return out;
        };
        bool hom = apply(a.unit) == b.unit;
        for (std::size_t i = 0; hom && i < n; ++i) {
          for (std::size_t j = 0; hom && j < n; ++j) {
            hom = apply(a.c[i][j]) == mul(b, pcols[i], pcols[j]);
          }
        }
        if (hom) {
          return pcols;
        }
      }
    }
    return std::nullopt;
  }

  std::vector<std::vector<std::optional<MorphismIndex>>> category_algebra(FiniteCategory const& cat) {
    std::size_t n = cat.morphism_count();
    std::vector<std::vector<std::optional<MorphismIndex>>> t(n, std::vector<std::optional<MorphismIndex>>(n));
    for (MorphismIndex g = 0; g < n; ++g) {
      for (MorphismIndex f = 0; f < n; ++f) {
        if (cat.dom(g) == cat.cod(f)) {
          t[g][f] = cat.compose(g, f);
        }
      }
    }
    return t;
  }

}  // namespace oracle
