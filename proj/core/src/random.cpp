#include "finsite/random.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "finsite/errors.hpp"

namespace finsite {

  Scalar random_scalar(Field const& k, Rng& rng) {
    if (k.is_finite()) {
      return k.from_int(static_cast<std::int64_t>(rng() % k.characteristic()));
    }
    return Scalar(static_cast<std::int64_t>(rng() % 7) - 3);
  }

  Matrix random_invertible(Field const& k, std::size_t n, Rng& rng) {
    while (true) {
      Matrix m(n, n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          m(i, j) = random_scalar(k, rng);
        }
      }
      if (linalg::is_invertible(k, m)) {
        return m;
      }
    }
  }

  SetPresheaf random_set_presheaf(FiniteCategory const& cat, Rng& rng, std::size_t max_generators,
                                  std::size_t max_relations) {
    if (cat.object_count() == 0) {
      return empty_presheaf(cat);
    }
    std::size_t gens = 1 + rng() % std::max<std::size_t>(max_generators, 1);
    std::vector<ObjectIndex> tops;
    for (std::size_t i = 0; i < gens; ++i) {
      tops.push_back(rng() % cat.object_count());
    }
    // Global ids for the elements (generator i, u : x -> tops[i]).
    std::vector<std::vector<std::pair<std::size_t, MorphismIndex>>> at(cat.object_count());
    std::vector<std::pair<ObjectIndex, std::size_t>> where;
    std::map<std::pair<std::size_t, MorphismIndex>, std::size_t> id;
    for (ObjectIndex x = 0; x < cat.object_count(); ++x) {
      for (std::size_t i = 0; i < gens; ++i) {
        for (auto u : cat.hom(x, tops[i])) {
          id[{i, u}] = where.size();
          where.emplace_back(x, at[x].size());
          at[x].emplace_back(i, u);
        }
      }
    }
    std::vector<std::size_t> parent(where.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t a) {
      while (parent[a] != a) {
        a = parent[a] = parent[parent[a]];
      }
      return a;
    };
    std::size_t rels = rng() % (max_relations + 1);
    for (std::size_t r = 0; r < rels; ++r) {
      ObjectIndex x = rng() % cat.object_count();
      if (at[x].size() < 2) {
        continue;
      }
      auto a = rng() % at[x].size();
      auto b = rng() % at[x].size();
      parent[find(id[at[x][a]])] = find(id[at[x][b]]);
    }
    // Congruence closure: a ~ b at x forces F(f) a ~ F(f) b for f : w -> x.
    bool changed = true;
    while (changed) {
      changed = false;
      for (ObjectIndex x = 0; x < cat.object_count(); ++x) {
        for (std::size_t a = 0; a < at[x].size(); ++a) {
          for (std::size_t b = a + 1; b < at[x].size(); ++b) {
            if (find(id[at[x][a]]) != find(id[at[x][b]])) {
              continue;
            }
            for (auto f : cat.into(x)) {
              auto [ia, ua] = at[x][a];
              auto [ib, ub] = at[x][b];
              auto p = find(id[{ia, cat.compose(ua, f)}]);
              auto q = find(id[{ib, cat.compose(ub, f)}]);
              if (p != q) {
                parent[p] = q;
                changed = true;
              }
            }
          }
        }
      }
    }
    std::vector<std::vector<std::string>> elements(cat.object_count());
    std::vector<std::size_t> slot(where.size(), kNone);
    for (ObjectIndex x = 0; x < cat.object_count(); ++x) {
      for (auto const& [i, u] : at[x]) {
        auto root = find(id[{i, u}]);
        if (slot[root] == kNone) {
          slot[root] = elements[x].size();
          elements[x].push_back(cat.morphism_name(u) + "#" + std::to_string(i));
        }
      }
    }
    std::vector<std::vector<std::size_t>> maps(cat.morphism_count());
    for (MorphismIndex f = 0; f < cat.morphism_count(); ++f) {
      ObjectIndex y = cat.cod(f);
      maps[f].assign(elements[y].size(), kNone);
      for (auto const& [i, u] : at[y]) {
        maps[f][slot[find(id[{i, u}])]] = slot[find(id[{i, cat.compose(u, f)}])];
      }
    }
    return SetPresheaf(cat, std::move(elements), std::move(maps));
  }

  namespace {

    Matrix random_vector(Field const& k, std::size_t n, Rng& rng) {
      Matrix v(n, 1);
      for (std::size_t i = 0; i < n; ++i) {
        v(i, 0) = random_scalar(k, rng);
      }
      return v;
    }

    // Columns of the canonical basis of span(a | b).
    Matrix span_with(Field const& k, Matrix const& a, Matrix const& b) {
      return linalg::column_basis(k, linalg::hconcat(a, b));
    }

    // Basis [U | C] completed greedily with standard vectors; returns C and
    // the rows of the inverse that read off C-coordinates (the quotient map).
    std::pair<Matrix, Matrix> complement(Field const& k, Matrix const& u, std::size_t n) {
      Matrix basis = u;
      Matrix c(n, 0);
      for (std::size_t i = 0; i < n && basis.cols() < n; ++i) {
        Matrix e(n, 1);
        e(i, 0) = 1;
        auto next = linalg::hconcat(basis, e);
        if (linalg::rank(k, next) == next.cols()) {
          basis = std::move(next);
          c = linalg::hconcat(c, e);
        }
      }
      auto inv = *linalg::inverse(k, basis);
      Matrix q(c.cols(), n);
      for (std::size_t r = 0; r < c.cols(); ++r) {
        for (std::size_t j = 0; j < n; ++j) {
          q(r, j) = inv(u.cols() + r, j);
        }
      }
      return {c, q};
    }

    // Smallest submodule containing the given per-object subspaces.
    void close_submodule(ModulePresheaf const& m, std::vector<Matrix>& sub) {
      auto const& cat = m.category();
      auto const& k = m.field();
      bool changed = true;
      while (changed) {
        changed = false;
        for (ObjectIndex x = 0; x < cat.object_count(); ++x) {
          Matrix grown = sub[x];
          for (std::size_t i = 0; i < m.ring().algebra(x).dim(); ++i) {
            grown = span_with(k, grown, linalg::multiply(k, m.action(x, i), sub[x]));
          }
          for (auto f : cat.out_of(x)) {
            ObjectIndex y = cat.cod(f);
            grown = span_with(k, grown, linalg::multiply(k, m.map(f), sub[y]));
          }
          if (grown.cols() != sub[x].cols()) {
            sub[x] = std::move(grown);
            changed = true;
          }
        }
      }
    }

    ModulePresheaf quotient(ModulePresheaf const& m, std::vector<Matrix> const& sub) {
      auto const& cat = m.category();
      auto const& k = m.field();
      std::vector<Matrix> c;
      std::vector<Matrix> q;
      std::vector<std::size_t> dims;
      for (ObjectIndex x = 0; x < cat.object_count(); ++x) {
        auto [cx, qx] = complement(k, sub[x], m.dim(x));
        dims.push_back(cx.cols());
        c.push_back(std::move(cx));
        q.push_back(std::move(qx));
      }
      std::vector<Matrix> maps;
      for (MorphismIndex f = 0; f < cat.morphism_count(); ++f) {
        maps.push_back(linalg::multiply(k, q[cat.dom(f)], linalg::multiply(k, m.map(f), c[cat.cod(f)])));
      }
      std::vector<std::vector<Matrix>> action;
      for (ObjectIndex x = 0; x < cat.object_count(); ++x) {
        std::vector<Matrix> row;
        for (auto const& a : m.actions()[x]) {
          row.push_back(linalg::multiply(k, q[x], linalg::multiply(k, a, c[x])));
        }
        action.push_back(std::move(row));
      }
      return ModulePresheaf(m.ring(), LinearPresheaf(cat, k, std::move(dims), std::move(maps)), std::move(action));
    }

    // R(x)^{Hom(x,c)} with (r_u) f = (R(f)(r_u)) placed at u f.
    ModulePresheaf free_module(AlgebraPresheaf const& r, ObjectIndex c) {
      auto const& cat = r.category();
      auto const& k = r.field();
      std::vector<std::size_t> dims;
      for (ObjectIndex x = 0; x < cat.object_count(); ++x) {
        dims.push_back(cat.hom(x, c).size() * r.algebra(x).dim());
      }
      auto slot = [&](ObjectIndex x, MorphismIndex u) {
        auto h = cat.hom(x, c);
        return static_cast<std::size_t>(std::find(h.begin(), h.end(), u) - h.begin());
      };
      std::vector<Matrix> maps;
      for (MorphismIndex f = 0; f < cat.morphism_count(); ++f) {
        ObjectIndex x = cat.dom(f);
        ObjectIndex y = cat.cod(f);
        std::size_t dx = r.algebra(x).dim();
        std::size_t dy = r.algebra(y).dim();
        Matrix m(dims[x], dims[y]);
        auto hy = cat.hom(y, c);
        for (std::size_t s = 0; s < hy.size(); ++s) {
          std::size_t t = slot(x, cat.compose(hy[s], f));
          for (std::size_t i = 0; i < dx; ++i) {
            for (std::size_t j = 0; j < dy; ++j) {
              m(t * dx + i, s * dy + j) = r.map(f)(i, j);
            }
          }
        }
        maps.push_back(std::move(m));
      }
      std::vector<std::vector<Matrix>> action;
      for (ObjectIndex x = 0; x < cat.object_count(); ++x) {
        auto const& a = r.algebra(x);
        std::size_t copies = cat.hom(x, c).size();
        std::vector<Matrix> row;
        for (std::size_t i = 0; i < a.dim(); ++i) {
          Matrix block;
          for (std::size_t s = 0; s < copies; ++s) {
            block = linalg::direct_sum(block, a.right(i));
          }
          row.push_back(std::move(block));
        }
        action.push_back(std::move(row));
      }
      return ModulePresheaf(r, LinearPresheaf(cat, k, std::move(dims), std::move(maps)), std::move(action));
    }

  }  // namespace

  ModulePresheaf random_module_presheaf(AlgebraPresheaf const& r, Rng& rng, std::size_t max_dim,
                                        std::size_t max_generators) {
    auto const& cat = r.category();
    auto const& k = r.field();
    if (cat.object_count() == 0) {
      return zero_module(r);
    }
    std::size_t gens = 1 + rng() % std::max<std::size_t>(max_generators, 1);
    ModulePresheaf m = free_module(r, rng() % cat.object_count());
    for (std::size_t i = 1; i < gens; ++i) {
      m = direct_sum(m, free_module(r, rng() % cat.object_count()));
    }
    std::vector<Matrix> sub;
    for (ObjectIndex x = 0; x < cat.object_count(); ++x) {
      sub.emplace_back(m.dim(x), 0);
    }
    auto remaining = [&](std::vector<Matrix> const& s) {
      std::size_t left = 0;
      for (ObjectIndex x = 0; x < cat.object_count(); ++x) {
        left += m.dim(x) - s[x].cols();
      }
      return left;
    };
    // a random relation often generates a whole free summand; retry a few
    // times before accepting one that kills the module
    auto add_relation = [&](ObjectIndex x, bool optional) {
      for (int attempt = 0; attempt < 8; ++attempt) {
        auto trial = sub;
        trial[x] = span_with(k, trial[x], random_vector(k, m.dim(x), rng));
        close_submodule(m, trial);
        if (remaining(trial) > 0 || (!optional && attempt == 7)) {
          sub = std::move(trial);
          return;
        }
      }
    };
    std::size_t rels = rng() % 3;
    for (std::size_t i = 0; i < rels; ++i) {
      add_relation(rng() % cat.object_count(), true);
    }
    while (true) {
      ObjectIndex worst = kNone;
      for (ObjectIndex x = 0; x < cat.object_count(); ++x) {
        if (m.dim(x) - sub[x].cols() > max_dim) {
          worst = x;
          break;
        }
      }
      if (worst == kNone) {
        break;
      }
      add_relation(worst, false);
    }
    return quotient(m, sub);
  }

  LinearPresheaf random_linear_presheaf(FiniteCategory const& cat, Field const& k, Rng& rng, std::size_t max_dim) {
    auto r = AlgebraPresheaf::constant(cat, FiniteDimAlgebra::ground(k));
    return random_module_presheaf(r, rng, max_dim).underlying();
  }

  AlgebraModule random_algebra_module(FiniteDimAlgebra const& a, Rng& rng, std::size_t max_dim) {
    auto const& k = a.field();
    AlgebraModule m = regular_module(a);
    if (rng() % 2 == 1) {
      m = direct_sum(m, regular_module(a));
    }
    std::size_t const n = m.dim();
    Matrix sub(n, 0);
    auto close = [&]() {
      bool changed = true;
      while (changed) {
        Matrix grown = sub;
        for (auto const& act : m.actions()) {
          grown = span_with(k, grown, linalg::multiply(k, act, sub));
        }
        changed = grown.cols() != sub.cols();
        sub = std::move(grown);
      }
    };
    std::size_t rels = 1 + rng() % 2;
    for (std::size_t i = 0; i < rels; ++i) {
      sub = span_with(k, sub, random_vector(k, n, rng));
    }
    close();
    while (n - sub.cols() > max_dim) {
      sub = span_with(k, sub, random_vector(k, n, rng));
      close();
    }
    auto [c, q] = complement(k, sub, n);
    std::vector<Matrix> action;
    for (auto const& act : m.actions()) {
      action.push_back(linalg::multiply(k, q, linalg::multiply(k, act, c)));
    }
    return AlgebraModule(a, c.cols(), std::move(action));
  }

  ModulePresheaf random_gauge(ModulePresheaf const& m, Rng& rng) {
    auto const& cat = m.category();
    auto const& k = m.field();
    std::vector<Matrix> p;
    std::vector<Matrix> pinv;
    for (ObjectIndex x = 0; x < cat.object_count(); ++x) {
      p.push_back(random_invertible(k, m.dim(x), rng));
      pinv.push_back(*linalg::inverse(k, p.back()));
    }
    std::vector<Matrix> maps;
    for (MorphismIndex f = 0; f < cat.morphism_count(); ++f) {
      maps.push_back(linalg::multiply(k, p[cat.dom(f)], linalg::multiply(k, m.map(f), pinv[cat.cod(f)])));
    }
    std::vector<std::vector<Matrix>> action;
    for (ObjectIndex x = 0; x < cat.object_count(); ++x) {
      std::vector<Matrix> row;
      for (auto const& a : m.actions()[x]) {
        row.push_back(linalg::multiply(k, p[x], linalg::multiply(k, a, pinv[x])));
      }
      action.push_back(std::move(row));
    }
    return ModulePresheaf(m.ring(), LinearPresheaf(cat, k, m.underlying().dims(), std::move(maps)),
                          std::move(action));
  }

  AlgebraModule random_gauge(AlgebraModule const& n, Rng& rng) {
    auto const& k = n.field();
    auto p = random_invertible(k, n.dim(), rng);
    auto pinv = *linalg::inverse(k, p);
    std::vector<Matrix> action;
    for (auto const& a : n.actions()) {
      action.push_back(linalg::multiply(k, p, linalg::multiply(k, a, pinv)));
    }
    return AlgebraModule(n.algebra(), n.dim(), std::move(action));
  }

}  // namespace finsite
