#include "finsite/ei_dense.hpp"

#include <algorithm>
#include <map>

#include "finsite/errors.hpp"
#include "finsite/structure.hpp"

namespace finsite {

  namespace {

    // One factor F(y)^H of F^a(x).
    struct Orbit {
      ObjectIndex y;
      MorphismIndex rep;
      std::vector<MorphismIndex> stabilizer;
    };

    struct Layout {
      std::vector<std::vector<Orbit>> orbits;  // per object x
    };

    Layout layout(FiniteCategory const& cat) {
      if (!is_ei(cat)) {
        throw PreconditionError("the fixed-point formula needs an EI category");
      }
      IsoClassPoset poset(cat);
      Layout out;
      out.orbits.resize(cat.object_count());
      for (ObjectIndex x = 0; x < cat.object_count(); ++x) {
        for (std::size_t c = 0; c < poset.class_count(); ++c) {
          if (!poset.is_minimal_class(c)) {
            continue;
          }
          ObjectIndex y = poset.classes()[c].front();
          auto aut = cat.hom(y, y);
          std::vector<bool> seen(cat.morphism_count(), false);
          for (auto f : cat.hom(y, x)) {
            if (seen[f]) {
              continue;
            }
            Orbit o{y, f, {}};
            for (auto a : aut) {
              auto fa = cat.compose(f, a);
              seen[fa] = true;
              if (fa == f) {
                o.stabilizer.push_back(a);
              }
            }
            out.orbits[x].push_back(std::move(o));
          }
        }
      }
      return out;
    }

    // For k : x' -> x and the j-th orbit at x', the orbit i at x and the
    // automorphism a with k rep'_j = rep_i a.
    std::pair<std::size_t, MorphismIndex> locate(FiniteCategory const& cat, std::vector<Orbit> const& at_x,
                                                 MorphismIndex target) {
      for (std::size_t i = 0; i < at_x.size(); ++i) {
        auto const& o = at_x[i];
        if (o.y != cat.dom(target)) {
          continue;
        }
        for (auto a : cat.hom(o.y, o.y)) {
          if (cat.compose(o.rep, a) == target) {
            return {i, a};
          }
        }
      }
      throw Error("internal: composite is not in any automorphism orbit");
    }

  }  // namespace

  SetPresheaf sheafify_ei_dense(SetPresheaf const& f) {
    auto const& cat = f.category();
    auto lay = layout(cat);
    std::size_t const n = cat.object_count();
    // Fixed-point sets per (x, orbit).
    std::vector<std::vector<std::vector<std::size_t>>> fixed(n);
    std::vector<std::vector<std::vector<std::size_t>>> tuples(n);
    std::vector<std::map<std::vector<std::size_t>, std::size_t>> index(n);
    std::vector<std::vector<std::string>> elements(n);
    for (ObjectIndex x = 0; x < n; ++x) {
      for (auto const& o : lay.orbits[x]) {
        std::vector<std::size_t> pts;
        for (std::size_t e = 0; e < f.size(o.y); ++e) {
          if (std::all_of(o.stabilizer.begin(), o.stabilizer.end(), [&](auto a) { return f.apply(a, e) == e; })) {
            pts.push_back(e);
          }
        }
        fixed[x].push_back(std::move(pts));
      }
      // Cartesian product in lexicographic order, first factor slowest.
      std::vector<std::size_t> pick(fixed[x].size(), 0);
      bool any = std::all_of(fixed[x].begin(), fixed[x].end(), [](auto const& v) { return !v.empty(); });
      while (any) {
        std::vector<std::size_t> t;
        std::string name = "(";
        for (std::size_t i = 0; i < pick.size(); ++i) {
          t.push_back(fixed[x][i][pick[i]]);
          name += (i ? "," : "") + f.elements(lay.orbits[x][i].y)[t.back()];
        }
        index[x][t] = tuples[x].size();
        tuples[x].push_back(std::move(t));
        elements[x].push_back(name + ")");
        std::size_t i = pick.size();
        while (i > 0) {
          --i;
          if (++pick[i] < fixed[x][i].size()) {
            break;
          }
          pick[i] = 0;
          if (i == 0) {
            any = false;
          }
        }
        if (pick.empty()) {
          any = false;
        }
      }
    }
    std::vector<std::vector<std::size_t>> maps(cat.morphism_count());
    for (MorphismIndex k = 0; k < cat.morphism_count(); ++k) {
      ObjectIndex x = cat.cod(k);
      ObjectIndex xp = cat.dom(k);
      std::vector<std::pair<std::size_t, MorphismIndex>> where;
      for (auto const& o : lay.orbits[xp]) {
        where.push_back(locate(cat, lay.orbits[x], cat.compose(k, o.rep)));
      }
      for (auto const& t : tuples[x]) {
        std::vector<std::size_t> r;
        for (auto [i, a] : where) {
          r.push_back(f.apply(a, t[i]));
        }
        maps[k].push_back(index[xp].at(r));
      }
    }
    return SetPresheaf(cat, std::move(elements), std::move(maps));
  }

  LinearPresheaf sheafify_ei_dense(LinearPresheaf const& f) {
    auto const& cat = f.category();
    auto const& k = f.field();
    auto lay = layout(cat);
    std::size_t const n = cat.object_count();
    std::vector<std::vector<Subspace>> fixed(n);
    std::vector<std::vector<std::size_t>> offsets(n);
    std::vector<std::size_t> dims(n, 0);
    for (ObjectIndex x = 0; x < n; ++x) {
      for (auto const& o : lay.orbits[x]) {
        std::size_t d = f.dim(o.y);
        Matrix eqs(0, d);
        for (auto a : o.stabilizer) {
          eqs = linalg::vconcat(eqs, linalg::subtract(k, f.map(a), Matrix::identity(d)));
        }
        Matrix basis = eqs.rows() == 0 ? Matrix::identity(d) : linalg::nullspace(k, eqs);
        offsets[x].push_back(dims[x]);
        dims[x] += basis.cols();
        fixed[x].emplace_back(k, std::move(basis));
      }
    }
    std::vector<Matrix> maps(cat.morphism_count());
    for (MorphismIndex m = 0; m < cat.morphism_count(); ++m) {
      ObjectIndex x = cat.cod(m);
      ObjectIndex xp = cat.dom(m);
      Matrix out(dims[xp], dims[x]);
      for (std::size_t j = 0; j < lay.orbits[xp].size(); ++j) {
        auto [i, a] = locate(cat, lay.orbits[x], cat.compose(m, lay.orbits[xp][j].rep));
        auto block = fixed[xp][j].coordinates(linalg::multiply(k, f.map(a), fixed[x][i].basis()));
        for (std::size_t r = 0; r < block.rows(); ++r) {
          for (std::size_t c = 0; c < block.cols(); ++c) {
            out(offsets[xp][j] + r, offsets[x][i] + c) = block(r, c);
          }
        }
      }
      maps[m] = std::move(out);
    }
    return LinearPresheaf(cat, k, std::move(dims), std::move(maps));
  }

  Presheaf sheafify_ei_dense(Presheaf const& f) {
    return std::visit([](auto const& p) -> Presheaf { return sheafify_ei_dense(p); }, f);
  }

}  // namespace finsite
