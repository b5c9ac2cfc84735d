#include "finsite/presheaf.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "finsite/errors.hpp"

namespace finsite {

  SetPresheaf::SetPresheaf(FiniteCategory cat, std::vector<std::vector<std::string>> elements,
                           std::vector<std::vector<std::size_t>> maps)
      : cat_(std::move(cat)), elements_(std::move(elements)), maps_(std::move(maps)) {
    if (elements_.size() != cat_.object_count() || maps_.size() != cat_.morphism_count()) {
      throw InvalidData("presheaf must give a set for every object and a map for every morphism");
    }
    for (MorphismIndex f = 0; f < cat_.morphism_count(); ++f) {
      auto const& m = maps_[f];
      std::size_t const target = size(cat_.dom(f));
      if (m.size() != size(cat_.cod(f))) {
        throw InvalidData("map for " + cat_.morphism_name(f) + " has the wrong number of entries");
      }
      if (std::any_of(m.begin(), m.end(), [target](std::size_t v) { return v >= target; })) {
        throw InvalidData("map for " + cat_.morphism_name(f) + " leaves its codomain set");
      }
      if (cat_.is_identity(f)) {
        for (std::size_t i = 0; i < m.size(); ++i) {
          if (m[i] != i) {
            throw InvalidData("identity " + cat_.morphism_name(f) + " does not act trivially");
          }
        }
      }
    }
    for (MorphismIndex f = 0; f < cat_.morphism_count(); ++f) {
      for (MorphismIndex g : cat_.out_of(cat_.cod(f))) {
        MorphismIndex gf = cat_.compose(g, f);
        for (std::size_t i = 0; i < size(cat_.cod(g)); ++i) {
          if (maps_[gf][i] != maps_[f][maps_[g][i]]) {
            throw InvalidData("presheaf is not functorial on (" + cat_.morphism_name(g) + ","
                              + cat_.morphism_name(f) + ")");
          }
        }
      }
    }
  }

  std::size_t SetPresheaf::total_size() const {
    std::size_t n = 0;
    for (auto const& e : elements_) {
      n += e.size();
    }
    return n;
  }

  LinearPresheaf::LinearPresheaf(FiniteCategory cat, Field field, std::vector<std::size_t> dims,
                                 std::vector<Matrix> maps)
      : cat_(std::move(cat)), field_(field), dims_(std::move(dims)), maps_(std::move(maps)) {
    if (dims_.size() != cat_.object_count() || maps_.size() != cat_.morphism_count()) {
      throw InvalidData("presheaf must give a dimension for every object and a matrix for every morphism");
    }
    for (MorphismIndex f = 0; f < cat_.morphism_count(); ++f) {
      auto& m = maps_[f];
      if (m.rows() != dims_[cat_.dom(f)] || m.cols() != dims_[cat_.cod(f)]) {
        throw InvalidData("matrix for " + cat_.morphism_name(f) + " has shape " + std::to_string(m.rows()) + "x"
                          + std::to_string(m.cols()) + ", expected " + std::to_string(dims_[cat_.dom(f)]) + "x"
                          + std::to_string(dims_[cat_.cod(f)]));
      }
      for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
          m(i, j) = field_.reduce(m(i, j));
        }
      }
      if (cat_.is_identity(f) && m != Matrix::identity(m.rows())) {
        throw InvalidData("identity " + cat_.morphism_name(f) + " is not sent to the identity matrix");
      }
    }
    for (MorphismIndex f = 0; f < cat_.morphism_count(); ++f) {
      for (MorphismIndex g : cat_.out_of(cat_.cod(f))) {
        if (maps_[cat_.compose(g, f)] != linalg::multiply(field_, maps_[f], maps_[g])) {
          throw InvalidData("presheaf is not functorial on (" + cat_.morphism_name(g) + ","
                            + cat_.morphism_name(f) + ")");
        }
      }
    }
  }

  std::size_t LinearPresheaf::total_dim() const {
    return std::accumulate(dims_.begin(), dims_.end(), std::size_t{0});
  }

  FiniteCategory const& category_of(Presheaf const& f) {
    return std::visit([](auto const& p) -> FiniteCategory const& { return p.category(); }, f);
  }

  SetPresheaf terminal_presheaf(FiniteCategory const& cat) {
    return constant_presheaf(cat, 1);
  }

  SetPresheaf empty_presheaf(FiniteCategory const& cat) {
    return constant_presheaf(cat, 0);
  }

  SetPresheaf constant_presheaf(FiniteCategory const& cat, std::size_t n) {
    std::vector<std::string> names;
    std::vector<std::size_t> id;
    for (std::size_t i = 0; i < n; ++i) {
      names.push_back(n == 1 ? "*" : std::to_string(i));
      id.push_back(i);
    }
    return SetPresheaf(cat, std::vector<std::vector<std::string>>(cat.object_count(), names),
                       std::vector<std::vector<std::size_t>>(cat.morphism_count(), id));
  }

  SetPresheaf representable(FiniteCategory const& cat, ObjectIndex c) {
    std::vector<std::vector<std::string>> elements(cat.object_count());
    for (ObjectIndex x = 0; x < cat.object_count(); ++x) {
      for (auto u : cat.hom(x, c)) {
        elements[x].push_back(cat.morphism_name(u));
      }
    }
    auto position = [&](ObjectIndex x, MorphismIndex u) {
      auto h = cat.hom(x, c);
      return static_cast<std::size_t>(std::find(h.begin(), h.end(), u) - h.begin());
    };
    std::vector<std::vector<std::size_t>> maps(cat.morphism_count());
    for (MorphismIndex f = 0; f < cat.morphism_count(); ++f) {
      for (auto u : cat.hom(cat.cod(f), c)) {
        maps[f].push_back(position(cat.dom(f), cat.compose(u, f)));
      }
    }
    return SetPresheaf(cat, std::move(elements), std::move(maps));
  }

  LinearPresheaf zero_presheaf(FiniteCategory const& cat, Field const& k) {
    return constant_presheaf(cat, k, 0);
  }

  LinearPresheaf constant_presheaf(FiniteCategory const& cat, Field const& k, std::size_t n) {
    return LinearPresheaf(cat, k, std::vector<std::size_t>(cat.object_count(), n),
                          std::vector<Matrix>(cat.morphism_count(), Matrix::identity(n)));
  }

  LinearPresheaf linearize(SetPresheaf const& f, Field const& k) {
    auto const& cat = f.category();
    std::vector<std::size_t> dims;
    for (ObjectIndex x = 0; x < cat.object_count(); ++x) {
      dims.push_back(f.size(x));
    }
    std::vector<Matrix> maps;
    for (MorphismIndex m = 0; m < cat.morphism_count(); ++m) {
      Matrix a(f.size(cat.dom(m)), f.size(cat.cod(m)));
      for (std::size_t i = 0; i < f.size(cat.cod(m)); ++i) {
        a(f.apply(m, i), i) = 1;
      }
      maps.push_back(std::move(a));
    }
    return LinearPresheaf(cat, k, std::move(dims), std::move(maps));
  }

  bool is_natural(SetPresheaf const& f, SetPresheaf const& g, SetNatTrans const& eta) {
    auto const& cat = f.category();
    if (eta.components.size() != cat.object_count()) {
      return false;
    }
    for (ObjectIndex x = 0; x < cat.object_count(); ++x) {
      auto const& c = eta.components[x];
      if (c.size() != f.size(x) || std::any_of(c.begin(), c.end(), [&](std::size_t v) { return v >= g.size(x); })) {
        return false;
      }
    }
    for (MorphismIndex m = 0; m < cat.morphism_count(); ++m) {
      ObjectIndex x = cat.dom(m);
      ObjectIndex y = cat.cod(m);
      for (std::size_t i = 0; i < f.size(y); ++i) {
        if (eta.components[x][f.apply(m, i)] != g.apply(m, eta.components[y][i])) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_natural(LinearPresheaf const& f, LinearPresheaf const& g, LinearNatTrans const& eta) {
    auto const& cat = f.category();
    auto const& k = f.field();
    if (eta.components.size() != cat.object_count()) {
      return false;
    }
    for (ObjectIndex x = 0; x < cat.object_count(); ++x) {
      if (eta.components[x].rows() != g.dim(x) || eta.components[x].cols() != f.dim(x)) {
        return false;
      }
    }
    for (MorphismIndex m = 0; m < cat.morphism_count(); ++m) {
      auto lhs = linalg::multiply(k, eta.components[cat.dom(m)], f.map(m));
      auto rhs = linalg::multiply(k, g.map(m), eta.components[cat.cod(m)]);
      if (lhs != rhs) {
        return false;
      }
    }
    return true;
  }

  bool is_isomorphism(SetPresheaf const& f, SetPresheaf const& g, SetNatTrans const& eta) {
    if (!is_natural(f, g, eta)) {
      return false;
    }
    for (ObjectIndex x = 0; x < f.category().object_count(); ++x) {
      auto c = eta.components[x];
      std::sort(c.begin(), c.end());
      if (c.size() != g.size(x) || std::adjacent_find(c.begin(), c.end()) != c.end()) {
        return false;
      }
    }
    return true;
  }

  bool is_isomorphism(LinearPresheaf const& f, LinearPresheaf const& g, LinearNatTrans const& eta) {
    if (!is_natural(f, g, eta)) {
      return false;
    }
    for (auto const& c : eta.components) {
      if (!linalg::is_invertible(f.field(), c)) {
        return false;
      }
    }
    return true;
  }

  namespace {

    class SetIsoSearch {
     public:
      SetIsoSearch(SetPresheaf const& f, SetPresheaf const& g) : f_(f), g_(g), cat_(f.category()) {
        for (ObjectIndex x = 0; x < cat_.object_count(); ++x) {
          image_.emplace_back(f.size(x), kNone);
          used_.emplace_back(g.size(x), false);
        }
        // Objects with many incoming arrows first: their choices propagate
        // the furthest.
        for (ObjectIndex x = 0; x < cat_.object_count(); ++x) {
          order_.push_back(x);
        }
        std::stable_sort(order_.begin(), order_.end(),
                         [&](ObjectIndex a, ObjectIndex b) { return cat_.into(a).size() > cat_.into(b).size(); });
      }

      std::optional<SetNatTrans> run() {
        if (!search()) {
          return std::nullopt;
        }
        return SetNatTrans{image_};
      }

     private:
      struct Entry {
        ObjectIndex x;
        std::size_t i;
      };

      bool assign(ObjectIndex x, std::size_t i, std::size_t v) {
        std::vector<std::tuple<ObjectIndex, std::size_t, std::size_t>> queue{{x, i, v}};
        while (!queue.empty()) {
          auto [y, a, b] = queue.back();
          queue.pop_back();
          if (image_[y][a] != kNone) {
            if (image_[y][a] != b) {
              return false;
            }
            continue;
          }
          if (used_[y][b]) {
            return false;
          }
          image_[y][a] = b;
          used_[y][b] = true;
          trail_.push_back({y, a});
          for (auto m : cat_.into(y)) {
            queue.emplace_back(cat_.dom(m), f_.apply(m, a), g_.apply(m, b));
          }
        }
        return true;
      }

      void undo(std::size_t mark) {
        while (trail_.size() > mark) {
          auto e = trail_.back();
          trail_.pop_back();
          used_[e.x][image_[e.x][e.i]] = false;
          image_[e.x][e.i] = kNone;
        }
      }

      bool search() {
        for (ObjectIndex x : order_) {
          for (std::size_t i = 0; i < f_.size(x); ++i) {
            if (image_[x][i] != kNone) {
              continue;
            }
            for (std::size_t v = 0; v < g_.size(x); ++v) {
              if (used_[x][v]) {
                continue;
              }
              std::size_t mark = trail_.size();
              if (assign(x, i, v) && search()) {
                return true;
              }
              undo(mark);
            }
            return false;
          }
        }
        return true;
      }

      SetPresheaf const& f_;
      SetPresheaf const& g_;
      FiniteCategory const& cat_;
      std::vector<std::vector<std::size_t>> image_;
      std::vector<std::vector<bool>> used_;
      std::vector<Entry> trail_;
      std::vector<ObjectIndex> order_;
    };

  }  // namespace

  std::optional<SetNatTrans> find_isomorphism(SetPresheaf const& f, SetPresheaf const& g) {
    if (!(f.category() == g.category())) {
      return std::nullopt;
    }
    for (ObjectIndex x = 0; x < f.category().object_count(); ++x) {
      if (f.size(x) != g.size(x)) {
        return std::nullopt;
      }
    }
    auto eta = SetIsoSearch(f, g).run();
    if (eta && !is_isomorphism(f, g, *eta)) {
      throw Error("internal: set isomorphism search produced an invalid witness");
    }
    return eta;
  }

  std::optional<LinearNatTrans> find_isomorphism(LinearPresheaf const& f, LinearPresheaf const& g) {
    auto const& cat = f.category();
    if (!(cat == g.category()) || !(f.field() == g.field()) || f.dims() != g.dims()) {
      return std::nullopt;
    }
    std::vector<IntertwinerSystem::Shape> shapes;
    for (ObjectIndex x = 0; x < cat.object_count(); ++x) {
      shapes.push_back({f.dim(x), f.dim(x)});
    }
    IntertwinerSystem sys(f.field(), shapes);
    for (MorphismIndex m = 0; m < cat.morphism_count(); ++m) {
      if (!cat.is_identity(m)) {
        sys.add(cat.dom(m), f.map(m), g.map(m), cat.cod(m));
      }
    }
    auto found = sys.find_invertible();
    if (!found.witness) {
      return std::nullopt;
    }
    LinearNatTrans eta{*found.witness};
    if (!is_isomorphism(f, g, eta)) {
      throw Error("internal: linear isomorphism search produced an invalid witness");
    }
    return eta;
  }

  bool isomorphic(Presheaf const& f, Presheaf const& g) {
    if (f.index() != g.index()) {
      return false;
    }
    if (auto const* a = std::get_if<SetPresheaf>(&f)) {
      return find_isomorphism(*a, std::get<SetPresheaf>(g)).has_value();
    }
    return find_isomorphism(std::get<LinearPresheaf>(f), std::get<LinearPresheaf>(g)).has_value();
  }

}  // namespace finsite
