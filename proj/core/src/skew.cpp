#include "finsite/skew.hpp"

#include "finsite/errors.hpp"

namespace finsite {

  SkewCategoryAlgebra::SkewCategoryAlgebra(AlgebraPresheaf r) : r_(std::move(r)) {
    auto const& cat = r_.category();
    auto const& k = r_.field();
    std::vector<std::string> names;
    for (MorphismIndex f = 0; f < cat.morphism_count(); ++f) {
      offsets_.push_back(elements_.size());
      auto const& a = r_.algebra(cat.dom(f));
      for (std::size_t i = 0; i < a.dim(); ++i) {
        elements_.push_back({f, i});
        names.push_back(a.basis()[i] + "." + cat.morphism_name(f));
      }
    }
    std::size_t const n = elements_.size();
    std::vector<std::vector<FiniteDimAlgebra::Term>> products(n * n);
    for (std::size_t p = 0; p < n; ++p) {
      auto [g, i] = elements_[p];
      for (MorphismIndex f : cat.into(cat.dom(g))) {
        auto const& a = r_.algebra(cat.dom(f));
        MorphismIndex gf = cat.compose(g, f);
        // R(f)(s) for s the i-th basis element of R(dom g).
        auto s = r_.map(f).column_vector(i);
        for (std::size_t j = 0; j < a.dim(); ++j) {
          auto v = a.multiply(s, a.basis_vector(j));
          auto& terms = products[p * n + offsets_[f] + j];
          for (std::size_t l = 0; l < v.size(); ++l) {
            if (v[l] != 0) {
              terms.emplace_back(offsets_[gf] + l, v[l]);
            }
          }
        }
      }
    }
    std::vector<Scalar> unit(n);
    for (ObjectIndex x = 0; x < cat.object_count(); ++x) {
      auto const& u = r_.algebra(x).unit();
      for (std::size_t i = 0; i < u.size(); ++i) {
        unit[offsets_[cat.identity(x)] + i] = u[i];
      }
    }
    algebra_ = FiniteDimAlgebra(k, std::move(names), std::move(products), std::move(unit));
  }

  std::vector<Scalar> SkewCategoryAlgebra::embed(MorphismIndex f, std::span<Scalar const> r) const {
    std::vector<Scalar> v(dim());
    auto const& a = r_.algebra(category().dom(f));
    if (r.size() != a.dim()) {
      throw PreconditionError("coefficient vector has the wrong length");
    }
    for (std::size_t i = 0; i < r.size(); ++i) {
      v[offsets_.at(f) + i] = r[i];
    }
    return v;
  }

  std::vector<Scalar> SkewCategoryAlgebra::object_idempotent(ObjectIndex x) const {
    auto const& u = r_.algebra(x).unit();
    return embed(category().identity(x), u);
  }

  SkewCategoryAlgebra skew_category_algebra(AlgebraPresheaf const& r) {
    return SkewCategoryAlgebra(r);
  }

  AlgebraReport verify_algebra(SkewCategoryAlgebra const& a) {
    return verify_algebra(a.algebra());
  }

  GrothendieckConstruction::Morphism GrothendieckConstruction::identity(ObjectIndex x) const {
    return {r_.category().identity(x), r_.algebra(x).unit()};
  }

  GrothendieckConstruction::Morphism GrothendieckConstruction::base_element(MorphismIndex f) const {
    return {f, r_.algebra(r_.category().dom(f)).unit()};
  }

  GrothendieckConstruction::Morphism GrothendieckConstruction::compose(Morphism const& g, Morphism const& f) const {
    auto const& cat = r_.category();
    auto gf = cat.compose(g.f, f.f);
    auto const& a = r_.algebra(cat.dom(f.f));
    auto s = linalg::apply(r_.field(), r_.map(f.f), g.r);
    return {gf, a.multiply(s, f.r)};
  }

  std::size_t GrothendieckConstruction::component_dim(MorphismIndex f) const {
    return r_.algebra(r_.category().dom(f)).dim();
  }

  boost::multiprecision::cpp_int GrothendieckConstruction::hom_cardinality(ObjectIndex x, ObjectIndex y) const {
    auto const& k = r_.field();
    if (!k.is_finite()) {
      throw PreconditionError("hom-sets of the Grothendieck construction are infinite over Q");
    }
    boost::multiprecision::cpp_int total = 0;
    for (auto f : r_.category().hom(x, y)) {
      total += boost::multiprecision::pow(boost::multiprecision::cpp_int(k.characteristic()),
                                          static_cast<unsigned>(component_dim(f)));
    }
    return total;
  }

  std::vector<GrothendieckConstruction::Morphism> GrothendieckConstruction::hom(ObjectIndex x, ObjectIndex y,
                                                                                std::size_t limit) const {
    if (hom_cardinality(x, y) > limit) {
      throw SearchSpaceTooLarge("hom-set of the Grothendieck construction exceeds " + std::to_string(limit));
    }
    auto const p = r_.field().characteristic();
    std::vector<Morphism> out;
    for (auto f : r_.category().hom(x, y)) {
      std::size_t d = component_dim(f);
      std::vector<std::uint32_t> digits(d, 0);
      while (true) {
        std::vector<Scalar> r;
        for (auto v : digits) {
          r.emplace_back(v);
        }
        out.push_back({f, std::move(r)});
        std::size_t i = 0;
        while (i < d && ++digits[i] == p) {
          digits[i++] = 0;
        }
        if (i == d) {
          break;
        }
      }
    }
    return out;
  }

}  // namespace finsite
