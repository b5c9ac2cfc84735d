#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "finsite/category.hpp"
#include "finsite/field.hpp"
#include "finsite/matrix.hpp"

namespace finsite {

  //! A presheaf of finite sets. For f : x -> y, map(f)[i] is the index in
  //! F(x) of F(f) applied to element i of F(y).
  class SetPresheaf {
   public:
    SetPresheaf() = default;
    //! Throws InvalidData unless identities act trivially and F(gf) = F(f)F(g).
    SetPresheaf(FiniteCategory cat, std::vector<std::vector<std::string>> elements,
                std::vector<std::vector<std::size_t>> maps);

    FiniteCategory const& category() const noexcept { return cat_; }
    std::size_t size(ObjectIndex x) const { return elements_.at(x).size(); }
    std::vector<std::string> const& elements(ObjectIndex x) const { return elements_.at(x); }
    std::vector<std::size_t> const& map(MorphismIndex f) const { return maps_.at(f); }
    std::size_t apply(MorphismIndex f, std::size_t i) const { return maps_.at(f).at(i); }
    std::size_t total_size() const;

    friend bool operator==(SetPresheaf const&, SetPresheaf const&) = default;

   private:
    FiniteCategory cat_;
    std::vector<std::vector<std::string>> elements_;
    std::vector<std::vector<std::size_t>> maps_;
  };

  //! A presheaf of finite-dimensional vector spaces. For f : x -> y, map(f)
  //! is the dim F(x) by dim F(y) matrix of F(f) acting on column vectors.
  class LinearPresheaf {
   public:
    LinearPresheaf() = default;
    //! Throws InvalidData on shape mismatch or failed functoriality.
    LinearPresheaf(FiniteCategory cat, Field field, std::vector<std::size_t> dims, std::vector<Matrix> maps);

    FiniteCategory const& category() const noexcept { return cat_; }
    Field const& field() const noexcept { return field_; }
    std::size_t dim(ObjectIndex x) const { return dims_.at(x); }
    std::vector<std::size_t> const& dims() const noexcept { return dims_; }
    Matrix const& map(MorphismIndex f) const { return maps_.at(f); }
    std::size_t total_dim() const;

    friend bool operator==(LinearPresheaf const&, LinearPresheaf const&) = default;

   private:
    FiniteCategory cat_;
    Field field_;
    std::vector<std::size_t> dims_;
    std::vector<Matrix> maps_;
  };

  using Presheaf = std::variant<SetPresheaf, LinearPresheaf>;

  FiniteCategory const& category_of(Presheaf const& f);

  SetPresheaf terminal_presheaf(FiniteCategory const& cat);
  SetPresheaf empty_presheaf(FiniteCategory const& cat);
  //! n-element set at every object, identities everywhere.
  SetPresheaf constant_presheaf(FiniteCategory const& cat, std::size_t n);
  //! Hom(-, c); elements are morphism names.
  SetPresheaf representable(FiniteCategory const& cat, ObjectIndex c);

  LinearPresheaf zero_presheaf(FiniteCategory const& cat, Field const& k);
  LinearPresheaf constant_presheaf(FiniteCategory const& cat, Field const& k, std::size_t n);
  //! Free vector space on a set presheaf.
  LinearPresheaf linearize(SetPresheaf const& f, Field const& k);

  //! Natural transformation F -> G; components[x][i] is the image of
  //! element i of F(x).
  struct SetNatTrans {
    std::vector<std::vector<std::size_t>> components;
  };
  //! components[x] is dim G(x) by dim F(x).
  struct LinearNatTrans {
    std::vector<Matrix> components;
  };

  bool is_natural(SetPresheaf const& f, SetPresheaf const& g, SetNatTrans const& eta);
  bool is_natural(LinearPresheaf const& f, LinearPresheaf const& g, LinearNatTrans const& eta);
  //! Natural and objectwise bijective / invertible.
  bool is_isomorphism(SetPresheaf const& f, SetPresheaf const& g, SetNatTrans const& eta);
  bool is_isomorphism(LinearPresheaf const& f, LinearPresheaf const& g, LinearNatTrans const& eta);

  //! Exhaustive backtracking over objectwise bijections with propagation
  //! along every structure map.
  std::optional<SetNatTrans> find_isomorphism(SetPresheaf const& f, SetPresheaf const& g);
  //! Solves the naturality equations exactly and searches the solution
  //! space for an invertible member.
  std::optional<LinearNatTrans> find_isomorphism(LinearPresheaf const& f, LinearPresheaf const& g);
  //! False when the flavours differ.
  bool isomorphic(Presheaf const& f, Presheaf const& g);

}  // namespace finsite
