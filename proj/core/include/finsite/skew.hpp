#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "finsite/algebra.hpp"

namespace finsite {

  //! The skew category algebra R[C]: basis r f for f a morphism and r a basis
  //! element of R(dom f), ordered by (morphism index, coefficient index), with
  //! (s g)(r f) = (R(f)(s) r) gf when dom g = cod f and 0 otherwise.
  class SkewCategoryAlgebra {
   public:
    struct BasisElement {
      MorphismIndex morphism;
      std::size_t coefficient;
    };

    explicit SkewCategoryAlgebra(AlgebraPresheaf r);

    AlgebraPresheaf const& coefficients() const noexcept { return r_; }
    FiniteCategory const& category() const noexcept { return r_.category(); }
    Field const& field() const noexcept { return r_.field(); }
    //! Structure constants and unit sum_x 1_{R(x)} 1_x.
    FiniteDimAlgebra const& algebra() const noexcept { return algebra_; }
    std::size_t dim() const noexcept { return algebra_.dim(); }
    //! The empty category gives the zero-dimensional (null) ring.
    bool is_null_ring() const noexcept { return dim() == 0; }

    BasisElement const& element(std::size_t i) const { return elements_.at(i); }
    //! First basis index of the block of f.
    std::size_t offset(MorphismIndex f) const { return offsets_.at(f); }
    std::size_t index(MorphismIndex f, std::size_t coefficient) const { return offsets_.at(f) + coefficient; }

    //! r f as a coordinate vector, r in R(dom f).
    std::vector<Scalar> embed(MorphismIndex f, std::span<Scalar const> r) const;
    //! 1_{R(x)} 1_x.
    std::vector<Scalar> object_idempotent(ObjectIndex x) const;

   private:
    AlgebraPresheaf r_;
    std::vector<BasisElement> elements_;
    std::vector<std::size_t> offsets_;
    FiniteDimAlgebra algebra_;
  };

  SkewCategoryAlgebra skew_category_algebra(AlgebraPresheaf const& r);
  AlgebraReport verify_algebra(SkewCategoryAlgebra const& a);

  //! The category Gr_C R: one object (x, *) per object of C, morphisms (f, r)
  //! with r in R(dom f), composition (g, s)(f, r) = (gf, R(f)(s) r).
  class GrothendieckConstruction {
   public:
    struct Morphism {
      MorphismIndex f;
      std::vector<Scalar> r;
      friend bool operator==(Morphism const&, Morphism const&) = default;
    };

    explicit GrothendieckConstruction(AlgebraPresheaf r) : r_(std::move(r)) {}

    AlgebraPresheaf const& coefficients() const noexcept { return r_; }
    Morphism identity(ObjectIndex x) const;
    //! (f, 1_{R(dom f)}), a free generator of the component Hom^f.
    Morphism base_element(MorphismIndex f) const;
    //! Throws PreconditionError unless dom g = cod f.
    Morphism compose(Morphism const& g, Morphism const& f) const;
    //! Dimension of Hom^f over k, which is dim R(dom f).
    std::size_t component_dim(MorphismIndex f) const;
    //! |Hom((x,*),(y,*))| = sum over f : x -> y of |k|^{dim R(x)}; needs a
    //! finite field.
    boost::multiprecision::cpp_int hom_cardinality(ObjectIndex x, ObjectIndex y) const;
    //! Every morphism (x,*) -> (y,*) over a finite field; throws
    //! SearchSpaceTooLarge above limit.
    std::vector<Morphism> hom(ObjectIndex x, ObjectIndex y, std::size_t limit = 1 << 16) const;

   private:
    AlgebraPresheaf r_;
  };

}  // namespace finsite
