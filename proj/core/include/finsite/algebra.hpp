#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "finsite/category.hpp"
#include "finsite/field.hpp"
#include "finsite/matrix.hpp"
#include "finsite/presheaf.hpp"

namespace finsite {

  //! A finite-dimensional algebra by structure constants:
  //! b_i b_j = sum_k c[i][j][k] b_k, stored sparsely. Construction does not
  //! check the axioms; see verify_algebra.
  class FiniteDimAlgebra {
   public:
    using Term = std::pair<std::size_t, Scalar>;

    FiniteDimAlgebra() = default;
    //! products[i * dim + j] lists the non-zero terms of b_i b_j.
    FiniteDimAlgebra(Field field, std::vector<std::string> basis, std::vector<std::vector<Term>> products,
                     std::vector<Scalar> unit);

    static FiniteDimAlgebra ground(Field const& k);
    //! k x ... x k with primitive idempotent basis e1..en.
    static FiniteDimAlgebra product_of_fields(Field const& k, std::size_t n);
    //! k[t]/(t^n) with basis 1, t, ..., t^{n-1}.
    static FiniteDimAlgebra truncated_polynomial(Field const& k, std::size_t n);
    //! n x n matrices with basis E11, E12, ..., row-major.
    static FiniteDimAlgebra matrix_algebra(Field const& k, std::size_t n);
    //! From a dense table c[i][j][k].
    static FiniteDimAlgebra from_dense(Field const& k, std::vector<std::string> basis,
                                       std::vector<std::vector<std::vector<Scalar>>> const& c,
                                       std::vector<Scalar> unit);

    Field const& field() const noexcept { return field_; }
    std::size_t dim() const noexcept { return basis_.size(); }
    std::vector<std::string> const& basis() const noexcept { return basis_; }
    std::vector<Term> const& product(std::size_t i, std::size_t j) const { return products_.at(i * dim() + j); }
    Scalar constant(std::size_t i, std::size_t j, std::size_t k) const;
    std::vector<Scalar> const& unit() const noexcept { return unit_; }
    std::vector<std::vector<std::vector<Scalar>>> dense() const;

    std::vector<Scalar> multiply(std::span<Scalar const> a, std::span<Scalar const> b) const;
    //! Matrix of v |-> b_i v.
    Matrix left(std::size_t i) const;
    //! Matrix of v |-> v b_j.
    Matrix right(std::size_t j) const;
    std::vector<Scalar> basis_vector(std::size_t i) const;

    friend bool operator==(FiniteDimAlgebra const&, FiniteDimAlgebra const&) = default;

   private:
    Field field_;
    std::vector<std::string> basis_;
    std::vector<std::vector<Term>> products_;
    std::vector<Scalar> unit_;
  };

  //! "k", "kxk" (k x k), "k[t]/t2", "k[t]/t3", "M2"; throws InvalidData
  //! otherwise.
  FiniteDimAlgebra named_algebra(Field const& k, std::string_view name);

  struct AlgebraReport {
    std::vector<std::string> violations;
    bool ok() const noexcept { return violations.empty(); }
  };

  //! Exhaustive associativity on basis triples and two-sided unit check.
  AlgebraReport verify_algebra(FiniteDimAlgebra const& a);

  //! Unital algebra homomorphism a -> b given by its matrix (dim b rows).
  bool is_algebra_homomorphism(FiniteDimAlgebra const& a, FiniteDimAlgebra const& b, Matrix const& m);

  //! A presheaf of algebras: R(x) per object and R(f) : R(y) -> R(x) as a
  //! dim R(x) by dim R(y) matrix for f : x -> y.
  class AlgebraPresheaf {
   public:
    AlgebraPresheaf() = default;
    //! Checks each algebra, that each R(f) is a unital homomorphism and
    //! contravariant functoriality; throws InvalidData otherwise.
    AlgebraPresheaf(FiniteCategory cat, std::vector<FiniteDimAlgebra> algebras, std::vector<Matrix> maps);

    //! The same algebra everywhere, identities on morphisms.
    static AlgebraPresheaf constant(FiniteCategory const& cat, FiniteDimAlgebra const& a);

    FiniteCategory const& category() const noexcept { return underlying_.category(); }
    Field const& field() const noexcept { return underlying_.field(); }
    FiniteDimAlgebra const& algebra(ObjectIndex x) const { return algebras_.at(x); }
    Matrix const& map(MorphismIndex f) const { return underlying_.map(f); }
    //! The underlying presheaf of vector spaces.
    LinearPresheaf const& underlying() const noexcept { return underlying_; }

   private:
    std::vector<FiniteDimAlgebra> algebras_;
    LinearPresheaf underlying_;
  };

}  // namespace finsite
