#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "finsite/algebra.hpp"
#include "finsite/presheaf.hpp"
#include "finsite/skew.hpp"

namespace finsite {

  //! A presheaf of right R-modules. action(x, i) is the matrix of
  //! m |-> m b_i on M(x), b_i the i-th basis element of R(x); matrices act on
  //! column vectors, so a right action satisfies A(ab) = A(b) A(a).
  class ModulePresheaf {
   public:
    ModulePresheaf() = default;
    //! Checks unital right module axioms objectwise and
    //! M(f)(m s) = M(f)(m) R(f)(s); throws InvalidData otherwise.
    ModulePresheaf(AlgebraPresheaf r, LinearPresheaf m, std::vector<std::vector<Matrix>> action);

    AlgebraPresheaf const& ring() const noexcept { return r_; }
    LinearPresheaf const& underlying() const noexcept { return m_; }
    FiniteCategory const& category() const noexcept { return m_.category(); }
    Field const& field() const noexcept { return m_.field(); }
    std::size_t dim(ObjectIndex x) const { return m_.dim(x); }
    Matrix const& map(MorphismIndex f) const { return m_.map(f); }
    Matrix const& action(ObjectIndex x, std::size_t i) const { return action_.at(x).at(i); }
    //! Matrix of m |-> m s for s in R(x) given in coordinates.
    Matrix act(ObjectIndex x, std::span<Scalar const> s) const;
    std::vector<std::vector<Matrix>> const& actions() const noexcept { return action_; }

   private:
    AlgebraPresheaf r_;
    LinearPresheaf m_;
    std::vector<std::vector<Matrix>> action_;
  };

  //! A finite-dimensional right module over an algebra: action(i) is the
  //! matrix of n |-> n b_i.
  class AlgebraModule {
   public:
    AlgebraModule() = default;
    //! Checks the unit and A(b_i b_j) = A(b_j) A(b_i); throws InvalidData.
    AlgebraModule(FiniteDimAlgebra algebra, std::size_t dim, std::vector<Matrix> action);

    FiniteDimAlgebra const& algebra() const noexcept { return algebra_; }
    Field const& field() const noexcept { return algebra_.field(); }
    std::size_t dim() const noexcept { return dim_; }
    Matrix const& action(std::size_t i) const { return action_.at(i); }
    std::vector<Matrix> const& actions() const noexcept { return action_; }
    Matrix act(std::span<Scalar const> a) const;

   private:
    FiniteDimAlgebra algebra_;
    std::size_t dim_ = 0;
    std::vector<Matrix> action_;
  };

  //! The zero module presheaf and the module presheaf R itself.
  ModulePresheaf zero_module(AlgebraPresheaf const& r);
  ModulePresheaf regular_module(AlgebraPresheaf const& r);
  //! The right regular module of an algebra.
  AlgebraModule regular_module(FiniteDimAlgebra const& a);
  ModulePresheaf direct_sum(ModulePresheaf const& a, ModulePresheaf const& b);
  AlgebraModule direct_sum(AlgebraModule const& a, AlgebraModule const& b);

  //! Objectwise linear maps commuting with structure maps and actions.
  struct ModuleMorphism {
    std::vector<Matrix> components;
  };

  bool is_homomorphism(ModulePresheaf const& a, ModulePresheaf const& b, ModuleMorphism const& phi);
  bool is_isomorphism(ModulePresheaf const& a, ModulePresheaf const& b, ModuleMorphism const& phi);
  bool is_homomorphism(AlgebraModule const& a, AlgebraModule const& b, Matrix const& x);
  bool is_isomorphism(AlgebraModule const& a, AlgebraModule const& b, Matrix const& x);

  //! Solve the intertwining equations and search for an invertible solution.
  std::optional<ModuleMorphism> find_isomorphism(ModulePresheaf const& a, ModulePresheaf const& b);
  std::optional<Matrix> find_isomorphism(AlgebraModule const& a, AlgebraModule const& b);

  //! Theta: the direct sum of M(y) over all objects, with r f acting by
  //! m |-> M(f)(m) r from the block of cod f to the block of dom f.
  AlgebraModule theta(ModulePresheaf const& m, SkewCategoryAlgebra const& a);
  //! Block diagonal of the components.
  Matrix theta(ModuleMorphism const& phi);
  //! First basis index of each object's block in theta(m).
  std::vector<std::size_t> theta_offsets(ModulePresheaf const& m);

  //! Omega: N(y) = N 1_{R(y)} 1_y (with the canonical column basis of the
  //! image), N(f) = - 1_{R(x)} f for f : x -> y, and r in R(y) acting as r 1_y.
  ModulePresheaf omega(AlgebraModule const& n, SkewCategoryAlgebra const& a);
  ModuleMorphism omega(AlgebraModule const& a, AlgebraModule const& b, Matrix const& x, SkewCategoryAlgebra const& s);
  //! Basis of N 1_{R(y)} 1_y inside N, as used by omega.
  Matrix omega_basis(AlgebraModule const& n, SkewCategoryAlgebra const& a, ObjectIndex y);

  //! Canonical M -> Omega(Theta(M)).
  ModuleMorphism omega_theta_unit(ModulePresheaf const& m, SkewCategoryAlgebra const& a);
  //! Canonical Theta(Omega(N)) -> N, (n_y)_y |-> sum n_y.
  Matrix theta_omega_counit(AlgebraModule const& n, SkewCategoryAlgebra const& a);

  struct RoundTripReport {
    bool omega_theta = false;
    bool theta_omega = false;
    //! M -> Omega(Theta(M)) and its inverse.
    ModuleMorphism omega_theta_witness;
    ModuleMorphism omega_theta_inverse;
    //! Theta(Omega(N)) -> N and its inverse.
    Matrix theta_omega_witness;
    Matrix theta_omega_inverse;
    bool ok() const noexcept { return omega_theta && theta_omega; }
  };

  //! Builds both round trips and checks the canonical witnesses are mutually
  //! inverse module isomorphisms.
  RoundTripReport verify_equivalence_roundtrip(ModulePresheaf const& m, AlgebraModule const& n,
                                               SkewCategoryAlgebra const& a);

}  // namespace finsite
