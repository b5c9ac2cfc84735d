#pragma once

#include <cstddef>
#include <random>

#include "finsite/algebra.hpp"
#include "finsite/module.hpp"
#include "finsite/presheaf.hpp"
#include "finsite/structure.hpp"

namespace finsite {

  using Rng = std::mt19937_64;

  //! Quotient of a sum of 1..max_generators representables by a random
  //! congruence (pairs of elements identified, then closed under restriction).
  SetPresheaf random_set_presheaf(FiniteCategory const& cat, Rng& rng, std::size_t max_generators = 2,
                                  std::size_t max_relations = 3);

  //! Quotient of a sum of free module presheaves R(x)^{Hom(x,c)} by the
  //! submodule generated by random elements; further relations are added
  //! until every value has dimension at most max_dim.
  ModulePresheaf random_module_presheaf(AlgebraPresheaf const& r, Rng& rng, std::size_t max_dim = 3,
                                        std::size_t max_generators = 2);

  //! The underlying presheaf of a random module over the constant ground
  //! field.
  LinearPresheaf random_linear_presheaf(FiniteCategory const& cat, Field const& k, Rng& rng, std::size_t max_dim = 3);

  //! Quotient of one or two copies of the regular module by a random right
  //! submodule, then cut down until the dimension is at most max_dim.
  AlgebraModule random_algebra_module(FiniteDimAlgebra const& a, Rng& rng, std::size_t max_dim = 8);

  //! The same module in a randomly changed basis at every object.
  ModulePresheaf random_gauge(ModulePresheaf const& m, Rng& rng);
  AlgebraModule random_gauge(AlgebraModule const& n, Rng& rng);

  //! Random invertible n by n matrix.
  Matrix random_invertible(Field const& k, std::size_t n, Rng& rng);
  Scalar random_scalar(Field const& k, Rng& rng);

}  // namespace finsite
