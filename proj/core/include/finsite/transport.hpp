#pragma once

#include <cstddef>
#include <vector>

#include "finsite/module.hpp"
#include "finsite/sheaf.hpp"
#include "finsite/skew.hpp"
#include "finsite/structure.hpp"
#include "finsite/topology.hpp"

namespace finsite {

  //! Restriction of an algebra presheaf to a full subcategory.
  AlgebraPresheaf restrict(AlgebraPresheaf const& r, FullSubcategory const& d);
  //! Restriction of a module presheaf; the ring becomes R restricted to D.
  ModulePresheaf restrict(ModulePresheaf const& m, FullSubcategory const& d);

  //! Right Kan extension of a module presheaf over R restricted to D, made a
  //! module over R: families (m_h) with (m s)_h = m_h R(h)(s) for s in R(x).
  ModulePresheaf right_kan_extend(ModulePresheaf const& m, AlgebraPresheaf const& r, FullSubcategory const& d);

  //! Modules over R on (C, J^D) to modules over R|_D[D]: Theta of the
  //! restriction. Throws PreconditionError naming the failing covering sieve
  //! when M or R is not a sheaf for J^D.
  AlgebraModule transport_to_subcategory(ModulePresheaf const& m, FullSubcategory const& d);
  //! The inverse direction: Omega, then the right Kan extension with its
  //! module structure.
  ModulePresheaf transport_from_subcategory(AlgebraModule const& n, AlgebraPresheaf const& r,
                                            FullSubcategory const& d);

  struct TransportReport {
    //! M -> transport_from(transport_to(M)) and its inverse.
    ModuleMorphism forward;
    ModuleMorphism forward_inverse;
    //! N -> transport_to(transport_from(N)) and its inverse.
    Matrix backward;
    Matrix backward_inverse;
    bool ok = false;
  };

  //! Explicit isomorphisms for both round trips, checked to be mutually
  //! inverse module homomorphisms. n must be a module over R|_D[D].
  TransportReport verify_transport_roundtrip(ModulePresheaf const& m, AlgebraModule const& n,
                                             FullSubcategory const& d);

  //! One block R(y)[Aut(y)] per minimal isomorphism class of an EI category.
  struct DenseBlock {
    ObjectIndex object;
    FullSubcategory subcategory;
    SkewCategoryAlgebra algebra;
  };

  struct BlockDecomposition {
    std::vector<DenseBlock> blocks;
    //! Sum of the block dimensions.
    std::size_t total_dim = 0;
  };

  //! Throws PreconditionError on non-EI input.
  BlockDecomposition block_decomposition_dense(AlgebraPresheaf const& r);

  //! A module on the dense site as modules over the blocks: Theta of its
  //! restriction to each block object.
  std::vector<AlgebraModule> transport_to_blocks(ModulePresheaf const& m, BlockDecomposition const& blocks);

}  // namespace finsite
