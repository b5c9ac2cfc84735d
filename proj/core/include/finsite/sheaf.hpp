#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "finsite/presheaf.hpp"
#include "finsite/sieve.hpp"
#include "finsite/structure.hpp"
#include "finsite/topology.hpp"

namespace finsite {

  //! Compatible families over a sieve in a set presheaf. families[k][i] is
  //! the value (an element of F(dom members[i])) of family k on members[i].
  struct SetFamilies {
    std::vector<MorphismIndex> members;
    std::vector<std::vector<std::size_t>> families;
  };

  //! Compatible families over a sieve in a linear presheaf, as a subspace of
  //! the direct sum of F(dom u) over the members u (in member order).
  struct LinearFamilies {
    std::vector<MorphismIndex> members;
    std::vector<std::size_t> offsets;
    std::size_t ambient = 0;
    //! Canonical basis of the solution space, one column per family.
    Matrix basis;
  };

  SetFamilies matching_families(SetPresheaf const& f, Sieve const& s);
  LinearFamilies matching_families(LinearPresheaf const& f, Sieve const& s);

  enum class SheafCheckMode {
    all_covering_sieves,
    //! Only the minimal covering sieve of each object. Experimental.
    minimal_sieves_only,
  };

  struct SheafCheck {
    bool sheaf = true;
    std::optional<Sieve> failing;
  };

  SheafCheck check_sheaf(SetPresheaf const& f, GrothendieckTopology const& j,
                         SheafCheckMode mode = SheafCheckMode::all_covering_sieves);
  SheafCheck check_sheaf(LinearPresheaf const& f, GrothendieckTopology const& j,
                         SheafCheckMode mode = SheafCheckMode::all_covering_sieves);
  SheafCheck check_sheaf(Presheaf const& f, GrothendieckTopology const& j,
                         SheafCheckMode mode = SheafCheckMode::all_covering_sieves);
  bool is_sheaf(Presheaf const& f, GrothendieckTopology const& j,
                SheafCheckMode mode = SheafCheckMode::all_covering_sieves);

  //! F-dagger: F(x) replaced by the matching families over the minimal
  //! covering sieve of x, acting by restriction.
  SetPresheaf half_sheafify(SetPresheaf const& f, GrothendieckTopology const& j);
  LinearPresheaf half_sheafify(LinearPresheaf const& f, GrothendieckTopology const& j);
  Presheaf half_sheafify(Presheaf const& f, GrothendieckTopology const& j);

  //! The canonical map F -> F-dagger, a |-> (F(u) a)_u.
  SetNatTrans half_sheafification_unit(SetPresheaf const& f, GrothendieckTopology const& j);
  LinearNatTrans half_sheafification_unit(LinearPresheaf const& f, GrothendieckTopology const& j);

  //! Two half-sheafification passes.
  SetPresheaf sheafify(SetPresheaf const& f, GrothendieckTopology const& j);
  LinearPresheaf sheafify(LinearPresheaf const& f, GrothendieckTopology const& j);
  Presheaf sheafify(Presheaf const& f, GrothendieckTopology const& j);

  //! Restriction to a full subcategory; the result lives on d.category().
  SetPresheaf restrict(SetPresheaf const& f, FullSubcategory const& d);
  LinearPresheaf restrict(LinearPresheaf const& f, FullSubcategory const& d);
  Presheaf restrict(Presheaf const& f, FullSubcategory const& d);

  //! (RK G)(x): families (m_h) over h : w -> x with w in D, compatible with
  //! G along morphisms of D. g must live on d.category(); d strictly full.
  SetPresheaf right_kan_extend(SetPresheaf const& g, FullSubcategory const& d);
  LinearPresheaf right_kan_extend(LinearPresheaf const& g, FullSubcategory const& d);
  Presheaf right_kan_extend(Presheaf const& g, FullSubcategory const& d);

  //! The family space behind (RK G)(x), in the basis right_kan_extend uses.
  LinearFamilies kan_families(LinearPresheaf const& g, FullSubcategory const& d, ObjectIndex x);

  //! Evaluation at identities, restrict(RK G) -> G.
  SetNatTrans kan_counit(SetPresheaf const& g, FullSubcategory const& d);
  LinearNatTrans kan_counit(LinearPresheaf const& g, FullSubcategory const& d);

  //! G on the co-ideal D, empty / zero elsewhere.
  SetPresheaf extend_by_default(SetPresheaf const& g, FullSubcategory const& d);
  LinearPresheaf extend_by_default(LinearPresheaf const& g, FullSubcategory const& d);
  Presheaf extend_by_default(Presheaf const& g, FullSubcategory const& d);

  //! The largest topology for which f is a sheaf. Throws Error when the
  //! sheaf topologies do not have a unique maximal element.
  GrothendieckTopology finest_topology_for(Presheaf const& f);

}  // namespace finsite
