#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "finsite/category.hpp"
#include "finsite/group.hpp"

namespace finsite {

  //! The poset x1 < x2 < ... < xn (objects x, y, z when n <= 3). Arrows
  //! between neighbours are named f, g, h, ...; longer composites are named
  //! by concatenation, e.g. "gf". Order: identities, then by length.
  FiniteCategory chain_poset(std::size_t n);

  //! Two objects x, y; h : x -> x with h h = 1x; f, g : x -> y with f h = g.
  //! Morphism order: 1x, h, 1y, f, g.
  FiniteCategory example_involution();

  //! One object "*", morphisms the group elements, composition the product.
  FiniteCategory group_category(FiniteGroup const& g);

  //! One object with a single non-identity idempotent e.
  FiniteCategory idempotent_monoid();

  //! Splits the idempotent of idempotent_monoid() through a second object:
  //! objects a, b; e = s r with r s = 1b.
  FiniteCategory idempotent_completion();

  enum class SubgroupFamily {
    all,
    p_subgroups,
    nontrivial_p_subgroups,
  };

  struct OrbitCategory {
    FiniteGroup group;
    FiniteCategory category;
    //! Subgroup behind each object.
    std::vector<Subgroup> subgroups;
    //! For each morphism G/H -> G/K, the full coset gK of group elements
    //! inducing it.
    std::vector<Subgroup> cosets;
    //! Non-fatal findings, e.g. a family that is not closed under conjugation.
    std::vector<std::string> warnings;
  };

  //! Orbit category on the subgroups selected by keep. c_g : G/H -> G/K
  //! exists when g^-1 H g is contained in K and sends H to gK; composition
  //! is c_{g'} c_g = c_{g g'}.
  OrbitCategory orbit_category(FiniteGroup const& g,
                               std::function<bool(Subgroup const&)> const& keep);
  //! p is ignored for SubgroupFamily::all.
  OrbitCategory orbit_category(FiniteGroup const& g, SubgroupFamily family, std::size_t p = 0);

  //! "1" for the trivial subgroup, "G" for the whole group, otherwise
  //! "H<order>_<k>" with k counting subgroups of that order.
  std::vector<std::string> subgroup_labels(FiniteGroup const& g, std::vector<Subgroup> const& subgroups);

  struct GalleryOptions {
    //! Group for "group" and the orbit categories: "trivial", "C<n>", "S<n>".
    std::string group = "S3";
    //! Prime for "orbit-p" and "orbit-p-full".
    std::size_t p = 0;
  };

  //! Named test categories: chain1..chain9, involution, idempotent,
  //! idempotent-split, group, orbit (all subgroups), orbit-p (non-identity
  //! p-subgroups), orbit-p-full (all p-subgroups). Throws InvalidData on an
  //! unknown name.
  FiniteCategory gallery_category(std::string_view name, GalleryOptions const& options = {});
  std::vector<std::string> gallery_names();

}  // namespace finsite
