#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "finsite/category.hpp"
#include "finsite/sieve.hpp"
#include "finsite/structure.hpp"

namespace finsite {

  //! Per-object covering sieves, stored explicitly and in canonical order.
  //! The constructor only normalizes (sorts, removes duplicates); use
  //! check_topology or make_topology to validate.
  class GrothendieckTopology {
   public:
    GrothendieckTopology() = default;
    GrothendieckTopology(FiniteCategory cat, std::vector<std::vector<Sieve>> covering);

    FiniteCategory const& category() const noexcept { return cat_; }
    std::vector<Sieve> const& covering(ObjectIndex x) const { return covering_.at(x); }
    std::vector<std::vector<Sieve>> const& covering() const noexcept { return covering_; }
    bool covers(Sieve const& s) const;
    //! Objectwise inclusion J(x) of this in other(x).
    bool is_contained_in(GrothendieckTopology const& other) const;

    friend bool operator==(GrothendieckTopology const& a, GrothendieckTopology const& b) {
      return a.covering_ == b.covering_;
    }

   private:
    FiniteCategory cat_;
    std::vector<std::vector<Sieve>> covering_;
  };

  struct TopologyViolation {
    //! 1 maximal sieve, 2 stability, 3 transitivity; 0 for a malformed entry.
    int axiom = 0;
    ObjectIndex object = 0;
    std::optional<Sieve> sieve;
    std::optional<MorphismIndex> morphism;
    std::string message;
  };

  struct TopologyReport {
    std::vector<TopologyViolation> violations;
    bool ok() const noexcept { return violations.empty(); }
    std::string to_string() const;
  };

  //! Checks all three axioms exhaustively and reports every violation.
  TopologyReport check_topology(FiniteCategory const& cat, std::vector<std::vector<Sieve>> const& covering);
  bool is_topology(FiniteCategory const& cat, std::vector<std::vector<Sieve>> const& covering);
  //! Throws InvalidData carrying the report when the axioms fail.
  GrothendieckTopology make_topology(FiniteCategory const& cat, std::vector<std::vector<Sieve>> covering);

  //! Every sieve on x containing the given one (objectwise), which is how a
  //! topology is recovered from its minimal covering sieves.
  GrothendieckTopology topology_from_minimal(FiniteCategory const& cat, std::vector<Sieve> const& minimal);

  //! Census guard: refuse when the total number of sieves exceeds this,
  //! i.e. when the raw search space prod_x 2^{#sieves(x)} exceeds 2^32.
  inline constexpr std::size_t kCensusSieveLimit = 32;

  //! Every topology on cat, in canonical order (lexicographic in the indices
  //! of the minimal covering sieves within sieves_on). Throws
  //! SearchSpaceTooLarge above the guard.
  std::vector<GrothendieckTopology> enumerate_topologies(FiniteCategory const& cat,
                                                         std::size_t sieve_limit = kCensusSieveLimit);

  GrothendieckTopology minimal_topology(FiniteCategory const& cat);
  GrothendieckTopology maximal_topology(FiniteCategory const& cat);

  //! J^D: a sieve S on x covers when every h : w -> x with w in D factors
  //! through a member of S. Throws PreconditionError unless d is strictly
  //! full.
  GrothendieckTopology subcategory_topology(FullSubcategory const& d);

  //! Intersection of all covering sieves on x.
  Sieve minimal_covering_sieve(GrothendieckTopology const& j, ObjectIndex x);

  //! S covers x when every f : y -> x admits g with f g in S.
  GrothendieckTopology dense_topology(FiniteCategory const& cat);

  //! The strictly full Karoubian D with J^D == j. Throws Error when none
  //! matches.
  FullSubcategory classify_topology(GrothendieckTopology const& j);

  //! "J^xy" when every object name is a single character, "J^{x1,x2}"
  //! otherwise; "J^{}" for the empty subcategory.
  std::string topology_label(FullSubcategory const& d);

  //! Table of minimal covering sieves, one row per topology and one column
  //! per object.
  std::string minimal_sieve_grid(FiniteCategory const& cat, std::vector<std::string> const& row_labels,
                                 std::vector<GrothendieckTopology> const& topologies);

}  // namespace finsite
