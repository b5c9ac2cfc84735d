#pragma once

// Independent reference implementations used only by the tests. They read
// categories through the basic accessors (hom, compose, dom, cod) and do
// their own combinatorics and arithmetic, so agreement with the library is
// evidence rather than tautology.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "finsite/finsite.hpp"

namespace oracle {

  using finsite::FiniteCategory;
  using finsite::MorphismIndex;
  using finsite::ObjectIndex;

  using MorphSet = std::vector<MorphismIndex>;  // sorted
  //! covering[x] = set of covering sieves on x.
  using Covering = std::vector<std::set<MorphSet>>;

  //! Every subset of the arrows into x that is closed under precomposition,
  //! found by scanning all 2^n subsets.
  std::set<MorphSet> sieves(FiniteCategory const& cat, ObjectIndex x);

  //! Power-set scan over all assignments of sieves to objects, keeping those
  //! that satisfy maximality, stability and transitivity.
  std::vector<Covering> topologies(FiniteCategory const& cat);

  bool is_topology(FiniteCategory const& cat, Covering const& j);

  //! Sieves on x that contain, for every w in objects, all of Hom(w, x)
  //! (surjectivity on hom-sets out of D).
  Covering subcategory_covering(FiniteCategory const& cat, std::vector<ObjectIndex> const& objects);

  Covering to_covering(finsite::GrothendieckTopology const& j);

  //! Compatible families of a set presheaf over a family of arrows closed
  //! under precomposition: assignments m_h in F(dom h) with
  //! m_{h k} = F(k)(m_h). Each family lists m_h in the order of `arrows`.
  std::vector<std::vector<std::size_t>> families(finsite::SetPresheaf const& f, MorphSet const& arrows);

  //! Sheaf condition checked on every covering sieve by counting and
  //! comparing families.
  bool is_sheaf(finsite::SetPresheaf const& f, Covering const& j);

  //! F-dagger as the colimit, over all covering sieves ordered by reverse
  //! inclusion, of the sets of matching families; restriction along S' in S
  //! identifies a family with its restriction.
  finsite::SetPresheaf colimit_half_sheafify(finsite::SetPresheaf const& f, Covering const& j);

  //! Independent natural-isomorphism check of a proposed witness.
  bool verify_set_iso(finsite::SetPresheaf const& a, finsite::SetPresheaf const& b,
                      finsite::SetNatTrans const& eta);

  //! The underlying set presheaf of a linear presheaf over F_p: F(x) is
  //! listed as all p^d coordinate vectors. Lets the set oracles judge
  //! linear presheaves.
  finsite::SetPresheaf points(finsite::LinearPresheaf const& f);

  // ---- categories from words and cosets ------------------------------------

  //! Morphisms of the category generated by h : x -> x and f : x -> y under
  //! h h = 1, found by reducing words; result maps word composites
  //! (g, f) -> gf with words "1x", "h", "1y", "f", "fh".
  struct WordCategory {
    std::vector<std::string> words;
    std::map<std::pair<std::string, std::string>, std::string> compose;
  };
  WordCategory involution_by_words();

  //! G-maps G/H -> G/K as functions on left cosets: one per coset gK with
  //! g^-1 H g in K, found by scanning all of G. Each map is the list of
  //! target coset indices, indexed by the coset enumeration of G/H.
  struct CosetSpace {
    std::vector<std::vector<std::size_t>> cosets;  // sorted element lists
    std::size_t index_of(std::vector<std::size_t> const& coset) const;
  };
  CosetSpace left_cosets(finsite::FiniteGroup const& g, std::vector<std::size_t> const& h);
  std::vector<std::vector<std::size_t>> gmaps(finsite::FiniteGroup const& g, std::vector<std::size_t> const& h,
                                              std::vector<std::size_t> const& k);

  //! |N_G(H)| from the Cayley table.
  std::size_t normalizer_order(finsite::FiniteGroup const& g, std::vector<std::size_t> const& h);

  // ---- algebras over F_p ------------------------------------------------------

  //! Dense structure constants with entries in 0..p-1: t[i][j][k].
  struct Table {
    std::uint32_t p = 2;
    std::vector<std::vector<std::vector<std::int64_t>>> c;
    std::vector<std::int64_t> unit;
    std::size_t dim() const { return unit.size(); }
  };

  //! n x n matrices over F_p, basis E_ij row-major: E_ij E_kl = [j = k] E_il.
  Table matrix_algebra(std::uint32_t p, std::size_t n);
  Table from_library(finsite::FiniteDimAlgebra const& a);

  //! Exhaustive (b_i b_j) b_k = b_i (b_j b_k) and unit checks mod p.
  bool is_associative_unital(Table const& t);

  //! Searches a linear isomorphism P with P(b_i b_j) = P(b_i) P(b_j) and
  //! P(1) = 1 by guessing images of the two generators u and v of a among
  //! elements of b satisfying the same minimal polynomials. Returns P as
  //! columns (P[j] = image of basis j).
  std::optional<std::vector<std::vector<std::int64_t>>> find_algebra_iso(Table const& a, Table const& b,
                                                                         std::vector<std::int64_t> const& u,
                                                                         std::vector<std::int64_t> const& v);

  //! Category algebra: b_g b_f = b_{gf} when dom g = cod f, else 0; basis
  //! indexed by morphisms.
  std::vector<std::vector<std::optional<MorphismIndex>>> category_algebra(FiniteCategory const& cat);

}  // namespace oracle
