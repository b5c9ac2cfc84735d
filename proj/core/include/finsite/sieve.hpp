#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "finsite/category.hpp"

namespace finsite {

  //! A set of morphisms into a fixed object, stored as a bitset over all
  //! morphisms of the category. Constructors do not check closure; use
  //! make_sieve or is_sieve for that.
  class Sieve {
   public:
    Sieve() = default;
    Sieve(ObjectIndex target, boost::dynamic_bitset<> members)
        : target_(target), members_(std::move(members)) {}

    ObjectIndex target() const noexcept { return target_; }
    bool contains(MorphismIndex f) const { return f < members_.size() && members_.test(f); }
    std::size_t size() const { return members_.count(); }
    bool empty() const { return members_.none(); }
    std::vector<MorphismIndex> members() const;
    boost::dynamic_bitset<> const& bits() const noexcept { return members_; }
    bool is_subset_of(Sieve const& other) const {
      return target_ == other.target_ && members_.is_subset_of(other.members_);
    }

    friend bool operator==(Sieve const& a, Sieve const& b) {
      return a.target_ == b.target_ && a.members_ == b.members_;
    }
    //! Canonical order: target, then size, then lexicographic member indices.
    friend bool operator<(Sieve const& a, Sieve const& b);

   private:
    ObjectIndex target_ = 0;
    boost::dynamic_bitset<> members_;
  };

  //! Every member has codomain x and the set is closed under precomposition.
  bool is_sieve(FiniteCategory const& cat, ObjectIndex x, boost::dynamic_bitset<> const& members);
  //! Throws InvalidData when the morphisms do not form a sieve on x.
  Sieve make_sieve(FiniteCategory const& cat, ObjectIndex x, std::span<MorphismIndex const> members);

  Sieve maximal_sieve(FiniteCategory const& cat, ObjectIndex x);
  Sieve empty_sieve(FiniteCategory const& cat, ObjectIndex x);
  //! Smallest sieve on x containing the given morphisms into x.
  Sieve generated_sieve(FiniteCategory const& cat, ObjectIndex x, std::span<MorphismIndex const> generators);

  //! All sieves on x in canonical order.
  std::vector<Sieve> sieves_on(FiniteCategory const& cat, ObjectIndex x);

  //! f*(S) = {g : f g in S}, a sieve on dom f. Throws PreconditionError when
  //! cod f is not the target of s.
  Sieve pullback_sieve(FiniteCategory const& cat, Sieve const& s, MorphismIndex f);

  Sieve intersect(Sieve const& a, Sieve const& b);

  //! "Hom(-,x)" for the maximal sieve, "{}" for the empty one, otherwise the
  //! member names, e.g. "{g,gf}".
  std::string format_sieve(FiniteCategory const& cat, Sieve const& s);

}  // namespace finsite
