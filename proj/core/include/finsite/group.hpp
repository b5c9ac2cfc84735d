#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace finsite {

  using GroupElement = std::size_t;
  //! Sorted element indices of a subgroup.
  using Subgroup = std::vector<GroupElement>;

  //! A finite group given by its Cayley table; table[a][b] = a * b.
  class FiniteGroup {
   public:
    //! Throws InvalidData when the table is not a group law.
    FiniteGroup(std::vector<std::string> elements, std::vector<std::vector<GroupElement>> table);

    static FiniteGroup trivial();
    //! Elements e, a, a^2, ...
    static FiniteGroup cyclic(std::size_t n);
    //! Permutations of {0..n-1} in one-line notation, (a * b)(i) = a(b(i)).
    static FiniteGroup symmetric(std::size_t n);
    //! "trivial", "C<n>", "S<n>" (n <= 5).
    static FiniteGroup named(std::string_view name);

    std::size_t order() const noexcept { return names_.size(); }
    GroupElement identity() const noexcept { return identity_; }
    GroupElement multiply(GroupElement a, GroupElement b) const { return table_[a][b]; }
    GroupElement inverse(GroupElement a) const { return inverse_[a]; }
    std::string const& name(GroupElement a) const { return names_.at(a); }
    std::vector<std::string> const& names() const noexcept { return names_; }
    std::vector<std::vector<GroupElement>> const& table() const noexcept { return table_; }
    GroupElement element_at(std::string_view name) const;

    //! g^-1 H g.
    Subgroup conjugate(Subgroup const& h, GroupElement g) const;
    //! Subgroup generated by the given elements.
    Subgroup generate(std::vector<GroupElement> const& gens) const;
    bool is_subgroup(std::vector<GroupElement> const& set) const;
    Subgroup normalizer(Subgroup const& h) const;

   private:
    std::vector<std::string> names_;
    std::vector<std::vector<GroupElement>> table_;
    std::vector<GroupElement> inverse_;
    GroupElement identity_ = 0;
  };

  //! Every subgroup, ordered by order and then lexicographically.
  std::vector<Subgroup> all_subgroups(FiniteGroup const& g);

  //! True when |H| is a power of p (the trivial subgroup included).
  bool is_p_subgroup(Subgroup const& h, std::size_t p);

}  // namespace finsite
