#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "finsite/category.hpp"

namespace finsite {

  //! Two-sided inverse of f, if any.
  std::optional<MorphismIndex> inverse_of(FiniteCategory const& cat, MorphismIndex f);
  bool is_isomorphism(FiniteCategory const& cat, MorphismIndex f);
  bool are_isomorphic(FiniteCategory const& cat, ObjectIndex x, ObjectIndex y);
  //! Every endomorphism is invertible.
  bool is_ei(FiniteCategory const& cat);

  //! e = s r with r s = identity(image object).
  struct Splitting {
    ObjectIndex image;
    MorphismIndex retraction;  // r : x -> image
    MorphismIndex section;     // s : image -> x
  };

  struct KaroubianReport {
    bool karoubian = true;
    //! One splitting per idempotent that splits, keyed by the idempotent.
    std::map<MorphismIndex, Splitting> witnesses;
    std::vector<MorphismIndex> unsplit;
  };

  //! Exhaustive splitting search over every idempotent endomorphism.
  KaroubianReport karoubian_report(FiniteCategory const& cat);
  bool is_karoubian(FiniteCategory const& cat);

  //! A full subcategory given by an object subset of a parent category,
  //! together with its induced category and the index translations.
  class FullSubcategory {
   public:
    //! The objects need not be sorted; duplicates are ignored.
    FullSubcategory(FiniteCategory parent, std::vector<ObjectIndex> objects);
    static FullSubcategory from_names(FiniteCategory parent, std::vector<std::string> const& names);
    static FullSubcategory whole(FiniteCategory parent);
    static FullSubcategory empty(FiniteCategory parent);

    FiniteCategory const& parent() const noexcept { return parent_; }
    //! Induced category; object and morphism order follow the parent.
    FiniteCategory const& category() const noexcept { return induced_; }
    std::vector<ObjectIndex> const& objects() const noexcept { return objects_; }
    std::size_t size() const noexcept { return objects_.size(); }
    bool contains(ObjectIndex x) const { return member_.at(x); }

    ObjectIndex to_parent_object(ObjectIndex sub) const { return objects_.at(sub); }
    MorphismIndex to_parent_morphism(MorphismIndex sub) const { return morphisms_.at(sub); }
    std::optional<ObjectIndex> from_parent_object(ObjectIndex x) const;
    std::optional<MorphismIndex> from_parent_morphism(MorphismIndex f) const;

    //! Closed under isomorphism in the parent.
    bool is_strictly_full() const;
    //! Contains C_{<=x} for each of its objects (parent must be EI).
    bool is_co_ideal() const;
    //! "{x,y}" using object names in parent order; "{}" when empty.
    std::string label() const;

    friend bool operator==(FullSubcategory const& a, FullSubcategory const& b) {
      return a.objects_ == b.objects_ && a.parent_ == b.parent_;
    }

   private:
    FiniteCategory parent_;
    std::vector<ObjectIndex> objects_;
    std::vector<bool> member_;
    std::vector<MorphismIndex> morphisms_;
    std::vector<std::size_t> object_back_;
    std::vector<std::size_t> morphism_back_;
    FiniteCategory induced_;
  };

  //! All iso-closed object subsets whose induced category is Karoubian,
  //! including the empty one, ordered by size and then lexicographically by
  //! object indices.
  std::vector<FullSubcategory> strictly_full_karoubian_subcategories(FiniteCategory const& cat);

  //! Isomorphism classes of an EI category with the induced partial order.
  class IsoClassPoset {
   public:
    //! Throws PreconditionError unless cat is EI.
    explicit IsoClassPoset(FiniteCategory cat);

    std::size_t class_count() const noexcept { return classes_.size(); }
    //! Classes are ordered by their first object; objects within a class in
    //! index order.
    std::vector<std::vector<ObjectIndex>> const& classes() const noexcept { return classes_; }
    std::size_t class_of(ObjectIndex x) const { return class_of_.at(x); }
    //! [a] <= [b] iff Hom(a, b) is non-empty.
    bool leq(std::size_t a, std::size_t b) const { return leq_.at(a * classes_.size() + b); }
    bool is_minimal_class(std::size_t c) const;

    //! Union of the minimal classes, in object order.
    std::vector<ObjectIndex> minimal_objects() const;
    FullSubcategory minimal_subcategory() const;
    //! C_{<=x}: objects y with Hom(y, x) non-empty.
    FullSubcategory down_set(ObjectIndex x) const;
    //! C_{<x}: C_{<=x} without the class of x.
    FullSubcategory strict_down_set(ObjectIndex x) const;

   private:
    FiniteCategory cat_;
    std::vector<std::vector<ObjectIndex>> classes_;
    std::vector<std::size_t> class_of_;
    std::vector<bool> leq_;
  };

  IsoClassPoset iso_class_poset(FiniteCategory const& cat);

}  // namespace finsite
