#pragma once

#include <cstddef>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "finsite/errors.hpp"

namespace finsite {

  using ObjectIndex = std::size_t;
  using MorphismIndex = std::size_t;

  inline constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  //! Unvalidated description of a finite category, as read from a file or
  //! produced by a generator. Composition entries (g, f, gf) mean "f then g".
  struct RawCategory {
    struct Morphism {
      std::string id;
      std::string dom;
      std::string cod;
    };
    struct Composite {
      std::string g;
      std::string f;
      std::string gf;
    };

    std::vector<std::string> objects;
    std::vector<Morphism> morphisms;
    std::vector<std::pair<std::string, std::string>> identities;
    std::vector<Composite> compose;
  };

  enum class CategoryIssue {
    duplicate_object,
    duplicate_morphism,
    unknown_object,
    unknown_morphism,
    missing_identity,
    bad_identity,
    not_composable,
    conflicting_composite,
    composite_endpoints,
    missing_composite,
    associativity_failure,
  };

  struct CategoryDiagnostic {
    CategoryIssue kind;
    std::string message;
  };

  struct ValidationReport {
    std::vector<CategoryDiagnostic> issues;

    bool ok() const noexcept { return issues.empty(); }
    bool has(CategoryIssue kind) const;
    std::string to_string() const;
  };

  //! Thrown by validate_category; carries the full report.
  class CategoryError : public InvalidData {
   public:
    explicit CategoryError(ValidationReport report);
    ValidationReport const& report() const noexcept { return report_; }

   private:
    ValidationReport report_;
  };

  struct MorphismData {
    std::string id;
    ObjectIndex dom;
    ObjectIndex cod;
  };

  //! A validated finite category. Objects and morphisms are addressed by
  //! their index in input order. compose(g, f) is "f then g" (the usual
  //! product gf) and is defined exactly when dom(g) == cod(f).
  //!
  //! Instances are immutable and share their tables, so copies are cheap.
  class FiniteCategory {
   public:
    //! The empty category.
    FiniteCategory();

    std::size_t object_count() const noexcept;
    std::size_t morphism_count() const noexcept;

    std::string const& object_name(ObjectIndex x) const;
    MorphismData const& morphism(MorphismIndex f) const;
    std::string const& morphism_name(MorphismIndex f) const { return morphism(f).id; }
    ObjectIndex dom(MorphismIndex f) const { return morphism(f).dom; }
    ObjectIndex cod(MorphismIndex f) const { return morphism(f).cod; }

    std::optional<ObjectIndex> find_object(std::string_view name) const;
    std::optional<MorphismIndex> find_morphism(std::string_view name) const;
    //! Like find_*, but throws PreconditionError on unknown names.
    ObjectIndex object_at(std::string_view name) const;
    MorphismIndex morphism_at(std::string_view name) const;

    MorphismIndex identity(ObjectIndex x) const;
    bool is_identity(MorphismIndex f) const { return identity(dom(f)) == f; }
    //! Throws PreconditionError when dom(g) != cod(f).
    MorphismIndex compose(MorphismIndex g, MorphismIndex f) const;
    std::optional<MorphismIndex> try_compose(MorphismIndex g, MorphismIndex f) const;

    //! Morphisms x -> y in index order.
    std::span<MorphismIndex const> hom(ObjectIndex x, ObjectIndex y) const;
    //! Morphisms with codomain x, in index order.
    std::span<MorphismIndex const> into(ObjectIndex x) const;
    //! Morphisms with domain x, in index order.
    std::span<MorphismIndex const> out_of(ObjectIndex x) const;

    RawCategory to_raw() const;

    //! Structural equality (same names, same order, same table).
    friend bool operator==(FiniteCategory const& a, FiniteCategory const& b);

    // Implementation detail: shared immutable tables.
    struct Data;
    explicit FiniteCategory(std::shared_ptr<Data const> data);

   private:

    std::shared_ptr<Data const> data_;
  };

  //! Checks every axiom and returns all violations without throwing.
  ValidationReport check_category(RawCategory const& raw);

  //! Validates raw and returns the category; throws CategoryError listing
  //! every violated axiom.
  FiniteCategory validate_category(RawCategory const& raw);

}  // namespace finsite
