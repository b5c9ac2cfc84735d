#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "finsite/algebra.hpp"
#include "finsite/category.hpp"
#include "finsite/errors.hpp"
#include "finsite/group.hpp"
#include "finsite/module.hpp"
#include "finsite/presheaf.hpp"
#include "finsite/topology.hpp"

// Every artifact is a YAML document whose first line names its kind and
// schema version, e.g. "format: finsite/category/1". Documents embed what
// they depend on (a presheaf carries its category, a module its ring), so a
// single file is always self-contained. docs/formats.md has the schemas.
namespace finsite::io {

  inline constexpr std::string_view kCategoryFormat = "finsite/category/1";
  inline constexpr std::string_view kGroupFormat = "finsite/group/1";
  inline constexpr std::string_view kTopologyFormat = "finsite/topology/1";
  inline constexpr std::string_view kSubcategoryFormat = "finsite/subcategory/1";
  inline constexpr std::string_view kPresheafFormat = "finsite/presheaf/1";
  inline constexpr std::string_view kAlgebraFormat = "finsite/algebra/1";
  inline constexpr std::string_view kAlgebraPresheafFormat = "finsite/algebra-presheaf/1";
  inline constexpr std::string_view kModulePresheafFormat = "finsite/module-presheaf/1";
  inline constexpr std::string_view kAlgebraModuleFormat = "finsite/algebra-module/1";

  //! Malformed document. line is 1-based (0 when unknown); field is the
  //! dotted path of the offending key.
  class ParseError : public InvalidData {
   public:
    ParseError(std::size_t line, std::string field, std::string const& message);
    std::size_t line() const noexcept { return line_; }
    std::string const& field() const noexcept { return field_; }

   private:
    std::size_t line_;
    std::string field_;
  };

  //! The value of the format header.
  std::string format_of(std::string_view text);

  FiniteCategory read_category(std::string_view text);
  FiniteGroup read_group(std::string_view text);
  GrothendieckTopology read_topology(std::string_view text);
  FullSubcategory read_subcategory(std::string_view text);
  Presheaf read_presheaf(std::string_view text);
  FiniteDimAlgebra read_algebra(std::string_view text);
  AlgebraPresheaf read_algebra_presheaf(std::string_view text);
  ModulePresheaf read_module_presheaf(std::string_view text);
  AlgebraModule read_algebra_module(std::string_view text);

  std::string write(FiniteCategory const& cat);
  std::string write(FiniteGroup const& g);
  std::string write(GrothendieckTopology const& j);
  std::string write(FullSubcategory const& d);
  std::string write(Presheaf const& f);
  std::string write(FiniteDimAlgebra const& a);
  std::string write(AlgebraPresheaf const& r);
  std::string write(ModulePresheaf const& m);
  std::string write(AlgebraModule const& n);

  //! Throws Error when the file cannot be read.
  std::string read_file(std::string const& path);

}  // namespace finsite::io
