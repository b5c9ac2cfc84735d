#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "finsite/finsite.hpp"

namespace finsite::cli {

  //! Named artifacts of one invocation, each with where it came from
  //! ("file:<path>" or "generator:<what>"). Files are revalidated by the
  //! readers on load.
  class Workspace {
   public:
    using Artifact = std::variant<FiniteCategory, FiniteGroup, GrothendieckTopology, FullSubcategory, Presheaf,
                                  FiniteDimAlgebra, AlgebraPresheaf, ModulePresheaf, AlgebraModule>;

    struct Entry {
      Artifact value;
      std::string provenance;
    };

    //! Throws Error on a duplicate name.
    void add(std::string const& name, Artifact value, std::string provenance);
    //! Reads a document of any known format, stored under its path.
    Artifact const& load(std::string const& path);

    bool contains(std::string const& name) const { return entries_.count(name) > 0; }
    Entry const& entry(std::string const& name) const;
    std::vector<std::string> names() const;

    template <typename T>
    T const& get(std::string const& name) const {
      auto const* v = std::get_if<T>(&entry(name).value);
      if (v == nullptr) {
        throw InvalidData("'" + name + "' holds a different kind of artifact");
      }
      return *v;
    }

   private:
    std::map<std::string, Entry> entries_;
  };

  //! The category an artifact lives over, if it has one.
  std::optional<FiniteCategory> category_of(Workspace::Artifact const& a);

  struct Result {
    int status = 0;
    std::string out;
    std::string err;
  };

  //! Runs one command; args excludes the program name. Exit status 0 on
  //! success, 1 on domain errors (including malformed input files), 2 on
  //! usage errors.
  Result run(std::vector<std::string> const& args);

}  // namespace finsite::cli
