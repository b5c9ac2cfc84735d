#include "finsite/category.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace finsite {

  struct FiniteCategory::Data {
    std::vector<std::string> objects;
    std::vector<MorphismData> morphisms;
    std::vector<MorphismIndex> identities;
    // table[g * m + f] = gf, or kNone when not composable
    std::vector<MorphismIndex> table;
    std::vector<std::vector<MorphismIndex>> homs;  // x * n + y
    std::vector<std::vector<MorphismIndex>> into;
    std::vector<std::vector<MorphismIndex>> out_of;
    std::unordered_map<std::string, ObjectIndex> object_lookup;
    std::unordered_map<std::string, MorphismIndex> morphism_lookup;
  };

  bool ValidationReport::has(CategoryIssue kind) const {
    return std::any_of(issues.begin(), issues.end(),
                       [kind](CategoryDiagnostic const& d) { return d.kind == kind; });
  }

  std::string ValidationReport::to_string() const {
    std::ostringstream out;
    for (auto const& d : issues) {
      out << d.message << '\n';
    }
    return out.str();
  }

  CategoryError::CategoryError(ValidationReport report)
      : InvalidData("invalid category:\n" + report.to_string()), report_(std::move(report)) {}

  namespace {

    struct Built {
      ValidationReport report;
      std::shared_ptr<FiniteCategory::Data> data;
    };

  }  // namespace

  // Defined as a member-friendly helper so it can fill the private Data.
  static Built build(RawCategory const& raw);

  FiniteCategory::FiniteCategory() : data_(std::make_shared<Data const>()) {}

  FiniteCategory::FiniteCategory(std::shared_ptr<Data const> data) : data_(std::move(data)) {}

  std::size_t FiniteCategory::object_count() const noexcept {
    return data_->objects.size();
  }

  std::size_t FiniteCategory::morphism_count() const noexcept {
    return data_->morphisms.size();
  }

  std::string const& FiniteCategory::object_name(ObjectIndex x) const {
    return data_->objects.at(x);
  }

  MorphismData const& FiniteCategory::morphism(MorphismIndex f) const {
    return data_->morphisms.at(f);
  }

  std::optional<ObjectIndex> FiniteCategory::find_object(std::string_view name) const {
    auto it = data_->object_lookup.find(std::string(name));
    if (it == data_->object_lookup.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  std::optional<MorphismIndex> FiniteCategory::find_morphism(std::string_view name) const {
    auto it = data_->morphism_lookup.find(std::string(name));
    if (it == data_->morphism_lookup.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  ObjectIndex FiniteCategory::object_at(std::string_view name) const {
    if (auto x = find_object(name)) {
      return *x;
    }
    throw PreconditionError("unknown object '" + std::string(name) + "'");
  }

  MorphismIndex FiniteCategory::morphism_at(std::string_view name) const {
    if (auto f = find_morphism(name)) {
      return *f;
    }
    throw PreconditionError("unknown morphism '" + std::string(name) + "'");
  }

  MorphismIndex FiniteCategory::identity(ObjectIndex x) const {
    return data_->identities.at(x);
  }

  std::optional<MorphismIndex> FiniteCategory::try_compose(MorphismIndex g, MorphismIndex f) const {
    std::size_t const m = data_->morphisms.size();
    if (g >= m || f >= m) {
      return std::nullopt;
    }
    MorphismIndex gf = data_->table[g * m + f];
    if (gf == kNone) {
      return std::nullopt;
    }
    return gf;
  }

  MorphismIndex FiniteCategory::compose(MorphismIndex g, MorphismIndex f) const {
    if (auto gf = try_compose(g, f)) {
      return *gf;
    }
    throw PreconditionError("morphisms " + morphism_name(g) + " and " + morphism_name(f)
                            + " are not composable");
  }

  std::span<MorphismIndex const> FiniteCategory::hom(ObjectIndex x, ObjectIndex y) const {
    return data_->homs.at(x * data_->objects.size() + y);
  }

  std::span<MorphismIndex const> FiniteCategory::into(ObjectIndex x) const {
    return data_->into.at(x);
  }

  std::span<MorphismIndex const> FiniteCategory::out_of(ObjectIndex x) const {
    return data_->out_of.at(x);
  }

  RawCategory FiniteCategory::to_raw() const {
    RawCategory raw;
    raw.objects = data_->objects;
    for (auto const& m : data_->morphisms) {
      raw.morphisms.push_back({m.id, data_->objects[m.dom], data_->objects[m.cod]});
    }
    for (ObjectIndex x = 0; x < object_count(); ++x) {
      raw.identities.emplace_back(data_->objects[x], data_->morphisms[identity(x)].id);
    }
    std::size_t const m = morphism_count();
    for (MorphismIndex g = 0; g < m; ++g) {
      for (MorphismIndex f = 0; f < m; ++f) {
        if (auto gf = try_compose(g, f)) {
          raw.compose.push_back({morphism_name(g), morphism_name(f), morphism_name(*gf)});
        }
      }
    }
    return raw;
  }

  bool operator==(FiniteCategory const& a, FiniteCategory const& b) {
    if (a.data_ == b.data_) {
      return true;
    }
    if (a.data_->objects != b.data_->objects || a.data_->identities != b.data_->identities
        || a.data_->table != b.data_->table
        || a.data_->morphisms.size() != b.data_->morphisms.size()) {
      return false;
    }
    for (std::size_t i = 0; i < a.data_->morphisms.size(); ++i) {
      auto const& x = a.data_->morphisms[i];
      auto const& y = b.data_->morphisms[i];
      if (x.id != y.id || x.dom != y.dom || x.cod != y.cod) {
        return false;
      }
    }
    return true;
  }

  static Built build(RawCategory const& raw) {
    Built out;
    auto& issues = out.report.issues;
    auto data = std::make_shared<FiniteCategory::Data>();
    auto note = [&](CategoryIssue kind, std::string msg) { issues.push_back({kind, std::move(msg)}); };

    for (auto const& name : raw.objects) {
      if (!data->object_lookup.emplace(name, data->objects.size()).second) {
        note(CategoryIssue::duplicate_object, "duplicate object '" + name + "'");
        continue;
      }
      data->objects.push_back(name);
    }
    std::size_t const n = data->objects.size();

    bool structural = true;
    for (auto const& m : raw.morphisms) {
      auto dom = data->object_lookup.find(m.dom);
      auto cod = data->object_lookup.find(m.cod);
      if (dom == data->object_lookup.end() || cod == data->object_lookup.end()) {
        note(CategoryIssue::unknown_object,
             "morphism '" + m.id + "' refers to unknown object '"
                 + (dom == data->object_lookup.end() ? m.dom : m.cod) + "'");
        structural = false;
        continue;
      }
      if (!data->morphism_lookup.emplace(m.id, data->morphisms.size()).second) {
        note(CategoryIssue::duplicate_morphism, "duplicate morphism '" + m.id + "'");
        structural = false;
        continue;
      }
      data->morphisms.push_back({m.id, dom->second, cod->second});
    }
    std::size_t const m = data->morphisms.size();

    data->identities.assign(n, kNone);
    for (auto const& [obj, mor] : raw.identities) {
      auto x = data->object_lookup.find(obj);
      auto f = data->morphism_lookup.find(mor);
      if (x == data->object_lookup.end()) {
        note(CategoryIssue::unknown_object, "identity declared for unknown object '" + obj + "'");
        continue;
      }
      if (f == data->morphism_lookup.end()) {
        note(CategoryIssue::unknown_morphism, "identity of '" + obj + "' is unknown morphism '" + mor + "'");
        continue;
      }
      auto const& md = data->morphisms[f->second];
      if (md.dom != x->second || md.cod != x->second) {
        note(CategoryIssue::bad_identity, "bad identity: '" + mor + "' is not an endomorphism of '" + obj + "'");
        continue;
      }
      if (data->identities[x->second] != kNone && data->identities[x->second] != f->second) {
        note(CategoryIssue::bad_identity, "bad identity: object '" + obj + "' has two identities");
        continue;
      }
      data->identities[x->second] = f->second;
    }
    for (ObjectIndex x = 0; x < n; ++x) {
      if (data->identities[x] == kNone) {
        note(CategoryIssue::missing_identity, "missing identity for object '" + data->objects[x] + "'");
        structural = false;
      }
    }

    data->table.assign(m * m, kNone);
    for (auto const& c : raw.compose) {
      auto g = data->morphism_lookup.find(c.g);
      auto f = data->morphism_lookup.find(c.f);
      auto gf = data->morphism_lookup.find(c.gf);
      if (g == data->morphism_lookup.end() || f == data->morphism_lookup.end()
          || gf == data->morphism_lookup.end()) {
        note(CategoryIssue::unknown_morphism,
             "composite (" + c.g + "," + c.f + ") = " + c.gf + " refers to an unknown morphism");
        structural = false;
        continue;
      }
      auto const& G = data->morphisms[g->second];
      auto const& F = data->morphisms[f->second];
      auto const& GF = data->morphisms[gf->second];
      if (G.dom != F.cod) {
        note(CategoryIssue::not_composable, "composite given for non-composable pair (" + c.g + "," + c.f + ")");
        continue;
      }
      if (GF.dom != F.dom || GF.cod != G.cod) {
        note(CategoryIssue::composite_endpoints,
             "composite (" + c.g + "," + c.f + ") = " + c.gf + " has the wrong domain or codomain");
        continue;
      }
      auto& slot = data->table[g->second * m + f->second];
      if (slot != kNone && slot != gf->second) {
        note(CategoryIssue::conflicting_composite, "conflicting composite (" + c.g + "," + c.f + ")");
        continue;
      }
      slot = gf->second;
    }

    bool total = true;
    for (MorphismIndex g = 0; g < m; ++g) {
      for (MorphismIndex f = 0; f < m; ++f) {
        if (data->morphisms[g].dom == data->morphisms[f].cod && data->table[g * m + f] == kNone) {
          note(CategoryIssue::missing_composite,
               "missing composite (" + data->morphisms[g].id + "," + data->morphisms[f].id + ")");
          total = false;
        }
      }
    }

    if (structural && total) {
      for (MorphismIndex f = 0; f < m; ++f) {
        auto const& F = data->morphisms[f];
        if (data->table[f * m + data->identities[F.dom]] != f
            || data->table[data->identities[F.cod] * m + f] != f) {
          note(CategoryIssue::bad_identity, "bad identity: unit law fails for '" + F.id + "'");
        }
      }
      for (MorphismIndex h = 0; h < m; ++h) {
        for (MorphismIndex g = 0; g < m; ++g) {
          if (data->morphisms[h].dom != data->morphisms[g].cod) {
            continue;
          }
          MorphismIndex hg = data->table[h * m + g];
          for (MorphismIndex f = 0; f < m; ++f) {
            if (data->morphisms[g].dom != data->morphisms[f].cod) {
              continue;
            }
            MorphismIndex left = data->table[h * m + data->table[g * m + f]];
            MorphismIndex right = data->table[hg * m + f];
            if (left != right) {
              note(CategoryIssue::associativity_failure,
                   "associativity failure on (" + data->morphisms[h].id + "," + data->morphisms[g].id
                       + "," + data->morphisms[f].id + ")");
            }
          }
        }
      }
    }

    data->homs.assign(n * n, {});
    data->into.assign(n, {});
    data->out_of.assign(n, {});
    for (MorphismIndex f = 0; f < m; ++f) {
      auto const& F = data->morphisms[f];
      data->homs[F.dom * n + F.cod].push_back(f);
      data->into[F.cod].push_back(f);
      data->out_of[F.dom].push_back(f);
    }
    out.data = std::move(data);
    return out;
  }

  ValidationReport check_category(RawCategory const& raw) {
    return build(raw).report;
  }

  FiniteCategory validate_category(RawCategory const& raw) {
    Built b = build(raw);
    if (!b.report.ok()) {
      throw CategoryError(std::move(b.report));
    }
    return FiniteCategory(std::move(b.data));
  }

}  // namespace finsite
