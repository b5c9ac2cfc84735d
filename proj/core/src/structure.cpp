#include "finsite/structure.hpp"

#include <algorithm>

namespace finsite {

  std::optional<MorphismIndex> inverse_of(FiniteCategory const& cat, MorphismIndex f) {
    ObjectIndex const x = cat.dom(f), y = cat.cod(f);
    for (MorphismIndex g : cat.hom(y, x)) {
      if (cat.compose(g, f) == cat.identity(x) && cat.compose(f, g) == cat.identity(y)) {
        return g;
      }
    }
    return std::nullopt;
  }

  bool is_isomorphism(FiniteCategory const& cat, MorphismIndex f) {
    return inverse_of(cat, f).has_value();
  }

  bool are_isomorphic(FiniteCategory const& cat, ObjectIndex x, ObjectIndex y) {
    auto h = cat.hom(x, y);
    return std::any_of(h.begin(), h.end(), [&](MorphismIndex f) { return is_isomorphism(cat, f); });
  }

  bool is_ei(FiniteCategory const& cat) {
    for (ObjectIndex x = 0; x < cat.object_count(); ++x) {
      for (MorphismIndex f : cat.hom(x, x)) {
        if (!is_isomorphism(cat, f)) {
          return false;
        }
      }
    }
    return true;
  }

  KaroubianReport karoubian_report(FiniteCategory const& cat) {
    KaroubianReport report;
    for (ObjectIndex x = 0; x < cat.object_count(); ++x) {
      for (MorphismIndex e : cat.hom(x, x)) {
        if (cat.compose(e, e) != e) {
          continue;
        }
        std::optional<Splitting> found;
        for (ObjectIndex y = 0; y < cat.object_count() && !found; ++y) {
          for (MorphismIndex r : cat.hom(x, y)) {
            for (MorphismIndex s : cat.hom(y, x)) {
              if (cat.compose(s, r) == e && cat.compose(r, s) == cat.identity(y)) {
                found = Splitting{y, r, s};
                break;
              }
            }
            if (found) {
              break;
            }
          }
        }
        if (found) {
          report.witnesses.emplace(e, *found);
        } else {
          report.karoubian = false;
          report.unsplit.push_back(e);
        }
      }
    }
    return report;
  }

  bool is_karoubian(FiniteCategory const& cat) {
    return karoubian_report(cat).karoubian;
  }

  FullSubcategory::FullSubcategory(FiniteCategory parent, std::vector<ObjectIndex> objects)
      : parent_(std::move(parent)), objects_(std::move(objects)) {
    std::sort(objects_.begin(), objects_.end());
    objects_.erase(std::unique(objects_.begin(), objects_.end()), objects_.end());
    std::size_t const n = parent_.object_count();
    member_.assign(n, false);
    object_back_.assign(n, kNone);
    for (std::size_t i = 0; i < objects_.size(); ++i) {
      if (objects_[i] >= n) {
        throw PreconditionError("subcategory object index out of range");
      }
      member_[objects_[i]] = true;
      object_back_[objects_[i]] = i;
    }
    morphism_back_.assign(parent_.morphism_count(), kNone);
    RawCategory raw;
    for (ObjectIndex x : objects_) {
      raw.objects.push_back(parent_.object_name(x));
      raw.identities.emplace_back(parent_.object_name(x), parent_.morphism_name(parent_.identity(x)));
    }
    for (MorphismIndex f = 0; f < parent_.morphism_count(); ++f) {
      if (member_[parent_.dom(f)] && member_[parent_.cod(f)]) {
        morphism_back_[f] = morphisms_.size();
        morphisms_.push_back(f);
        raw.morphisms.push_back({parent_.morphism_name(f), parent_.object_name(parent_.dom(f)),
                                 parent_.object_name(parent_.cod(f))});
      }
    }
    for (MorphismIndex g : morphisms_) {
      for (MorphismIndex f : morphisms_) {
        if (auto gf = parent_.try_compose(g, f)) {
          raw.compose.push_back(
              {parent_.morphism_name(g), parent_.morphism_name(f), parent_.morphism_name(*gf)});
        }
      }
    }
    induced_ = validate_category(raw);
  }

  FullSubcategory FullSubcategory::from_names(FiniteCategory parent, std::vector<std::string> const& names) {
    std::vector<ObjectIndex> objs;
    for (auto const& n : names) {
      objs.push_back(parent.object_at(n));
    }
    return FullSubcategory(std::move(parent), std::move(objs));
  }

  FullSubcategory FullSubcategory::whole(FiniteCategory parent) {
    std::vector<ObjectIndex> objs(parent.object_count());
    for (std::size_t i = 0; i < objs.size(); ++i) {
      objs[i] = i;
    }
    return FullSubcategory(std::move(parent), std::move(objs));
  }

  FullSubcategory FullSubcategory::empty(FiniteCategory parent) {
    return FullSubcategory(std::move(parent), {});
  }

  std::optional<ObjectIndex> FullSubcategory::from_parent_object(ObjectIndex x) const {
    if (object_back_.at(x) == kNone) {
      return std::nullopt;
    }
    return object_back_[x];
  }

  std::optional<MorphismIndex> FullSubcategory::from_parent_morphism(MorphismIndex f) const {
    if (morphism_back_.at(f) == kNone) {
      return std::nullopt;
    }
    return morphism_back_[f];
  }

  bool FullSubcategory::is_strictly_full() const {
    for (ObjectIndex x : objects_) {
      for (ObjectIndex y = 0; y < parent_.object_count(); ++y) {
        if (!member_[y] && are_isomorphic(parent_, x, y)) {
          return false;
        }
      }
    }
    return true;
  }

  bool FullSubcategory::is_co_ideal() const {
    for (ObjectIndex x : objects_) {
      for (ObjectIndex y = 0; y < parent_.object_count(); ++y) {
        if (!member_[y] && !parent_.hom(y, x).empty()) {
          return false;
        }
      }
    }
    return true;
  }

  std::string FullSubcategory::label() const {
    std::string s = "{";
    for (std::size_t i = 0; i < objects_.size(); ++i) {
      if (i > 0) {
        s += ",";
      }
      s += parent_.object_name(objects_[i]);
    }
    return s + "}";
  }

  namespace {
    std::vector<std::vector<ObjectIndex>> iso_classes(FiniteCategory const& cat) {
      std::size_t const n = cat.object_count();
      std::vector<std::size_t> cls(n, kNone);
      std::vector<std::vector<ObjectIndex>> classes;
      for (ObjectIndex x = 0; x < n; ++x) {
        if (cls[x] != kNone) {
          continue;
        }
        cls[x] = classes.size();
        classes.push_back({x});
        for (ObjectIndex y = x + 1; y < n; ++y) {
          if (cls[y] == kNone && are_isomorphic(cat, x, y)) {
            cls[y] = cls[x];
            classes.back().push_back(y);
          }
        }
      }
      return classes;
    }
  }  // namespace

  std::vector<FullSubcategory> strictly_full_karoubian_subcategories(FiniteCategory const& cat) {
    auto classes = iso_classes(cat);
    if (classes.size() > 24) {
      throw SearchSpaceTooLarge("too many isomorphism classes to enumerate subcategories");
    }
    std::vector<std::vector<ObjectIndex>> subsets;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << classes.size()); ++mask) {
      std::vector<ObjectIndex> objs;
      for (std::size_t c = 0; c < classes.size(); ++c) {
        if (mask & (std::uint64_t{1} << c)) {
          objs.insert(objs.end(), classes[c].begin(), classes[c].end());
        }
      }
      std::sort(objs.begin(), objs.end());
      subsets.push_back(std::move(objs));
    }
    std::sort(subsets.begin(), subsets.end(), [](auto const& a, auto const& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    std::vector<FullSubcategory> out;
    for (auto& objs : subsets) {
      FullSubcategory d(cat, std::move(objs));
      if (is_karoubian(d.category())) {
        out.push_back(std::move(d));
      }
    }
    return out;
  }

  IsoClassPoset::IsoClassPoset(FiniteCategory cat) : cat_(std::move(cat)) {
    if (!is_ei(cat_)) {
      throw PreconditionError("the isomorphism-class poset requires an EI category");
    }
    classes_ = iso_classes(cat_);
    class_of_.assign(cat_.object_count(), kNone);
    for (std::size_t c = 0; c < classes_.size(); ++c) {
      for (ObjectIndex x : classes_[c]) {
        class_of_[x] = c;
      }
    }
    std::size_t const k = classes_.size();
    leq_.assign(k * k, false);
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        leq_[a * k + b] = !cat_.hom(classes_[a].front(), classes_[b].front()).empty();
      }
    }
  }

  bool IsoClassPoset::is_minimal_class(std::size_t c) const {
    for (std::size_t d = 0; d < classes_.size(); ++d) {
      if (d != c && leq(d, c)) {
        return false;
      }
    }
    return true;
  }

  std::vector<ObjectIndex> IsoClassPoset::minimal_objects() const {
    std::vector<ObjectIndex> out;
    for (ObjectIndex x = 0; x < cat_.object_count(); ++x) {
      if (is_minimal_class(class_of_[x])) {
        out.push_back(x);
      }
    }
    return out;
  }

  FullSubcategory IsoClassPoset::minimal_subcategory() const {
    return FullSubcategory(cat_, minimal_objects());
  }

  FullSubcategory IsoClassPoset::down_set(ObjectIndex x) const {
    std::vector<ObjectIndex> objs;
    for (ObjectIndex y = 0; y < cat_.object_count(); ++y) {
      if (leq(class_of_[y], class_of_[x])) {
        objs.push_back(y);
      }
    }
    return FullSubcategory(cat_, std::move(objs));
  }

  FullSubcategory IsoClassPoset::strict_down_set(ObjectIndex x) const {
    std::vector<ObjectIndex> objs;
    for (ObjectIndex y = 0; y < cat_.object_count(); ++y) {
      if (class_of_[y] != class_of_[x] && leq(class_of_[y], class_of_[x])) {
        objs.push_back(y);
      }
    }
    return FullSubcategory(cat_, std::move(objs));
  }

  IsoClassPoset iso_class_poset(FiniteCategory const& cat) {
    return IsoClassPoset(cat);
  }

}  // namespace finsite
