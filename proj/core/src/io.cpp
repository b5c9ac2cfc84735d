#include "finsite/io.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace finsite::io {

  ParseError::ParseError(std::size_t line, std::string field, std::string const& message)
      : InvalidData((line > 0 ? "line " + std::to_string(line) + ": " : std::string()) +
                    (field.empty() ? std::string() : field + ": ") +
                    message.substr(0, message.find_last_not_of("\n") + 1)),
        line_(line),
        field_(std::move(field)) {}

  namespace {

    // A YAML node together with its dotted path, so every complaint can name
    // the line and the field it is about.
    class Cursor {
     public:
      Cursor(YAML::Node node, std::string path) : node_(std::move(node)), path_(std::move(path)) {}

      [[noreturn]] void fail(std::string const& message) const {
        std::size_t line = node_.IsDefined() && node_.Mark().line >= 0 ? node_.Mark().line + 1 : 0;
        throw ParseError(line, path_, message);
      }

      YAML::Node const& node() const noexcept { return node_; }
      std::string const& path() const noexcept { return path_; }

      void expect_map(std::initializer_list<std::string_view> allowed) const {
        if (!node_.IsMap()) {
          fail("expected a mapping");
        }
        for (auto it = node_.begin(); it != node_.end(); ++it) {
          auto key = it->first.as<std::string>();
          if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
            Cursor(it->first, join(key)).fail("unknown field");
          }
        }
      }

      Cursor at(std::string const& key) const {
        auto child = node_[key];
        if (!child.IsDefined()) {
          fail("missing field '" + key + "'");
        }
        return {child, join(key)};
      }

      std::optional<Cursor> maybe(std::string const& key) const {
        auto child = node_[key];
        if (!child.IsDefined()) {
          return std::nullopt;
        }
        return Cursor(child, join(key));
      }

      std::vector<Cursor> items() const {
        if (!node_.IsSequence()) {
          fail("expected a list");
        }
        std::vector<Cursor> out;
        std::size_t i = 0;
        for (auto const& child : node_) {
          out.emplace_back(child, path_ + "[" + std::to_string(i++) + "]");
        }
        return out;
      }

      std::vector<std::pair<std::string, Cursor>> entries() const {
        if (!node_.IsMap()) {
          fail("expected a mapping");
        }
        std::vector<std::pair<std::string, Cursor>> out;
        for (auto it = node_.begin(); it != node_.end(); ++it) {
          auto key = it->first.as<std::string>();
          out.emplace_back(key, Cursor(it->second, join(key)));
        }
        return out;
      }

      std::string text() const {
        if (!node_.IsScalar()) {
          fail("expected a scalar");
        }
        return node_.Scalar();
      }

      std::size_t count() const {
        auto t = text();
        if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) { return c >= '0' && c <= '9'; })) {
          fail("expected a non-negative integer, got '" + t + "'");
        }
        try {
          return std::stoull(t);
        } catch (std::exception const&) {
          fail("integer out of range");
        }
      }

      Scalar scalar(Field const& k) const {
        auto t = text();
        try {
          return k.parse_scalar(t);
        } catch (std::exception const& e) {
          fail(std::string("bad scalar '") + t + "': " + e.what());
        }
      }

      std::vector<Scalar> vector(Field const& k, std::size_t n) const {
        auto rows = items();
        if (rows.size() != n) {
          fail("expected " + std::to_string(n) + " entries, got " + std::to_string(rows.size()));
        }
        std::vector<Scalar> out;
        for (auto const& c : rows) {
          out.push_back(c.scalar(k));
        }
        return out;
      }

      // A list of rows.
      Matrix matrix(Field const& k, std::size_t rows, std::size_t cols) const {
        auto rs = items();
        if (rs.size() != rows) {
          fail("expected " + std::to_string(rows) + " rows, got " + std::to_string(rs.size()));
        }
        Matrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i) {
          auto v = rs[i].vector(k, cols);
          for (std::size_t j = 0; j < cols; ++j) {
            m(i, j) = v[j];
          }
        }
        return m;
      }

     private:
      std::string join(std::string const& key) const { return path_.empty() ? key : path_ + "." + key; }

      YAML::Node node_;
      std::string path_;
    };

    Cursor load(std::string_view text, std::string_view format,
                std::initializer_list<std::string_view> allowed) {
      YAML::Node root;
      try {
        root = YAML::Load(std::string(text));
      } catch (YAML::ParserException const& e) {
        throw ParseError(static_cast<std::size_t>(e.mark.line + 1), "", e.msg);
      }
      Cursor c(root, "");
      c.expect_map(allowed);
      auto f = c.at("format").text();
      if (f != format) {
        c.at("format").fail("expected '" + std::string(format) + "', got '" + f + "'");
      }
      return c;
    }

    // Wraps validation failures of the assembled object with the location
    // of the block it came from.
    template <typename F>
    auto located(Cursor const& c, F&& build) -> decltype(build()) {
      try {
        return build();
      } catch (ParseError const&) {
        throw;
      } catch (Error const& e) {
        c.fail(e.what());
      }
    }

    // ---- category ---------------------------------------------------------

    FiniteCategory parse_category(Cursor const& c) {
      c.expect_map({"format", "objects", "morphisms", "identities", "compose"});
      RawCategory raw;
      for (auto const& o : c.at("objects").items()) {
        raw.objects.push_back(o.text());
      }
      auto endpoint = [&](Cursor const& e) {
        auto name = e.text();
        if (std::find(raw.objects.begin(), raw.objects.end(), name) == raw.objects.end()) {
          e.fail("unknown object '" + name + "'");
        }
        return name;
      };
      for (auto const& m : c.at("morphisms").items()) {
        m.expect_map({"id", "dom", "cod"});
        raw.morphisms.push_back({m.at("id").text(), endpoint(m.at("dom")), endpoint(m.at("cod"))});
      }
      for (auto const& [obj, id] : c.at("identities").entries()) {
        raw.identities.emplace_back(obj, id.text());
      }
      if (auto comp = c.maybe("compose")) {
        for (auto const& e : comp->items()) {
          e.expect_map({"g", "f", "gf"});
          raw.compose.push_back({e.at("g").text(), e.at("f").text(), e.at("gf").text()});
        }
      }
      return located(c, [&] { return validate_category(raw); });
    }

    ObjectIndex object_of(FiniteCategory const& cat, Cursor const& c, std::string const& name) {
      auto x = cat.find_object(name);
      if (!x) {
        c.fail("unknown object '" + name + "'");
      }
      return *x;
    }

    MorphismIndex morphism_of(FiniteCategory const& cat, Cursor const& c) {
      auto name = c.text();
      auto f = cat.find_morphism(name);
      if (!f) {
        c.fail("unknown morphism '" + name + "'");
      }
      return *f;
    }

    // Per-object entries keyed by object name; every object must appear.
    template <typename T, typename F>
    std::vector<T> per_object(FiniteCategory const& cat, Cursor const& c, F&& parse) {
      std::vector<std::optional<T>> out(cat.object_count());
      for (auto const& [name, v] : c.entries()) {
        auto x = object_of(cat, v, name);
        if (out[x]) {
          v.fail("duplicate entry");
        }
        out[x] = parse(x, v);
      }
      std::vector<T> result;
      for (ObjectIndex x = 0; x < cat.object_count(); ++x) {
        if (!out[x]) {
          c.fail("no entry for object '" + cat.object_name(x) + "'");
        }
        result.push_back(std::move(*out[x]));
      }
      return result;
    }

    // Per-morphism entries keyed by morphism id; identities may be omitted
    // and are then filled in by fallback.
    template <typename T, typename F, typename D>
    std::vector<T> per_morphism(FiniteCategory const& cat, Cursor const& c, F&& parse, D&& fallback) {
      std::vector<std::optional<T>> out(cat.morphism_count());
      for (auto const& [name, v] : c.entries()) {
        auto f = cat.find_morphism(name);
        if (!f) {
          v.fail("unknown morphism '" + name + "'");
        }
        if (out[*f]) {
          v.fail("duplicate entry");
        }
        out[*f] = parse(*f, v);
      }
      std::vector<T> result;
      for (MorphismIndex f = 0; f < cat.morphism_count(); ++f) {
        if (!out[f]) {
          if (!cat.is_identity(f)) {
            c.fail("no entry for morphism '" + cat.morphism_name(f) + "'");
          }
          out[f] = fallback(f);
        }
        result.push_back(std::move(*out[f]));
      }
      return result;
    }

    Field parse_field(Cursor const& c) {
      auto t = c.text();
      try {
        return Field::parse(t);
      } catch (std::exception const& e) {
        c.fail(e.what());
      }
    }

    // ---- algebras ---------------------------------------------------------

    // table[i][j] is the coefficient vector of b_i b_j.
    FiniteDimAlgebra parse_algebra(Cursor const& c, Field const& k) {
      std::vector<std::string> basis;
      for (auto const& b : c.at("basis").items()) {
        basis.push_back(b.text());
      }
      std::size_t n = basis.size();
      auto unit = c.at("unit").vector(k, n);
      auto rows = c.at("table").items();
      if (rows.size() != n) {
        c.at("table").fail("expected " + std::to_string(n) + " rows");
      }
      std::vector<std::vector<std::vector<Scalar>>> table(n);
      for (std::size_t i = 0; i < n; ++i) {
        auto cells = rows[i].items();
        if (cells.size() != n) {
          rows[i].fail("expected " + std::to_string(n) + " products");
        }
        for (std::size_t j = 0; j < n; ++j) {
          table[i].push_back(cells[j].vector(k, n));
        }
      }
      return FiniteDimAlgebra::from_dense(k, std::move(basis), table, std::move(unit));
    }

    AlgebraPresheaf parse_algebra_presheaf(Cursor const& c) {
      c.expect_map({"format", "category", "field", "algebras", "maps"});
      auto cat = parse_category(c.at("category"));
      auto k = parse_field(c.at("field"));
      auto algebras = per_object<FiniteDimAlgebra>(
          cat, c.at("algebras"), [&](ObjectIndex, Cursor const& v) {
            v.expect_map({"basis", "unit", "table"});
            return parse_algebra(v, k);
          });
      std::vector<Matrix> maps;
      if (auto m = c.maybe("maps")) {
        maps = per_morphism<Matrix>(
            cat, *m,
            [&](MorphismIndex f, Cursor const& v) {
              return v.matrix(k, algebras[cat.dom(f)].dim(), algebras[cat.cod(f)].dim());
            },
            [&](MorphismIndex f) { return Matrix::identity(algebras[cat.dom(f)].dim()); });
      } else if (cat.morphism_count() != cat.object_count()) {
        c.fail("missing field 'maps'");
      } else {
        for (MorphismIndex f = 0; f < cat.morphism_count(); ++f) {
          maps.push_back(Matrix::identity(algebras[cat.dom(f)].dim()));
        }
      }
      return located(c, [&] { return AlgebraPresheaf(cat, std::move(algebras), std::move(maps)); });
    }

    // ---- emitting ---------------------------------------------------------

    void emit_scalar(YAML::Emitter& out, Scalar const& s) { out << Field::format(s); }

    void emit_vector(YAML::Emitter& out, std::vector<Scalar> const& v) {
      out << YAML::Flow << YAML::BeginSeq;
      for (auto const& s : v) {
        emit_scalar(out, s);
      }
      out << YAML::EndSeq;
    }

    void emit_matrix(YAML::Emitter& out, Matrix const& m) {
      out << YAML::Flow << YAML::BeginSeq;
      for (std::size_t i = 0; i < m.rows(); ++i) {
        emit_vector(out, m.row_vector(i));
      }
      out << YAML::EndSeq;
    }

    void emit_category_body(YAML::Emitter& out, FiniteCategory const& cat) {
      auto raw = cat.to_raw();
      out << YAML::Key << "objects" << YAML::Value << YAML::Flow << raw.objects;
      out << YAML::Key << "morphisms" << YAML::Value << YAML::BeginSeq;
      for (auto const& m : raw.morphisms) {
        out << YAML::Flow << YAML::BeginMap << YAML::Key << "id" << YAML::Value << m.id << YAML::Key << "dom"
            << YAML::Value << m.dom << YAML::Key << "cod" << YAML::Value << m.cod << YAML::EndMap;
      }
      out << YAML::EndSeq;
      out << YAML::Key << "identities" << YAML::Value << YAML::Flow << YAML::BeginMap;
      for (auto const& [o, id] : raw.identities) {
        out << YAML::Key << o << YAML::Value << id;
      }
      out << YAML::EndMap;
      out << YAML::Key << "compose" << YAML::Value << YAML::BeginSeq;
      for (auto const& e : raw.compose) {
        out << YAML::Flow << YAML::BeginMap << YAML::Key << "g" << YAML::Value << e.g << YAML::Key << "f"
            << YAML::Value << e.f << YAML::Key << "gf" << YAML::Value << e.gf << YAML::EndMap;
      }
      out << YAML::EndSeq;
    }

    void emit_category(YAML::Emitter& out, FiniteCategory const& cat) {
      out << YAML::BeginMap;
      emit_category_body(out, cat);
      out << YAML::EndMap;
    }

    void emit_algebra_body(YAML::Emitter& out, FiniteDimAlgebra const& a) {
      out << YAML::Key << "basis" << YAML::Value << YAML::Flow << a.basis();
      out << YAML::Key << "unit" << YAML::Value;
      emit_vector(out, a.unit());
      out << YAML::Key << "table" << YAML::Value << YAML::BeginSeq;
      auto dense = a.dense();
      for (auto const& row : dense) {
        out << YAML::Flow << YAML::BeginSeq;
        for (auto const& cell : row) {
          emit_vector(out, cell);
        }
        out << YAML::EndSeq;
      }
      out << YAML::EndSeq;
    }

    void emit_algebra_presheaf_body(YAML::Emitter& out, AlgebraPresheaf const& r) {
      auto const& cat = r.category();
      out << YAML::Key << "category" << YAML::Value;
      emit_category(out, cat);
      out << YAML::Key << "field" << YAML::Value << r.field().name();
      out << YAML::Key << "algebras" << YAML::Value << YAML::BeginMap;
      for (ObjectIndex x = 0; x < cat.object_count(); ++x) {
        out << YAML::Key << cat.object_name(x) << YAML::Value << YAML::BeginMap;
        emit_algebra_body(out, r.algebra(x));
        out << YAML::EndMap;
      }
      out << YAML::EndMap;
      out << YAML::Key << "maps" << YAML::Value << YAML::BeginMap;
      for (MorphismIndex f = 0; f < cat.morphism_count(); ++f) {
        out << YAML::Key << cat.morphism_name(f) << YAML::Value;
        emit_matrix(out, r.map(f));
      }
      out << YAML::EndMap;
    }

    std::string finish(YAML::Emitter& out) {
      if (!out.good()) {
        throw Error("YAML emitter: " + out.GetLastError());
      }
      return std::string(out.c_str()) + "\n";
    }

    YAML::Emitter& begin(YAML::Emitter& out, std::string_view format) {
      out << YAML::BeginMap << YAML::Key << "format" << YAML::Value << std::string(format);
      return out;
    }

  }  // namespace

  std::string format_of(std::string_view text) {
    YAML::Node root;
    try {
      root = YAML::Load(std::string(text));
    } catch (YAML::ParserException const& e) {
      throw ParseError(static_cast<std::size_t>(e.mark.line + 1), "", e.msg);
    }
    Cursor c(root, "");
    if (!root.IsMap()) {
      c.fail("expected a mapping");
    }
    return c.at("format").text();
  }

  FiniteCategory read_category(std::string_view text) {
    auto c = load(text, kCategoryFormat, {"format", "objects", "morphisms", "identities", "compose"});
    return parse_category(c);
  }

  FiniteGroup read_group(std::string_view text) {
    auto c = load(text, kGroupFormat, {"format", "elements", "table"});
    std::vector<std::string> names;
    for (auto const& e : c.at("elements").items()) {
      names.push_back(e.text());
    }
    std::map<std::string, GroupElement> index;
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (!index.emplace(names[i], i).second) {
        c.at("elements").fail("duplicate element '" + names[i] + "'");
      }
    }
    auto rows = c.at("table").items();
    if (rows.size() != names.size()) {
      c.at("table").fail("expected " + std::to_string(names.size()) + " rows");
    }
    std::vector<std::vector<GroupElement>> table;
    for (auto const& row : rows) {
      auto cells = row.items();
      if (cells.size() != names.size()) {
        row.fail("expected " + std::to_string(names.size()) + " entries");
      }
      std::vector<GroupElement> r;
      for (auto const& cell : cells) {
        auto it = index.find(cell.text());
        if (it == index.end()) {
          cell.fail("unknown element '" + cell.text() + "'");
        }
        r.push_back(it->second);
      }
      table.push_back(std::move(r));
    }
    return located(c, [&] { return FiniteGroup(std::move(names), std::move(table)); });
  }

  GrothendieckTopology read_topology(std::string_view text) {
    auto c = load(text, kTopologyFormat, {"format", "category", "covering"});
    auto cat = parse_category(c.at("category"));
    auto covering = per_object<std::vector<Sieve>>(cat, c.at("covering"), [&](ObjectIndex x, Cursor const& v) {
      std::vector<Sieve> sieves;
      for (auto const& s : v.items()) {
        std::vector<MorphismIndex> members;
        for (auto const& m : s.items()) {
          members.push_back(morphism_of(cat, m));
        }
        sieves.push_back(located(s, [&] { return make_sieve(cat, x, members); }));
      }
      return sieves;
    });
    return located(c.at("covering"), [&] { return make_topology(cat, std::move(covering)); });
  }

  FullSubcategory read_subcategory(std::string_view text) {
    auto c = load(text, kSubcategoryFormat, {"format", "category", "objects"});
    auto cat = parse_category(c.at("category"));
    std::vector<ObjectIndex> objects;
    for (auto const& o : c.at("objects").items()) {
      objects.push_back(object_of(cat, o, o.text()));
    }
    return located(c.at("objects"), [&] { return FullSubcategory(cat, std::move(objects)); });
  }

  Presheaf read_presheaf(std::string_view text) {
    auto c = load(text, kPresheafFormat, {"format", "category", "kind", "field", "values", "maps"});
    auto cat = parse_category(c.at("category"));
    auto kind = c.at("kind").text();
    if (kind == "set") {
      if (c.maybe("field")) {
        c.at("field").fail("a set presheaf has no field");
      }
      auto elements = per_object<std::vector<std::string>>(cat, c.at("values"), [&](ObjectIndex, Cursor const& v) {
        std::vector<std::string> names;
        std::set<std::string> seen;
        for (auto const& e : v.items()) {
          if (!seen.insert(e.text()).second) {
            e.fail("duplicate element '" + e.text() + "'");
          }
          names.push_back(e.text());
        }
        return names;
      });
      auto lookup = [&](ObjectIndex x, Cursor const& e) {
        auto const& names = elements[x];
        auto it = std::find(names.begin(), names.end(), e.text());
        if (it == names.end()) {
          e.fail("'" + e.text() + "' is not an element of F(" + cat.object_name(x) + ")");
        }
        return static_cast<std::size_t>(it - names.begin());
      };
      auto maps = per_morphism<std::vector<std::size_t>>(
          cat, c.at("maps"),
          [&](MorphismIndex f, Cursor const& v) {
            auto images = v.items();
            if (images.size() != elements[cat.cod(f)].size()) {
              v.fail("expected one image per element of F(" + cat.object_name(cat.cod(f)) + ")");
            }
            std::vector<std::size_t> out;
            for (auto const& e : images) {
              out.push_back(lookup(cat.dom(f), e));
            }
            return out;
          },
          [&](MorphismIndex f) {
            std::vector<std::size_t> id(elements[cat.dom(f)].size());
            for (std::size_t i = 0; i < id.size(); ++i) {
              id[i] = i;
            }
            return id;
          });
      return located(c, [&] { return Presheaf(SetPresheaf(cat, std::move(elements), std::move(maps))); });
    }
    if (kind == "linear") {
      auto k = parse_field(c.at("field"));
      auto dims = per_object<std::size_t>(cat, c.at("values"), [](ObjectIndex, Cursor const& v) { return v.count(); });
      auto maps = per_morphism<Matrix>(
          cat, c.at("maps"),
          [&](MorphismIndex f, Cursor const& v) { return v.matrix(k, dims[cat.dom(f)], dims[cat.cod(f)]); },
          [&](MorphismIndex f) { return Matrix::identity(dims[cat.dom(f)]); });
      return located(c, [&] { return Presheaf(LinearPresheaf(cat, k, std::move(dims), std::move(maps))); });
    }
    c.at("kind").fail("expected 'set' or 'linear', got '" + kind + "'");
  }

  FiniteDimAlgebra read_algebra(std::string_view text) {
    auto c = load(text, kAlgebraFormat, {"format", "field", "basis", "unit", "table"});
    return parse_algebra(c, parse_field(c.at("field")));
  }

  AlgebraPresheaf read_algebra_presheaf(std::string_view text) {
    auto c = load(text, kAlgebraPresheafFormat, {"format", "category", "field", "algebras", "maps"});
    return parse_algebra_presheaf(c);
  }

  ModulePresheaf read_module_presheaf(std::string_view text) {
    auto c = load(text, kModulePresheafFormat, {"format", "ring", "dims", "maps", "action"});
    auto r = parse_algebra_presheaf(c.at("ring"));
    auto const& cat = r.category();
    auto const& k = r.field();
    auto dims = per_object<std::size_t>(cat, c.at("dims"), [](ObjectIndex, Cursor const& v) { return v.count(); });
    auto maps = per_morphism<Matrix>(
        cat, c.at("maps"),
        [&](MorphismIndex f, Cursor const& v) { return v.matrix(k, dims[cat.dom(f)], dims[cat.cod(f)]); },
        [&](MorphismIndex f) { return Matrix::identity(dims[cat.dom(f)]); });
    auto action = per_object<std::vector<Matrix>>(cat, c.at("action"), [&](ObjectIndex x, Cursor const& v) {
      auto mats = v.items();
      if (mats.size() != r.algebra(x).dim()) {
        v.fail("expected one matrix per basis element of R(" + cat.object_name(x) + ")");
      }
      std::vector<Matrix> out;
      for (auto const& m : mats) {
        out.push_back(m.matrix(k, dims[x], dims[x]));
      }
      return out;
    });
    return located(c, [&] {
      return ModulePresheaf(r, LinearPresheaf(cat, k, std::move(dims), std::move(maps)), std::move(action));
    });
  }

  AlgebraModule read_algebra_module(std::string_view text) {
    auto c = load(text, kAlgebraModuleFormat, {"format", "algebra", "dim", "action"});
    auto ac = c.at("algebra");
    ac.expect_map({"field", "basis", "unit", "table"});
    auto a = parse_algebra(ac, parse_field(ac.at("field")));
    auto n = c.at("dim").count();
    auto mats = c.at("action").items();
    if (mats.size() != a.dim()) {
      c.at("action").fail("expected one matrix per basis element");
    }
    std::vector<Matrix> action;
    for (auto const& m : mats) {
      action.push_back(m.matrix(a.field(), n, n));
    }
    return located(c, [&] { return AlgebraModule(a, n, std::move(action)); });
  }

  std::string write(FiniteCategory const& cat) {
    YAML::Emitter out;
    begin(out, kCategoryFormat);
    emit_category_body(out, cat);
    out << YAML::EndMap;
    return finish(out);
  }

  std::string write(FiniteGroup const& g) {
    YAML::Emitter out;
    begin(out, kGroupFormat);
    out << YAML::Key << "elements" << YAML::Value << YAML::Flow << g.names();
    out << YAML::Key << "table" << YAML::Value << YAML::BeginSeq;
    for (std::size_t a = 0; a < g.order(); ++a) {
      out << YAML::Flow << YAML::BeginSeq;
      for (std::size_t b = 0; b < g.order(); ++b) {
        out << g.name(g.multiply(a, b));
      }
      out << YAML::EndSeq;
    }
    out << YAML::EndSeq << YAML::EndMap;
    return finish(out);
  }

  std::string write(GrothendieckTopology const& j) {
    auto const& cat = j.category();
    YAML::Emitter out;
    begin(out, kTopologyFormat);
    out << YAML::Key << "category" << YAML::Value;
    emit_category(out, cat);
    out << YAML::Key << "covering" << YAML::Value << YAML::BeginMap;
    for (ObjectIndex x = 0; x < cat.object_count(); ++x) {
      out << YAML::Key << cat.object_name(x) << YAML::Value << YAML::BeginSeq;
      for (auto const& s : j.covering(x)) {
        out << YAML::Flow << YAML::BeginSeq;
        for (auto f : s.members()) {
          out << cat.morphism_name(f);
        }
        out << YAML::EndSeq;
      }
      out << YAML::EndSeq;
    }
    out << YAML::EndMap << YAML::EndMap;
    return finish(out);
  }

  std::string write(FullSubcategory const& d) {
    YAML::Emitter out;
    begin(out, kSubcategoryFormat);
    out << YAML::Key << "category" << YAML::Value;
    emit_category(out, d.parent());
    out << YAML::Key << "objects" << YAML::Value << YAML::Flow << YAML::BeginSeq;
    for (auto x : d.objects()) {
      out << d.parent().object_name(x);
    }
    out << YAML::EndSeq << YAML::EndMap;
    return finish(out);
  }

  std::string write(Presheaf const& p) {
    auto const& cat = category_of(p);
    YAML::Emitter out;
    begin(out, kPresheafFormat);
    out << YAML::Key << "category" << YAML::Value;
    emit_category(out, cat);
    if (auto const* f = std::get_if<SetPresheaf>(&p)) {
      out << YAML::Key << "kind" << YAML::Value << "set";
      out << YAML::Key << "values" << YAML::Value << YAML::BeginMap;
      for (ObjectIndex x = 0; x < cat.object_count(); ++x) {
        out << YAML::Key << cat.object_name(x) << YAML::Value << YAML::Flow << f->elements(x);
      }
      out << YAML::EndMap << YAML::Key << "maps" << YAML::Value << YAML::BeginMap;
      for (MorphismIndex m = 0; m < cat.morphism_count(); ++m) {
        out << YAML::Key << cat.morphism_name(m) << YAML::Value << YAML::Flow << YAML::BeginSeq;
        for (auto i : f->map(m)) {
          out << f->elements(cat.dom(m))[i];
        }
        out << YAML::EndSeq;
      }
      out << YAML::EndMap;
    } else {
      auto const& g = std::get<LinearPresheaf>(p);
      out << YAML::Key << "kind" << YAML::Value << "linear";
      out << YAML::Key << "field" << YAML::Value << g.field().name();
      out << YAML::Key << "values" << YAML::Value << YAML::BeginMap;
      for (ObjectIndex x = 0; x < cat.object_count(); ++x) {
        out << YAML::Key << cat.object_name(x) << YAML::Value << g.dim(x);
      }
      out << YAML::EndMap << YAML::Key << "maps" << YAML::Value << YAML::BeginMap;
      for (MorphismIndex m = 0; m < cat.morphism_count(); ++m) {
        out << YAML::Key << cat.morphism_name(m) << YAML::Value;
        emit_matrix(out, g.map(m));
      }
      out << YAML::EndMap;
    }
    out << YAML::EndMap;
    return finish(out);
  }

  std::string write(FiniteDimAlgebra const& a) {
    YAML::Emitter out;
    begin(out, kAlgebraFormat);
    out << YAML::Key << "field" << YAML::Value << a.field().name();
    emit_algebra_body(out, a);
    out << YAML::EndMap;
    return finish(out);
  }

  std::string write(AlgebraPresheaf const& r) {
    YAML::Emitter out;
    begin(out, kAlgebraPresheafFormat);
    emit_algebra_presheaf_body(out, r);
    out << YAML::EndMap;
    return finish(out);
  }

  std::string write(ModulePresheaf const& m) {
    auto const& cat = m.category();
    YAML::Emitter out;
    begin(out, kModulePresheafFormat);
    out << YAML::Key << "ring" << YAML::Value << YAML::BeginMap;
    emit_algebra_presheaf_body(out, m.ring());
    out << YAML::EndMap;
    out << YAML::Key << "dims" << YAML::Value << YAML::Flow << YAML::BeginMap;
    for (ObjectIndex x = 0; x < cat.object_count(); ++x) {
      out << YAML::Key << cat.object_name(x) << YAML::Value << m.dim(x);
    }
    out << YAML::EndMap << YAML::Key << "maps" << YAML::Value << YAML::BeginMap;
    for (MorphismIndex f = 0; f < cat.morphism_count(); ++f) {
      out << YAML::Key << cat.morphism_name(f) << YAML::Value;
      emit_matrix(out, m.map(f));
    }
    out << YAML::EndMap << YAML::Key << "action" << YAML::Value << YAML::BeginMap;
    for (ObjectIndex x = 0; x < cat.object_count(); ++x) {
      out << YAML::Key << cat.object_name(x) << YAML::Value << YAML::BeginSeq;
      for (auto const& a : m.actions()[x]) {
        emit_matrix(out, a);
      }
      out << YAML::EndSeq;
    }
    out << YAML::EndMap << YAML::EndMap;
    return finish(out);
  }

  std::string write(AlgebraModule const& n) {
    YAML::Emitter out;
    begin(out, kAlgebraModuleFormat);
    out << YAML::Key << "algebra" << YAML::Value << YAML::BeginMap;
    out << YAML::Key << "field" << YAML::Value << n.field().name();
    emit_algebra_body(out, n.algebra());
    out << YAML::EndMap;
    out << YAML::Key << "dim" << YAML::Value << n.dim();
    out << YAML::Key << "action" << YAML::Value << YAML::BeginSeq;
    for (auto const& a : n.actions()) {
      emit_matrix(out, a);
    }
    out << YAML::EndSeq << YAML::EndMap;
    return finish(out);
  }

  std::string read_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw Error("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

}  // namespace finsite::io
