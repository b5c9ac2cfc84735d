#include "cli.hpp"

#include <CLI11.hpp>
#include <yaml-cpp/yaml.h>

#include <cstdlib>
#include <sstream>

namespace finsite::cli {

  void Workspace::add(std::string const& name, Artifact value, std::string provenance) {
    if (!entries_.emplace(name, Entry{std::move(value), std::move(provenance)}).second) {
      throw Error("workspace already holds an artifact named '" + name + "'");
    }
  }

  Workspace::Artifact const& Workspace::load(std::string const& path) {
    if (contains(path)) {
      return entry(path).value;
    }
    auto text = io::read_file(path);
    auto format = io::format_of(text);
    Artifact a = [&]() -> Artifact {
      if (format == io::kCategoryFormat) {
        return io::read_category(text);
      }
      if (format == io::kGroupFormat) {
        return io::read_group(text);
      }
      if (format == io::kTopologyFormat) {
        return io::read_topology(text);
      }
      if (format == io::kSubcategoryFormat) {
        return io::read_subcategory(text);
      }
      if (format == io::kPresheafFormat) {
        return io::read_presheaf(text);
      }
      if (format == io::kAlgebraFormat) {
        return io::read_algebra(text);
      }
      if (format == io::kAlgebraPresheafFormat) {
        return io::read_algebra_presheaf(text);
      }
      if (format == io::kModulePresheafFormat) {
        return io::read_module_presheaf(text);
      }
      if (format == io::kAlgebraModuleFormat) {
        return io::read_algebra_module(text);
      }
      throw io::ParseError(1, "format", "unknown format '" + format + "'");
    }();
    add(path, std::move(a), "file:" + path);
    return entry(path).value;
  }

  Workspace::Entry const& Workspace::entry(std::string const& name) const {
    auto it = entries_.find(name);
    if (it == entries_.end()) {
      throw Error("no artifact named '" + name + "'");
    }
    return it->second;
  }

  std::vector<std::string> Workspace::names() const {
    std::vector<std::string> out;
    for (auto const& [name, e] : entries_) {
      out.push_back(name);
    }
    return out;
  }

  std::optional<FiniteCategory> category_of(Workspace::Artifact const& a) {
    return std::visit(
        [](auto const& v) -> std::optional<FiniteCategory> {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, FiniteCategory>) {
            return v;
          } else if constexpr (std::is_same_v<T, FullSubcategory>) {
            return v.parent();
          } else if constexpr (std::is_same_v<T, Presheaf>) {
            return finsite::category_of(v);
          } else if constexpr (std::is_same_v<T, GrothendieckTopology> || std::is_same_v<T, AlgebraPresheaf> ||
                               std::is_same_v<T, ModulePresheaf>) {
            return v.category();
          } else {
            return std::nullopt;
          }
        },
        a);
  }

  namespace {

    class UsageError : public std::runtime_error {
     public:
      using std::runtime_error::runtime_error;
    };

    enum class Format { structured, summary };

    struct Inputs {
      std::string gallery;
      std::string input;
      std::string group = "S3";
      std::size_t p = 0;
    };

    struct TopologyChoice {
      std::string file;
      std::string subcat;
      bool dense = false;
      bool min = false;
      bool max = false;
    };

    struct RingChoice {
      std::string file;
      std::string constant_field;
      std::string constant_algebra = "k";
    };

    struct RandomChoice {
      bool random = false;
      std::uint64_t seed = 0;
      std::string kind = "set";
      std::string field;
    };

    std::vector<std::string> split_names(std::string const& list) {
      std::vector<std::string> out;
      std::stringstream ss(list);
      std::string item;
      while (std::getline(ss, item, ',')) {
        if (!item.empty()) {
          out.push_back(item);
        }
      }
      return out;
    }

    Field field_or_default(std::string const& flag) {
      if (!flag.empty()) {
        return Field::parse(flag);
      }
      if (char const* env = std::getenv("FINSITE_FIELD"); env != nullptr && *env != '\0') {
        return Field::parse(env);
      }
      return Field::rationals();
    }

    std::string join_documents(std::vector<std::string> const& docs) {
      std::string out;
      for (std::size_t i = 0; i < docs.size(); ++i) {
        if (i > 0) {
          out += "---\n";
        }
        out += docs[i];
      }
      return out;
    }

    std::string finish(YAML::Emitter& e) { return std::string(e.c_str()) + "\n"; }

    // ---- summaries ----------------------------------------------------------

    std::string yes_no(bool b) { return b ? "yes" : "no"; }

    std::string category_summary(FiniteCategory const& cat) {
      std::ostringstream os;
      os << "objects: " << cat.object_count() << ", morphisms: " << cat.morphism_count() << "\n";
      os << "EI: " << yes_no(is_ei(cat)) << "\n";
      auto kr = karoubian_report(cat);
      os << "Karoubian: " << yes_no(kr.karoubian);
      if (!kr.karoubian) {
        os << " (unsplit:";
        for (auto e : kr.unsplit) {
          os << " " << cat.morphism_name(e);
        }
        os << ")";
      }
      os << "\n";
      auto poset = iso_class_poset(cat);
      os << "isomorphism classes:";
      for (auto const& c : poset.classes()) {
        os << " {";
        for (std::size_t i = 0; i < c.size(); ++i) {
          os << (i > 0 ? "," : "") << cat.object_name(c[i]);
        }
        os << "}";
      }
      os << "\nstrictly full Karoubian subcategories:";
      for (auto const& d : strictly_full_karoubian_subcategories(cat)) {
        os << " " << d.label();
      }
      os << "\n";
      return os.str();
    }

    std::string row_label(GrothendieckTopology const& j, std::size_t i) {
      try {
        return topology_label(classify_topology(j));
      } catch (Error const&) {
        return "J#" + std::to_string(i + 1);
      }
    }

    std::string topology_summary(std::vector<GrothendieckTopology> const& js) {
      if (js.empty()) {
        return "no topologies\n";
      }
      std::vector<std::string> labels;
      for (std::size_t i = 0; i < js.size(); ++i) {
        labels.push_back(row_label(js[i], i));
      }
      std::ostringstream os;
      os << js.size() << (js.size() == 1 ? " topology" : " topologies") << "; minimal covering sieves:\n";
      os << minimal_sieve_grid(js.front().category(), labels, js);
      return os.str();
    }

    std::string presheaf_summary(Presheaf const& p) {
      auto const& cat = finsite::category_of(p);
      std::ostringstream os;
      for (ObjectIndex x = 0; x < cat.object_count(); ++x) {
        os << cat.object_name(x) << ": ";
        if (auto const* f = std::get_if<SetPresheaf>(&p)) {
          os << f->size(x) << " {";
          for (std::size_t i = 0; i < f->size(x); ++i) {
            os << (i > 0 ? ", " : "") << f->elements(x)[i];
          }
          os << "}\n";
        } else {
          os << "dim " << std::get<LinearPresheaf>(p).dim(x) << "\n";
        }
      }
      return os.str();
    }

    std::string term_list(FiniteDimAlgebra const& a, std::vector<FiniteDimAlgebra::Term> const& terms) {
      if (terms.empty()) {
        return "0";
      }
      std::string s;
      for (std::size_t i = 0; i < terms.size(); ++i) {
        auto c = Field::format(terms[i].second);
        if (i > 0) {
          s += " + ";
        }
        if (c != "1") {
          s += c + " ";
        }
        s += a.basis()[terms[i].first];
      }
      return s;
    }

    std::string algebra_summary(FiniteDimAlgebra const& a) {
      std::ostringstream os;
      os << "dimension " << a.dim() << " over " << a.field().name() << "\n";
      os << "basis:";
      for (auto const& b : a.basis()) {
        os << " " << b;
      }
      os << "\nunit: " << term_list(a, [&] {
        std::vector<FiniteDimAlgebra::Term> t;
        for (std::size_t i = 0; i < a.dim(); ++i) {
          if (a.unit()[i] != 0) {
            t.emplace_back(i, a.unit()[i]);
          }
        }
        return t;
      }()) << "\nnon-zero products:\n";
      for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
          if (!a.product(i, j).empty()) {
            os << "  " << a.basis()[i] << " * " << a.basis()[j] << " = " << term_list(a, a.product(i, j)) << "\n";
          }
        }
      }
      return os.str();
    }

    std::string module_summary(ModulePresheaf const& m) {
      std::ostringstream os;
      auto const& cat = m.category();
      os << "module presheaf over " << m.field().name() << "\n";
      for (ObjectIndex x = 0; x < cat.object_count(); ++x) {
        os << "  " << cat.object_name(x) << ": dim " << m.dim(x) << " over R(" << cat.object_name(x)
           << ") of dim " << m.ring().algebra(x).dim() << "\n";
      }
      return os.str();
    }

    std::string module_summary(AlgebraModule const& n) {
      return "module of dim " + std::to_string(n.dim()) + " over an algebra of dim " +
             std::to_string(n.algebra().dim()) + " over " + n.field().name() + "\n";
    }

    // ---- command state --------------------------------------------------------

    struct Session {
      Workspace ws;
      Format format = Format::structured;

      FiniteCategory category(Inputs const& in) {
        if (in.gallery.empty() == in.input.empty()) {
          throw UsageError("give exactly one of --gallery and --input");
        }
        if (!in.gallery.empty()) {
          std::string name = "gallery:" + in.gallery;
          if (!ws.contains(name)) {
            ws.add(name, gallery_category(in.gallery, GalleryOptions{in.group, in.p}),
                   "generator:" + in.gallery + (in.gallery.rfind("orbit", 0) == 0 || in.gallery == "group"
                                                    ? " " + in.group
                                                    : std::string()));
          }
          return ws.get<FiniteCategory>(name);
        }
        auto cat = category_of(ws.load(in.input));
        if (!cat) {
          throw InvalidData("'" + in.input + "' does not carry a category");
        }
        return *cat;
      }

      GrothendieckTopology topology(FiniteCategory const& cat, TopologyChoice const& t) {
        int chosen = !t.file.empty() + !t.subcat.empty() + t.dense + t.min + t.max;
        if (chosen != 1) {
          throw UsageError("give exactly one of --topology, --subcat, --dense, --min, --max");
        }
        if (t.dense) {
          return dense_topology(cat);
        }
        if (t.min) {
          return minimal_topology(cat);
        }
        if (t.max) {
          return maximal_topology(cat);
        }
        if (!t.subcat.empty()) {
          return subcategory_topology(subcategory(cat, t.subcat));
        }
        auto j = file_artifact<GrothendieckTopology>(t.file, "--topology");
        if (!(j.category() == cat)) {
          throw InvalidData("topology in '" + t.file + "' lives on a different category");
        }
        return j;
      }

      FullSubcategory subcategory(FiniteCategory const& cat, std::string const& list) {
        auto names = split_names(list);
        for (auto const& n : names) {
          if (!cat.find_object(n)) {
            throw InvalidData("unknown object '" + n + "'");
          }
        }
        return FullSubcategory::from_names(cat, names);
      }

      AlgebraPresheaf ring(RingChoice const& r, Inputs const& in) {
        if (!r.file.empty()) {
          if (!in.gallery.empty() || !in.input.empty() || !r.constant_field.empty()) {
            throw UsageError("--ring replaces --gallery, --input and --constant-field");
          }
          return file_artifact<AlgebraPresheaf>(r.file, "--ring");
        }
        auto cat = category(in);
        auto k = field_or_default(r.constant_field);
        return AlgebraPresheaf::constant(cat, named_algebra(k, r.constant_algebra));
      }

      Presheaf presheaf(std::string const& file, RandomChoice const& rnd, Inputs const& in) {
        if (file.empty() == !rnd.random) {
          throw UsageError("give exactly one of --presheaf and --random");
        }
        if (!file.empty()) {
          if (!in.gallery.empty() || !in.input.empty()) {
            throw UsageError("--presheaf carries its own category");
          }
          return file_artifact<Presheaf>(file, "--presheaf");
        }
        auto cat = category(in);
        Rng rng(rnd.seed);
        if (rnd.kind == "set") {
          return random_set_presheaf(cat, rng);
        }
        if (rnd.kind == "linear") {
          return random_linear_presheaf(cat, field_or_default(rnd.field), rng);
        }
        throw UsageError("--kind must be 'set' or 'linear'");
      }

      template <typename T>
      T const& file_artifact(std::string const& path, char const* flag) {
        if (path.empty()) {
          throw UsageError(std::string("missing ") + flag);
        }
        ws.load(path);
        return ws.get<T>(path);
      }
    };

    void add_inputs(CLI::App* app, Inputs& in) {
      app->add_option("--gallery", in.gallery, "Named category: chain1..chain9, involution, idempotent, "
                                                "idempotent-split, group, orbit, orbit-p, orbit-p-full");
      app->add_option("--input", in.input, "Document carrying a category");
      app->add_option("--group", in.group, "Group for group/orbit galleries: trivial, C<n>, S<n>");
      app->add_option("--p", in.p, "Prime for orbit-p galleries");
    }

    void add_topology(CLI::App* app, TopologyChoice& t) {
      app->add_option("--topology", t.file, "Topology document");
      app->add_option("--subcat", t.subcat, "Subcategory topology J^D, D given as x,y,...");
      app->add_flag("--dense", t.dense, "Dense topology");
      app->add_flag("--min", t.min, "Minimal topology");
      app->add_flag("--max", t.max, "Maximal topology");
    }

    void add_ring(CLI::App* app, RingChoice& r) {
      app->add_option("--ring", r.file, "Algebra-presheaf document");
      app->add_option("--constant-field", r.constant_field, "Field of the constant ring (Q, F<p>)");
      app->add_option("--constant-algebra", r.constant_algebra, "Constant algebra: k, kxk, k[t]/t2, k[t]/t3, M2");
    }

    void add_random(CLI::App* app, RandomChoice& r) {
      app->add_flag("--random", r.random, "Use a random presheaf on the chosen category");
      app->add_option("--seed", r.seed, "Seed for --random");
      app->add_option("--kind", r.kind, "Random presheaf kind: set or linear");
      app->add_option("--field", r.field, "Field of a random linear presheaf");
    }

  }  // namespace

  Result run(std::vector<std::string> const& args) {
    Result result;

    CLI::App app{"Finite sites: categories, topologies, sheaves, skew category algebras and their modules",
                 "finsite"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format_flag = "structured";
    app.add_option("--format", format_flag, "structured (YAML documents) or summary (tables)")
        ->check(CLI::IsMember({"structured", "summary"}))
        ->capture_default_str();

    Session s;
    Inputs in;
    TopologyChoice tc;
    RingChoice rc;
    RandomChoice rnd;
    std::string presheaf_file;
    std::string module_file;
    std::string objects;
    std::size_t limit = 32;
    std::size_t count = 10;
    std::uint64_t seed = 0;
    bool half = false;
    bool ei_dense = false;
    bool inverse = false;
    std::string gallery_name;

    std::vector<std::pair<CLI::App*, std::function<std::vector<std::string>()>>> handlers;
    auto leaf = [&](CLI::App* parent, std::string name, std::string help, auto&& fn) {
      auto* sub = parent->add_subcommand(std::move(name), std::move(help));
      handlers.emplace_back(sub, std::forward<decltype(fn)>(fn));
      return sub;
    };
    auto summary = [&] { return s.format == Format::summary; };

    // cat
    auto* cat_cmd = leaf(&app, "cat", "Validate and print a category", [&]() -> std::vector<std::string> {
      auto cat = s.category(in);
      return {summary() ? category_summary(cat) : io::write(cat)};
    });
    add_inputs(cat_cmd, in);

    // gallery
    auto* gal = leaf(&app, "gallery", "Print a generated category or group", [&]() -> std::vector<std::string> {
      if (gallery_name == "list") {
        std::string names;
        for (auto const& n : gallery_names()) {
          names += n + "\n";
        }
        return {names};
      }
      if (gallery_name == "group-table") {
        auto g = FiniteGroup::named(in.group);
        if (summary()) {
          std::ostringstream os;
          os << "order " << g.order() << "; subgroups:";
          auto subs = all_subgroups(g);
          for (auto const& l : subgroup_labels(g, subs)) {
            os << " " << l;
          }
          return {os.str() + "\n"};
        }
        return {io::write(g)};
      }
      in.gallery = gallery_name;
      auto cat = s.category(in);
      return {summary() ? category_summary(cat) : io::write(cat)};
    });
    gal->add_option("name", gallery_name, "A gallery name, 'group-table' or 'list'")->required();
    gal->add_option("--group", in.group, "Group for group/orbit galleries: trivial, C<n>, S<n>");
    gal->add_option("--p", in.p, "Prime for orbit-p galleries");

    // top
    auto* top = app.add_subcommand("top", "Grothendieck topologies");
    top->require_subcommand(1);
    auto* top_enum = leaf(top, "enumerate", "All topologies", [&]() -> std::vector<std::string> {
      auto js = enumerate_topologies(s.category(in), limit);
      if (summary()) {
        return {topology_summary(js)};
      }
      std::vector<std::string> docs;
      for (auto const& j : js) {
        docs.push_back(io::write(j));
      }
      return docs;
    });
    add_inputs(top_enum, in);
    top_enum->add_option("--limit", limit, "Guard on the total number of sieves")->capture_default_str();
    auto* top_sub = leaf(top, "subcat", "Subcategory topology J^D", [&]() -> std::vector<std::string> {
      auto cat = s.category(in);
      auto j = subcategory_topology(s.subcategory(cat, objects));
      return {summary() ? topology_summary({j}) : io::write(j)};
    });
    add_inputs(top_sub, in);
    top_sub->add_option("--objects", objects, "Objects of D as x,y,...")->required();
    auto* top_cls = leaf(top, "classify", "The subcategory D with J = J^D", [&]() -> std::vector<std::string> {
      auto const& j = s.file_artifact<GrothendieckTopology>(tc.file, "--topology");
      auto d = classify_topology(j);
      return {summary() ? topology_label(d) + " " + d.label() + "\n" : io::write(d)};
    });
    top_cls->add_option("--topology", tc.file, "Topology document")->required();
    auto* top_den = leaf(top, "dense", "Dense topology", [&]() -> std::vector<std::string> {
      auto j = dense_topology(s.category(in));
      return {summary() ? topology_summary({j}) : io::write(j)};
    });
    add_inputs(top_den, in);

    // sheaf
    auto* sh = app.add_subcommand("sheaf", "Presheaves and sheaves");
    sh->require_subcommand(1);
    auto* sh_check = leaf(sh, "check", "Sheaf condition", [&]() -> std::vector<std::string> {
      auto p = s.presheaf(presheaf_file, rnd, in);
      auto const& cat = finsite::category_of(p);
      auto j = s.topology(cat, tc);
      auto res = check_sheaf(p, j);
      if (summary()) {
        std::string line = res.sheaf ? "sheaf\n"
                                     : "not a sheaf: fails on " + format_sieve(cat, *res.failing) + " over " +
                                           cat.object_name(res.failing->target()) + "\n";
        return {line};
      }
      YAML::Emitter e;
      e << YAML::BeginMap << YAML::Key << "format" << YAML::Value << "finsite/sheaf-check/1";
      e << YAML::Key << "sheaf" << YAML::Value << res.sheaf;
      if (res.failing) {
        e << YAML::Key << "failing" << YAML::Value << YAML::Flow << YAML::BeginMap << YAML::Key << "object"
          << YAML::Value << cat.object_name(res.failing->target()) << YAML::Key << "sieve" << YAML::Value
          << YAML::BeginSeq;
        for (auto f : res.failing->members()) {
          e << cat.morphism_name(f);
        }
        e << YAML::EndSeq << YAML::EndMap;
      }
      e << YAML::EndMap;
      return {finish(e)};
    });
    auto* sh_sheafify = leaf(sh, "sheafify", "Sheafification", [&]() -> std::vector<std::string> {
      auto p = s.presheaf(presheaf_file, rnd, in);
      auto const& cat = finsite::category_of(p);
      Presheaf q = [&]() -> Presheaf {
        if (ei_dense) {
          if (!tc.file.empty() || !tc.subcat.empty() || tc.min || tc.max) {
            throw UsageError("--ei-dense always uses the dense topology");
          }
          return sheafify_ei_dense(p);
        }
        auto j = s.topology(cat, tc);
        return half ? half_sheafify(p, j) : sheafify(p, j);
      }();
      return {summary() ? presheaf_summary(q) : io::write(q)};
    });
    sh_sheafify->add_flag("--half", half, "Only one half-sheafification pass");
    sh_sheafify->add_flag("--ei-dense", ei_dense, "Closed form for the dense topology of an EI category");
    auto* sh_kan = leaf(sh, "kan", "Right Kan extension of the restriction to D", [&]() -> std::vector<std::string> {
      auto p = s.presheaf(presheaf_file, rnd, in);
      auto d = s.subcategory(finsite::category_of(p), objects);
      auto q = right_kan_extend(restrict(p, d), d);
      return {summary() ? presheaf_summary(q) : io::write(q)};
    });
    sh_kan->add_option("--objects", objects, "Objects of D as x,y,...")->required();
    auto* sh_finest = leaf(sh, "finest", "Finest topology making the presheaf a sheaf",
                           [&]() -> std::vector<std::string> {
                             auto p = s.presheaf(presheaf_file, rnd, in);
                             auto j = finest_topology_for(p);
                             return {summary() ? topology_summary({j}) : io::write(j)};
                           });
    for (auto* c : {sh_check, sh_sheafify, sh_kan, sh_finest}) {
      c->add_option("--presheaf", presheaf_file, "Presheaf document");
      add_random(c, rnd);
      add_inputs(c, in);
    }
    add_topology(sh_check, tc);
    add_topology(sh_sheafify, tc);

    // alg
    auto* alg = app.add_subcommand("alg", "Skew category algebras");
    alg->require_subcommand(1);
    auto* alg_skew = leaf(alg, "skew", "Structure constants of R[C]", [&]() -> std::vector<std::string> {
      SkewCategoryAlgebra a(s.ring(rc, in));
      return {summary() ? algebra_summary(a.algebra()) : io::write(a.algebra())};
    });
    auto* alg_verify = leaf(alg, "verify", "Associativity and unit of R[C]", [&]() -> std::vector<std::string> {
      auto r = s.ring(rc, in);
      SkewCategoryAlgebra a(r);
      auto rep = verify_algebra(a);
      std::size_t expected = 0;
      for (MorphismIndex f = 0; f < r.category().morphism_count(); ++f) {
        expected += r.algebra(r.category().dom(f)).dim();
      }
      if (summary()) {
        std::ostringstream os;
        os << "dim R[C] = " << a.dim() << " (sum over morphisms of dim R(dom f) = " << expected << ")\n";
        os << (rep.ok() ? "associative and unital\n" : "");
        for (auto const& v : rep.violations) {
          os << v << "\n";
        }
        result.status = rep.ok() ? 0 : 1;
        return {os.str()};
      }
      YAML::Emitter e;
      e << YAML::BeginMap << YAML::Key << "format" << YAML::Value << "finsite/algebra-check/1";
      e << YAML::Key << "dim" << YAML::Value << a.dim();
      e << YAML::Key << "expected_dim" << YAML::Value << expected;
      e << YAML::Key << "ok" << YAML::Value << rep.ok();
      e << YAML::Key << "violations" << YAML::Value << YAML::BeginSeq;
      for (auto const& v : rep.violations) {
        e << v;
      }
      e << YAML::EndSeq << YAML::EndMap;
      result.status = rep.ok() ? 0 : 1;
      return {finish(e)};
    });
    auto* alg_gr = leaf(alg, "gr", "Hom-sets of the Grothendieck construction", [&]() -> std::vector<std::string> {
      auto r = s.ring(rc, in);
      GrothendieckConstruction gr(r);
      auto const& cat = r.category();
      YAML::Emitter e;
      std::ostringstream os;
      e << YAML::BeginMap << YAML::Key << "format" << YAML::Value << "finsite/grothendieck/1";
      e << YAML::Key << "homs" << YAML::Value << YAML::BeginSeq;
      for (ObjectIndex x = 0; x < cat.object_count(); ++x) {
        for (ObjectIndex y = 0; y < cat.object_count(); ++y) {
          if (cat.hom(x, y).empty()) {
            continue;
          }
          std::string size = r.field().is_finite() ? gr.hom_cardinality(x, y).str() : "infinite";
          e << YAML::Flow << YAML::BeginMap << YAML::Key << "dom" << YAML::Value << cat.object_name(x) << YAML::Key
            << "cod" << YAML::Value << cat.object_name(y) << YAML::Key << "components" << YAML::Value
            << YAML::BeginSeq;
          os << "Hom((" << cat.object_name(x) << ",*),(" << cat.object_name(y) << ",*)):";
          for (auto f : cat.hom(x, y)) {
            e << YAML::Flow << YAML::BeginSeq << cat.morphism_name(f) << gr.component_dim(f) << YAML::EndSeq;
            os << " " << cat.morphism_name(f) << "^" << gr.component_dim(f);
          }
          e << YAML::EndSeq << YAML::Key << "cardinality" << YAML::Value << size << YAML::EndMap;
          os << "  |Hom| = " << size << "\n";
        }
      }
      e << YAML::EndSeq << YAML::EndMap;
      return {summary() ? os.str() : finish(e)};
    });
    for (auto* c : {alg_skew, alg_verify, alg_gr}) {
      add_ring(c, rc);
      add_inputs(c, in);
    }

    // mod
    auto* mod = app.add_subcommand("mod", "Modules and the module equivalences");
    mod->require_subcommand(1);
    auto* mod_theta = leaf(mod, "theta", "Module presheaf to R[C]-module", [&]() -> std::vector<std::string> {
      auto const& m = s.file_artifact<ModulePresheaf>(module_file, "--module");
      auto n = theta(m, SkewCategoryAlgebra(m.ring()));
      return {summary() ? module_summary(n) : io::write(n)};
    });
    mod_theta->add_option("--module", module_file, "Module-presheaf document")->required();
    auto* mod_omega = leaf(mod, "omega", "R[C]-module to module presheaf", [&]() -> std::vector<std::string> {
      auto const& n = s.file_artifact<AlgebraModule>(module_file, "--module");
      SkewCategoryAlgebra a(s.ring(rc, in));
      if (!(n.algebra() == a.algebra())) {
        throw InvalidData("the module is not over R[C] for the given ring");
      }
      auto m = omega(n, a);
      return {summary() ? module_summary(m) : io::write(m)};
    });
    mod_omega->add_option("--module", module_file, "Algebra-module document")->required();
    add_ring(mod_omega, rc);
    add_inputs(mod_omega, in);
    auto* mod_rt = leaf(mod, "roundtrip", "Random round trips through Theta and Omega", [&]() -> std::vector<std::string> {
      auto r = s.ring(rc, in);
      SkewCategoryAlgebra a(r);
      Rng rng(seed);
      std::size_t good = 0;
      std::vector<std::uint64_t> failed;
      // failing instances follow the report so they can be replayed
      std::vector<std::string> replay;
      for (std::size_t i = 0; i < count; ++i) {
        Rng local(rng());
        auto m = random_gauge(random_module_presheaf(r, local), local);
        auto n = random_algebra_module(a.algebra(), local);
        if (verify_equivalence_roundtrip(m, n, a).ok()) {
          ++good;
        } else {
          failed.push_back(i);
          replay.push_back(io::write(m));
          replay.push_back(io::write(n));
        }
      }
      result.status = good == count ? 0 : 1;
      if (summary()) {
        return {std::to_string(good) + "/" + std::to_string(count) + " round trips verified (seed " +
                std::to_string(seed) + ")\n"};
      }
      YAML::Emitter e;
      e << YAML::BeginMap << YAML::Key << "format" << YAML::Value << "finsite/roundtrip/1";
      e << YAML::Key << "seed" << YAML::Value << seed << YAML::Key << "cases" << YAML::Value << count;
      e << YAML::Key << "verified" << YAML::Value << good;
      e << YAML::Key << "failed" << YAML::Value << YAML::Flow << failed << YAML::EndMap;
      replay.insert(replay.begin(), finish(e));
      return replay;
    });
    mod_rt->add_option("--seed", seed, "Seed")->capture_default_str();
    mod_rt->add_option("--count", count, "Number of random cases")->capture_default_str();
    add_ring(mod_rt, rc);
    add_inputs(mod_rt, in);
    auto* mod_tr = leaf(mod, "transport", "Sheaf modules on J^D to modules over R|_D[D]",
                        [&]() -> std::vector<std::string> {
                          if (!inverse) {
                            auto const& m = s.file_artifact<ModulePresheaf>(module_file, "--module");
                            auto d = classify_topology(s.topology(m.category(), tc));
                            auto n = transport_to_subcategory(m, d);
                            return {summary() ? module_summary(n) : io::write(n)};
                          }
                          auto const& n = s.file_artifact<AlgebraModule>(module_file, "--module");
                          auto r = s.ring(rc, in);
                          auto d = classify_topology(s.topology(r.category(), tc));
                          auto m = transport_from_subcategory(n, r, d);
                          return {summary() ? module_summary(m) : io::write(m)};
                        });
    mod_tr->add_option("--module", module_file, "Module document")->required();
    mod_tr->add_flag("--inverse", inverse, "From an R|_D[D]-module back to a sheaf module (needs the ring)");
    add_topology(mod_tr, tc);
    add_ring(mod_tr, rc);
    add_inputs(mod_tr, in);
    auto* mod_blocks = leaf(mod, "blocks", "Blocks R(y)[Aut(y)] of the dense site of an EI category",
                            [&]() -> std::vector<std::string> {
                              auto r = s.ring(rc, in);
                              auto b = block_decomposition_dense(r);
                              auto const& cat = r.category();
                              std::ostringstream os;
                              YAML::Emitter e;
                              e << YAML::BeginMap << YAML::Key << "format" << YAML::Value << "finsite/blocks/1";
                              e << YAML::Key << "blocks" << YAML::Value << YAML::BeginSeq;
                              os << b.blocks.size() << (b.blocks.size() == 1 ? " block" : " blocks")
                                 << ", total dim " << b.total_dim << "\n";
                              for (auto const& blk : b.blocks) {
                                auto aut = cat.hom(blk.object, blk.object).size();
                                e << YAML::Flow << YAML::BeginMap << YAML::Key << "object" << YAML::Value
                                  << cat.object_name(blk.object) << YAML::Key << "automorphisms" << YAML::Value
                                  << aut << YAML::Key << "dim" << YAML::Value << blk.algebra.dim() << YAML::EndMap;
                                os << "  " << cat.object_name(blk.object) << ": |Aut| = " << aut
                                   << ", dim " << blk.algebra.dim() << "\n";
                              }
                              e << YAML::EndSeq << YAML::Key << "total_dim" << YAML::Value << b.total_dim
                                << YAML::EndMap;
                              return {summary() ? os.str() : finish(e)};
                            });
    add_ring(mod_blocks, rc);
    add_inputs(mod_blocks, in);

    std::vector<char const*> argv{"finsite"};
    for (auto const& a : args) {
      argv.push_back(a.c_str());
    }
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (CLI::CallForHelp const&) {
      result.out = app.help();
      return result;
    } catch (CLI::CallForAllHelp const&) {
      result.out = app.help("", CLI::AppFormatMode::All);
      return result;
    } catch (CLI::ParseError const& e) {
      // Help for the deepest subcommand that was reached.
      CLI::App const* deepest = &app;
      while (!deepest->get_subcommands().empty()) {
        deepest = deepest->get_subcommands().front();
      }
      result.err = std::string("error: ") + e.what() + "\n\n" + deepest->help();
      result.status = 2;
      return result;
    }
    s.format = format_flag == "summary" ? Format::summary : Format::structured;

    try {
      for (auto const& [sub, fn] : handlers) {
        if (sub->parsed()) {
          result.out = join_documents(fn());
          break;
        }
      }
    } catch (UsageError const& e) {
      result.err = std::string("error: ") + e.what() + "\n";
      result.status = 2;
      return result;
    } catch (std::exception const& e) {
      result.err = std::string("error: ") + e.what() + "\n";
      result.status = 1;
      return result;
    }
    return result;
  }

}  // namespace finsite::cli
