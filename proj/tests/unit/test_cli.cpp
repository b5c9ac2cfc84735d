#include "doctest.h"

#include <cstdlib>

#include "cli.hpp"

using namespace finsite;

namespace {

  cli::Result run(std::vector<std::string> args) { return cli::run(args); }

  std::string data(std::string const& name) {
    char const* dir = std::getenv("FINSITE_DATA");
    REQUIRE(dir != nullptr);
    return std::string(dir) + "/" + name;
  }

  std::vector<std::string> split_documents(std::string const& text) {
    std::vector<std::string> docs;
    std::size_t start = 0;
    while (true) {
      auto pos = text.find("---\n", start);
      docs.push_back(text.substr(start, pos == std::string::npos ? std::string::npos : pos - start));
      if (pos == std::string::npos) {
        return docs;
      }
      start = pos + 4;
    }
  }

  bool contains(std::string const& hay, std::string const& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("enumerate prints the chain table") {
  auto r = run({"--format", "summary", "top", "enumerate", "--gallery", "chain3"});
  REQUIRE(r.status == 0);
  CHECK(contains(r.out, "8 topologies"));
  CHECK(contains(r.out, "| J^xy  | Hom(-,x) | Hom(-,y) | {g,gf}   |"));
  CHECK(contains(r.out, "| J^x   | Hom(-,x) | {f}      | {gf}     |"));
}

TEST_CASE("structured enumerate reads back as topologies") {
  auto r = run({"top", "enumerate", "--gallery", "involution"});
  REQUIRE(r.status == 0);
  auto docs = split_documents(r.out);
  REQUIRE(docs.size() == 4);
  std::vector<GrothendieckTopology> tops;
  for (auto const& d : docs) {
    tops.push_back(io::read_topology(d));
  }
  for (std::size_t i = 0; i < tops.size(); ++i) {
    for (std::size_t j = i + 1; j < tops.size(); ++j) {
      CHECK_FALSE(tops[i] == tops[j]);
    }
  }
}

TEST_CASE("skew algebra and blocks") {
  auto r = run({"alg", "skew", "--gallery", "chain3", "--constant-field", "F5"});
  REQUIRE(r.status == 0);
  auto a = io::read_algebra(r.out);
  CHECK(a.dim() == 6);
  CHECK(a.field() == Field::prime(5));

  auto b = run({"mod", "blocks", "--gallery", "orbit-p", "--group", "S3", "--p", "3"});
  REQUIRE(b.status == 0);
  CHECK(contains(b.out, "automorphisms: 2, dim: 2"));
  CHECK(contains(b.out, "total_dim: 2"));
}

TEST_CASE("exit codes") {
  CHECK(run({}).status == 2);
  CHECK(run({"top", "enumerate", "--gallery", "chain3", "--bogus"}).status == 2);
  CHECK(run({"--format", "xml", "top", "enumerate", "--gallery", "chain3"}).status == 2);
  auto bad = run({"top", "enumerate", "--gallery", "nope"});
  CHECK(bad.status == 1);
  CHECK(contains(bad.err, "nope"));
  CHECK(run({"sheaf", "check", "--presheaf", "/nonexistent.yaml", "--dense"}).status == 1);
}

TEST_CASE("output is byte-deterministic") {
  std::vector<std::string> args{"mod", "roundtrip", "--gallery", "chain3", "--constant-field", "F2", "--count", "3",
                                "--seed", "7"};
  auto a = run(args);
  auto b = run(args);
  REQUIRE(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(run({"top", "enumerate", "--gallery", "chain3"}).out == run({"top", "enumerate", "--gallery", "chain3"}).out);
}

TEST_CASE("sheaf commands on a data file") {
  auto presheaf = data("chain3_upper.yaml");
  auto check = run({"--format", "summary", "sheaf", "check", "--presheaf", presheaf, "--subcat", "x,y"});
  REQUIRE(check.status == 0);
  CHECK(contains(check.out, "not a sheaf"));
  CHECK(contains(check.out, "{g,gf}"));

  auto top = run({"--format", "summary", "sheaf", "check", "--presheaf", presheaf, "--topology",
                  data("chain3_jxy.yaml")});
  CHECK(top.out == check.out);

  auto sh = run({"sheaf", "sheafify", "--presheaf", presheaf, "--subcat", "x,y"});
  REQUIRE(sh.status == 0);
  auto f = std::get<SetPresheaf>(io::read_presheaf(sh.out));
  auto const& c = f.category();
  CHECK(f.size(c.object_at("x")) == 1);
  CHECK(f.size(c.object_at("y")) == 2);
  CHECK(f.size(c.object_at("z")) == 2);
  CHECK(is_sheaf(Presheaf(f), subcategory_topology(FullSubcategory::from_names(c, {"x", "y"}))));
}

TEST_CASE("module commands on a data file") {
  auto module = data("chain3_dual_module.yaml");
  auto m = io::read_module_presheaf(io::read_file(module));
  auto th = run({"mod", "theta", "--module", module});
  REQUIRE(th.status == 0);
  CHECK(io::read_algebra_module(th.out).dim() == m.underlying().total_dim());

  auto rt = run({"--format", "summary", "mod", "roundtrip", "--gallery", "chain3", "--constant-field", "F2",
                 "--count", "3"});
  REQUIRE(rt.status == 0);
  CHECK(contains(rt.out, "3/3 round trips verified"));

  auto tr = run({"mod", "transport", "--module", module, "--subcat", "x,y"});
  CHECK(tr.status == 1);
  CHECK(contains(tr.err, "covering sieve"));
}

TEST_CASE("the field defaults to the environment") {
  ::setenv("FINSITE_FIELD", "F7", 1);
  auto r = run({"alg", "skew", "--gallery", "chain3"});
  ::unsetenv("FINSITE_FIELD");
  REQUIRE(r.status == 0);
  CHECK(io::read_algebra(r.out).field() == Field::prime(7));
  CHECK(io::read_algebra(run({"alg", "skew", "--gallery", "chain3"}).out).field() == Field::rationals());
}
