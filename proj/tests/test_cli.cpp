#include <doctest.h>

#include <filesystem>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"
#include "empire/io.hpp"

namespace fs = std::filesystem;
using empire::cli::dispatch;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "empire");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

// Scratch directory removed on scope exit.
struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("empire-cli-" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
  std::string write(const std::string& name, const std::string& text) const {
    empire::write_text(file(name), text);
    return file(name);
  }
};

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("usage errors") {
  CHECK(run({}).code == empire::cli::kUsage);
  CHECK(run({"bogus"}).code == empire::cli::kUsage);
  CHECK(run({"gadget", "B"}).code == empire::cli::kUsage);
  CHECK(run({"solve", "x.eg", "--s", "3", "--engine", "magic"}).code == empire::cli::kUsage);
  CHECK(run({"--help"}).code == empire::cli::kOk);
}

TEST_CASE("gadget, solve and verify") {
  TempDir tmp;
  const std::string g = tmp.file("b.eg");
  REQUIRE(run({"gadget", "B", "--r", "3", "--s", "5", "-o", g}).code == empire::cli::kOk);
  const std::string col = tmp.file("b.col");
  const Run yes = run({"solve", g, "--s", "6", "-c", col});
  CHECK(yes.code == empire::cli::kOk);
  CHECK(yes.out.rfind("Colourable", 0) == 0);
  CHECK(run({"verify", g, col}).out == "valid\n");
  const Run no = run({"solve", g, "--s", "5", "--engine", "cnf"});
  CHECK(no.code == empire::cli::kNegative);
  CHECK(no.out.rfind("NotColourable", 0) == 0);

  const std::string bad = tmp.write("bad.col", "col 6\nc 0 0\nc 1 0\nc 2 1\nc 3 2\nc 4 3\nc 5 4\n");
  const Run v = run({"verify", g, bad});
  CHECK(v.code == empire::cli::kNegative);
  CHECK(v.out.rfind("invalid:", 0) == 0);
}

TEST_CASE("solve timeout") {
  TempDir tmp;
  const std::string g = tmp.file("b.eg");
  REQUIRE(run({"gadget", "B", "--r", "3", "--s", "5", "-o", g}).code == empire::cli::kOk);
  CHECK(run({"solve", g, "--s", "5", "--engine", "cnf", "--node-limit", "1"}).code == empire::cli::kTimeout);
}

TEST_CASE("reduce and dpll") {
  TempDir tmp;
  const std::string sat = tmp.write("sat.cnf", "p cnf 2 2\n1 2 0\n-1 0\n");
  const std::string unsat = tmp.write("unsat.cnf", "p cnf 1 2\n1 0\n-1 0\n");
  CHECK(run({"dpll", sat}).out == "s SATISFIABLE\nv -1 2 0\n");
  CHECK(run({"dpll", unsat}).code == empire::cli::kNegative);

  for (const std::string kind : {"sat2lforest", "sat2tree"}) {
    const std::string out = tmp.file(kind + ".eg");
    REQUIRE(run({"reduce", kind, sat, "-o", out}).code == empire::cli::kOk);
    CHECK(run({"solve", out, "--s", "3"}).code == empire::cli::kOk);
    REQUIRE(run({"reduce", kind, unsat, "-o", out}).code == empire::cli::kOk);
    CHECK(run({"solve", out, "--s", "3"}).code == empire::cli::kNegative);
  }
  const std::string fg = tmp.file("fg.eg");
  REQUIRE(run({"reduce", "sat2fg", unsat, "--s", "4", "-o", fg}).code == empire::cli::kOk);
  CHECK(run({"solve", fg, "--s", "4"}).code == empire::cli::kNegative);
  const std::string tree = tmp.file("fgtree.eg");
  REQUIRE(run({"reduce", "fg2tree", sat, "--r", "3", "--s", "4", "-o", tree}).code == empire::cli::kOk);
  CHECK(run({"solve", tree, "--s", "4"}).code == empire::cli::kOk);
}

TEST_CASE("stats json") {
  TempDir tmp;
  const std::string g = tmp.write("p.eg", "eg 4 2 2 3\nv 0 0\nv 1 0\nv 2 1\nv 3 1\ne 0 1\ne 1 2\ne 2 3\n");
  const Run r = run({"stats", g, "--json"});
  REQUIRE(r.code == empire::cli::kOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["vertices"] == 4);
  CHECK(j["edges"] == 3);
  CHECK(j["empires"] == 2);
  CHECK(j["linear_forest"] == true);
  CHECK(j["tree"] == true);
  CHECK(j["reduced_edges"] == 1);
}

TEST_CASE("sparse colour and cnf export") {
  TempDir tmp;
  const std::string g = tmp.write("p.eg", "eg 4 2 2 3\nv 0 0\nv 1 0\nv 2 1\nv 3 1\ne 0 1\ne 1 2\ne 2 3\n");
  const std::string col = tmp.file("p.col");
  const Run r = run({"sparse-colour", g, "--sigma", "3/2", "-o", col});
  CHECK(r.code == empire::cli::kOk);
  CHECK(run({"verify", g, col}).code == empire::cli::kOk);
  const std::string cnf = tmp.file("p.cnf");
  REQUIRE(run({"to-cnf", g, "--s", "1", "-o", cnf}).code == empire::cli::kOk);
  CHECK(run({"dpll", cnf}).code == empire::cli::kNegative);
}

TEST_CASE("bad input files") {
  TempDir tmp;
  CHECK(run({"stats", tmp.file("missing.eg")}).code == empire::cli::kFailure);
  const std::string junk = tmp.write("junk.eg", "hello\n");
  const Run r = run({"stats", junk});
  CHECK(r.code == empire::cli::kFailure);
  CHECK(r.err.rfind("error:", 0) == 0);
}

}  // TEST_SUITE
