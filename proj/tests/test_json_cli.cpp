#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "oddq/catalog.hpp"
#include "oddq/json_io.hpp"

using namespace oddq;

TEST_CASE("documents round-trip bit-exactly") {
  for (const char* key : {"abelian2", "g6:0", "g6:1", "g8:2", "dualpair:4", "coadjoint:5",
                          "model_filiform:4"}) {
    CatalogEntry e = build(CatalogKey::parse(key));
    std::string text = save_document(e.algebra, e.form ? &*e.form : nullptr);
    Document doc = load_document(text);
    CHECK(doc.algebra.same_table(e.algebra));
    CHECK(doc.algebra.names() == e.algebra.names());
    if (e.form) {
      REQUIRE(doc.form.has_value());
      CHECK(doc.form->pairing() == e.form->pairing());
    }
    // a second pass produces the identical string
    CHECK(save_document(doc.algebra, doc.form ? &*doc.form : nullptr) == text);
  }
}

TEST_CASE("scalars round-trip in both encodings") {
  Scalar plain(Rational(-3, 2));
  CHECK(scalar_from_json(scalar_to_json(plain)) == plain);
  Scalar rooted(Rational(1, 2), Rational(2, 3), Rational(5));
  CHECK(scalar_from_json(scalar_to_json(rooted)) == rooted);
}

TEST_CASE("the loader rejects grading violations with the offending pair named") {
  std::string text = R"({
    "even": ["X"], "odd": ["e"],
    "brackets": [{"x": "X", "y": "e", "value": {"X": "1"}}]
  })";
  CHECK_THROWS_WITH_AS(load_document(text), doctest::Contains("[X,e]"), ParseError);
}

TEST_CASE("the loader rejects duplicates and unknown names") {
  CHECK_THROWS_AS(load_document(R"({
    "even": ["X"], "odd": ["e"],
    "brackets": [{"x": "X", "y": "q", "value": {"e": "1"}}]
  })"),
                  ParseError);
  CHECK_THROWS_AS(load_document(R"({
    "even": ["X", "Y"], "odd": ["e", "f"],
    "brackets": [{"x": "X", "y": "e", "value": {"f": "1"}},
                  {"x": "e", "y": "X", "value": {"f": "1"}}]
  })"),
                  ParseError);
  CHECK_THROWS_AS(load_document("not json at all"), ParseError);
}

TEST_CASE("extension data round-trips") {
  CatalogEntry e = build(CatalogKey::parse("g6:0"));
  OddDerivation D(3, 3);
  D.even_to_odd().at(0, 0) = Scalar(-1);
  D.even_to_odd().at(2, 2) = Scalar(1);
  D.odd_to_even().at(2, 0) = Scalar(Rational(1, 2));
  Vec X0(6);
  X0[1] = Scalar(1);
  ExtensionData data{D, X0, Scalar(-1)};
  std::string text = save_extension_data(e.algebra, data);
  ExtensionData back = load_extension_data(text, e.algebra);
  CHECK(back.D == data.D);
  CHECK(back.X0 == data.X0);
  CHECK(back.lambda0 == data.lambda0);
}

#ifdef ODDQ_CLI_PATH

namespace {

struct CliResult {
  int exit_code;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  std::string cmd = std::string(ODDQ_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t got = fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::string temp_file(const std::string& name, const std::string& content) {
  std::string path = std::string("/tmp/oddq_test_") + name;
  std::ofstream f(path);
  f << content;
  return path;
}

}  // namespace

TEST_CASE("cli: emit then verify is clean") {
  CliResult emitted = run_cli("catalog emit g8:2");
  REQUIRE(emitted.exit_code == 0);
  std::string path = temp_file("g82.json", emitted.out);
  CliResult verified = run_cli("verify " + path);
  CHECK(verified.exit_code == 0);
  CHECK(verified.out.find("jacobi: ok") != std::string::npos);
  CHECK(verified.out.find("odd-quadratic: ok") != std::string::npos);
}

TEST_CASE("cli: analyze reports the center of the variant-2 class") {
  CliResult emitted = run_cli("catalog emit g8:2");
  std::string path = temp_file("g82b.json", emitted.out);
  CliResult analyzed = run_cli("analyze " + path);
  CHECK(analyzed.exit_code == 0);
  CHECK(analyzed.out.find("center: 2") != std::string::npos);
}

TEST_CASE("cli: classify counts") {
  CliResult res = run_cli("classify --dim 6");
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("classes: 2") != std::string::npos);
  CliResult res8 = run_cli("classify --dim 8 --emit-json");
  CHECK(res8.exit_code == 0);
  CHECK(res8.out.find("g8:2") != std::string::npos);
}

TEST_CASE("cli: exit codes distinguish failure kinds") {
  // verification failure: a Jacobi-violating table
  std::string bad = R"({
    "even": ["X1","X2","X3"], "odd": ["e3","u2","v2"],
    "brackets": [{"x":"X1","y":"X2","value":{"X3":"1"}},
                  {"x":"X1","y":"e3","value":{"u2":"1"}},
                  {"x":"X2","y":"e3","value":{"v2":"1"}},
                  {"x":"e3","y":"e3","value":{"X1":"1"}}],
    "form": [{"even":"X1","odd":"v2","value":"1"},
             {"even":"X2","odd":"u2","value":"-1"},
             {"even":"X3","odd":"e3","value":"1"}]
  })";
  CliResult failed = run_cli("verify " + temp_file("bad.json", bad));
  CHECK(failed.exit_code == 1);
  // parse failure
  CliResult parsed = run_cli("verify " + temp_file("broken.json", "{"));
  CHECK(parsed.exit_code == 2);
}

TEST_CASE("cli: decompose then extend reproduces the input") {
  CliResult emitted = run_cli("catalog emit g8:1");
  std::string g81 = temp_file("g81.json", emitted.out);
  CliResult dec = run_cli("decompose " + g81 + " --out-base /tmp/oddq_test_base.json --out-data /tmp/oddq_test_data.json");
  REQUIRE(dec.exit_code == 0);
  CliResult ext = run_cli(
      "extend /tmp/oddq_test_base.json --data /tmp/oddq_test_data.json --out /tmp/oddq_test_ext.json");
  REQUIRE(ext.exit_code == 0);
  CliResult verified = run_cli("verify /tmp/oddq_test_ext.json");
  CHECK(verified.exit_code == 0);
  // the re-extension has the same dimensions and fingerprintable data
  std::ifstream f("/tmp/oddq_test_ext.json");
  std::stringstream ss;
  ss << f.rdbuf();
  Document doc = load_document(ss.str());
  CHECK(doc.algebra.dim() == 8);
  CHECK(doc.algebra.center().dim() == 3);
}

TEST_CASE("cli: search output") {
  CliResult res = run_cli("search --n-even 2 --grid \"-1,0,1\"");
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("0 hits") != std::string::npos);
}

#endif  // ODDQ_CLI_PATH
