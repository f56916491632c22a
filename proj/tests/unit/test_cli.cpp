#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "nilalg/catalog.hpp"
#include "nilalg/cli.hpp"

using namespace nilalg;
using io::json;

namespace {

std::string data(const char* name) { return std::string(NILALG_TEST_DATA) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& body) {
  const auto p = std::filesystem::temp_directory_path() / ("nilalg_test_" + name);
  std::ofstream(p) << body;
  return p.string();
}

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "nilalg");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

ErrorKind load_kind(const std::string& text) {
  try {
    io::load_document(io::parse_json(text, "inline"));
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("document loaded");
  return ErrorKind::Validation;
}

bool has_float(const json& j) {
  if (j.is_number_float()) return true;
  if (j.is_structured())
    for (const auto& v : j) if (has_float(v)) return true;
  return false;
}

}  // namespace

TEST_CASE("SHA-256") {
  CHECK(cli::sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("documents: brackets and dforms presentations agree") {
  const auto d = io::read_document(data("iwasawa_dforms.json"));
  REQUIRE(d.algebra);
  REQUIRE(d.J);
  CHECK(*d.algebra == iwasawa().algebra);
  CHECK(*d.J == iwasawa().J);
  const auto round = io::load_document(cli::catalog_document("iwasawa", ""));
  CHECK(*round.algebra == iwasawa().algebra);
  CHECK(*round.J == iwasawa().J);
  for (const auto& name : catalog_names()) {
    const auto e = lookup(name);
    const auto back = io::load_document(io::parse_json(cli::catalog_document(name, "").dump(), name));
    CHECK(*back.algebra == e.algebra);
    CHECK(*back.J == e.J);
  }
  const auto x = io::load_document(cli::catalog_document("torus-x-sqrt", ""));
  REQUIRE(x.torus);
  CHECK(x.torus->matrix == torus_preset("torus-x-sqrt").X);
}

TEST_CASE("documents: rejected inputs") {
  CHECK(load_kind(R"({"dim":3,"brackets":[],"dforms":[]})") == ErrorKind::Parse);
  CHECK(load_kind(R"({"dim":3,"bracket":[]})") == ErrorKind::Parse);
  CHECK(load_kind(R"({"dim":3,"brackets":[{"i":1,"j":2,"k":3,"c":0.5}]})") == ErrorKind::Parse);
  CHECK(load_kind(R"({"dim":3,"brackets":[{"i":1,"j":2,"k":4,"c":"1"}]})") == ErrorKind::Parse);
  CHECK(load_kind(R"({"dim":3,"brackets":[{"i":1,"j":1,"k":3,"c":"1"}]})") == ErrorKind::Parse);
  CHECK(load_kind(R"({"dim":3,"brackets":[{"i":1,"j":2,"k":3,"c":"1"},{"i":2,"j":1,"k":3,"c":"1"}]})") ==
        ErrorKind::Parse);
  CHECK(load_kind(R"({"dim":3,"brackets":[{"i":1,"j":2,"k":3,"c":"1*r2"}]})") == ErrorKind::Parse);
  CHECK(load_kind(R"({"dim":3,"brackets":[{"i":1,"j":2,"k":3,"c":"1/0"}]})") == ErrorKind::Parse);
  CHECK(load_kind(R"({"J":[["0","-1","0"],["1","0","0"],["0","0","1"]]})") == ErrorKind::Shape);
  CHECK(load_kind(R"({"J":[["1","0"],["0","1"]]})") == ErrorKind::Validation);
  CHECK(load_kind(R"({"dim":2,"J":[["0","-1","0","0"],["1","0","0","0"],["0","0","0","-1"],["0","0","1","0"]]})") ==
        ErrorKind::Dimension);
  CHECK(load_kind(R"({"tau":[["0","0"],["0","0"]]})") == ErrorKind::Precondition);
  CHECK(load_kind(R"({"tau":[["0","0"],["0","0"]],"X":[["0","0"],["0","0"]]})") == ErrorKind::Parse);
  try {
    io::parse_json("{\n  \"dim\": 3,\n  \"brackets\": [}", "f.json");
    FAIL("parsed");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Parse);
    CHECK(std::string(e.what()).rfind("f.json:3:16:", 0) == 0);
  }
  try {
    io::load_document(io::parse_json(R"({"dim":3,"brackets":[{"i":1,"j":2,"k":3}]})", "x"));
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("brackets[0]") != std::string::npos);
  }
}

TEST_CASE("check command") {
  auto ok = run({"check", data("iwasawa_dforms.json"), "--json"});
  CHECK(ok.code == 0);
  auto j = json::parse(ok.out);
  CHECK(j["results"]["algebra"]["valid"] == true);
  CHECK(j["results"]["algebra"]["step"] == 2);
  CHECK(j["results"]["complex_structure"]["integrable"] == true);

  auto bad = run({"check", data("jacobi_violation.json"), "--json"});
  CHECK(bad.code == 1);
  j = json::parse(bad.out);
  CHECK(j["results"]["algebra"]["jacobi"]["triple"] == json::array({1, 2, 4}));
  CHECK(j["errors"].size() == 1);

  auto odd = run({"check", data("odd_j.json"), "--json"});
  CHECK(odd.code == 1);
  CHECK(json::parse(odd.out)["errors"][0]["kind"] == "shape");

  CHECK(run({"check", data("missing.json")}).code == 1);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
}

TEST_CASE("invariants command") {
  const auto f = temp_file("iw.json", cli::catalog_document("iwasawa", "").dump());
  auto r = run({"invariants", f, "--json"});
  CHECK(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["results"]["h1Dim"] == 2);
  CHECK(j["results"]["algDimUpperBound"] == 2);
  CHECK(j["results"]["albaneseDim"] == 2);
  CHECK(j["results"]["h"] == json::parse(R"([["0","0","0","0","1","0"],["0","0","0","0","0","1"]])"));
  CHECK(j["results"]["sigma"] == j["results"]["h"]);

  j = json::parse(run({"invariants", data("abelian4.json"), "--json"}).out);
  CHECK(j["results"]["algDimUpperBound"] == 2);

  const auto ua = temp_file("ua.json", cli::catalog_document("ugarte-a", "").dump());
  CHECK(json::parse(run({"invariants", ua, "--json"}).out)["results"]["algDimUpperBound"] == 1);

  // A user form: e^{12} is closed and (1,1) on Iwasawa, e^{56} is not closed.
  auto doc = cli::catalog_document("iwasawa", "");
  doc["twoform"] = json::parse(R"([{"i":1,"j":2,"c":"1"}])");
  j = json::parse(run({"invariants", temp_file("iw2.json", doc.dump()), "--json"}).out);
  CHECK(j["results"]["twoform"]["nullspace_contains_h"] == true);
  CHECK(j["results"]["twoform"]["nullspace_equals_h"] == false);
  doc["twoform"] = json::parse(R"([{"i":5,"j":6,"c":"1"}])");
  r = run({"invariants", temp_file("iw3.json", doc.dump()), "--json"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["warnings"].size() == 1);

  // Non-integrable structures are rejected.
  doc = json::parse(R"({"dim":4,"brackets":[{"i":1,"j":2,"k":3,"c":"1"}],
                        "J":[["0","0","-1","0"],["0","0","0","-1"],["1","0","0","0"],["0","1","0","0"]]})");
  r = run({"invariants", temp_file("ni.json", doc.dump()), "--json"});
  CHECK(r.code == 1);
  CHECK(json::parse(r.out)["errors"][0]["kind"] == "precondition");
}

TEST_CASE("cohomology command") {
  auto j = json::parse(run({"cohomology", data("iwasawa_dforms.json"), "--json"}).out);
  CHECK(j["results"]["betti"] == json::array({1, 4, 8, 10, 8, 4, 1}));
  j = json::parse(run({"cohomology", data("iwasawa_dforms.json"), "--max-degree", "2", "--json"}).out);
  CHECK(j["results"]["betti"] == json::array({1, 4, 8}));
  CHECK(run({"cohomology", data("jacobi_violation.json")}).code == 1);
}

TEST_CASE("torus commands") {
  auto j = json::parse(run({"torus-adim", data("tau_standard.json"), "--radius", "2", "--json"}).out);
  CHECK(j["results"]["algebraic_dimension"]["a"] == 2);
  CHECK(j["results"]["algebraic_dimension"]["status"] == "exact");
  j = json::parse(run({"torus-adim", data("x_sqrt.json"), "--json"}).out);
  CHECK(j["results"]["algebraic_dimension"]["a"] == 1);
  CHECK(j["results"]["algebraic_dimension"]["ns"]["rank"] == 3);
  j = json::parse(run({"torus-adim", data("tau_ns_trivial.json"), "--json"}).out);
  CHECK(j["results"]["algebraic_dimension"]["a"] == 0);
  CHECK(j["results"]["algebraic_dimension"]["status"] == "exact");
  j = json::parse(run({"torus-adim", data("tau_standard.json"), "--radius", "0", "--json"}).out);
  CHECK(j["results"]["algebraic_dimension"]["status"] == "lower bound");
  CHECK(j["warnings"].size() == 1);

  j = json::parse(run({"iwasawa-adim", "--x", data("x_zero.json"), "--json"}).out);
  CHECK(j["results"]["algebraic_dimension"]["a"] == 2);
  j = json::parse(run({"iwasawa-adim", "--x", data("x_sqrt.json"), "--json"}).out);
  CHECK(j["results"]["algebraic_dimension"]["a"] == 1);
  CHECK(j["results"]["strictly_below_bound"] == true);
  j = json::parse(run({"iwasawa-adim", "--x", data("tau_ns_trivial.json"), "--json"}).out);
  CHECK(j["warnings"].size() == 1);
  CHECK(run({"iwasawa-adim", "--x", data("tau_standard.json")}).code == 1);
}

TEST_CASE("catalog command") {
  auto r = run({"catalog", "ugarte-b", "--params", R"({"eps": 1, "rho": 0, "D": "1"})", "--json"});
  CHECK(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["catalog"]["family"] == "ugarteB");
  CHECK(j["catalog"]["expected"]["h1Dim"] == 2);
  r = run({"catalog", "ugarte-b", "--params", R"({"eps": 0, "rho": 0})", "--json"});
  CHECK(r.code == 0);
  CHECK(r.err.find("warning") != std::string::npos);
  CHECK(run({"catalog", "ugarte-a", "--params", R"({"E": "2"})"}).code == 1);
  CHECK(run({"catalog", "nothing"}).code == 1);
  r = run({"catalog", "list"});
  CHECK(r.out.find("torus-ns-trivial") != std::string::npos);
  const auto pf = temp_file("params.json", R"({"A": {"re": "1", "im": "1"}, "E": {"re": "3/5", "im": "4/5"}, "b": "2"})");
  CHECK(json::parse(run({"catalog", "ugarte-a", "--params", pf, "--json"}).out)["catalog"]["params"]["b"]["re"] == "2");
}

TEST_CASE("reports are exact and deterministic") {
  const auto iw = temp_file("det.json", cli::catalog_document("h3xR3-irrational", "").dump());
  const std::vector<std::vector<std::string>> cmds{{"check", iw},
                                                   {"invariants", iw},
                                                   {"cohomology", iw},
                                                   {"torus-adim", data("x_sqrt.json")},
                                                   {"iwasawa-adim", "--x", data("x_sqrt.json")},
                                                   {"catalog", "ugarte-a"}};
  for (auto c : cmds) {
    for (bool as_json : {false, true}) {
      auto args = c;
      if (as_json) args.push_back("--json");
      const auto a = run(args), b = run(args);
      CHECK(a.code == 0);
      CHECK(a.out == b.out);
      if (as_json) CHECK_FALSE(has_float(json::parse(a.out)));
    }
  }
}
