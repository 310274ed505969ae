#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <random>
#include <sstream>

#include "helpers.hpp"
#include "ortho/cli.hpp"
#include "ortho/parse.hpp"

using namespace ortho;
using testutil::from_spec;
using testutil::zmod;

namespace {

struct CliRun {
  int exit_code;
  std::string out, err;
};

CliRun run_cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"orthograph"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("ring spec grammar") {
  CHECK(parse_ring_spec("Z6").str() == "Z6");
  CHECK(parse_ring_spec("Z2[x]/(x^2)").str() == "Z2[x]/(x^2)");
  CHECK(parse_ring_spec("Z2 x Z3").str() == "Z2 x Z3");
  CHECK(parse_ring_spec("Z2[x]/(x^3+x+1)").str() == "Z2[x]/(x^3+x+1)");
  CHECK(parse_ring_spec("Z2 x Z2 x Z2").str() == "Z2 x Z2 x Z2");
  CHECK(parse_ring_spec("Z2[x]/(x^2) x Z3").str() == "Z2[x]/(x^2) x Z3");
  CHECK(parse_ring_spec("  Z4 [x] / ( x^2 + 2x + 1 )  ").str() == "Z4[x]/(x^2+2x+1)");
  // accumulated leading coefficient 3 is not monic
  CHECK_THROWS_AS(parse_ring_spec("Z4[x]/(x^2+2x^2+1)"), ParseError);
}

TEST_CASE("ring spec errors carry positions") {
  CHECK_THROWS_AS(parse_ring_spec("Z1"), ParseError);
  CHECK_THROWS_AS(parse_ring_spec("Zx"), ParseError);
  CHECK_THROWS_AS(parse_ring_spec("Q5"), ParseError);
  CHECK_THROWS_AS(parse_ring_spec("Z6 junk"), ParseError);
  CHECK_THROWS_AS(parse_ring_spec("Z4[x]/(2x^2+1)"), ParseError);  // non-monic
  CHECK_THROWS_AS(parse_ring_spec("Z4[x]/(3)"), ParseError);       // degree 0
  CHECK_THROWS_AS(parse_ring_spec("Z4[x]/()"), ParseError);
  CHECK_THROWS_AS(parse_ring_spec("Z2 x"), ParseError);
  try {
    parse_ring_spec("Z6 junk");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.position == 3);
  }
}

TEST_CASE("sums of written terms reduce in the spec normal form") {
  // "x^2+2x^2" over Z2 collapses to x^2
  const RingSpec s = parse_ring_spec("Z2[x]/(x^2+2x^2)");
  CHECK(s.poly == std::vector<std::uint64_t>{0, 0, 1});
}

TEST_CASE("element literals") {
  const Ring Z6 = zmod(6);
  CHECK(parse_element("4", Z6).index == 4);
  CHECK_THROWS_AS(parse_element("6", Z6), ParseError);   // out of range
  CHECK_THROWS_AS(parse_element("x", Z6), ParseError);

  const Ring q4 = from_spec("Z2[x]/(x^2)");
  CHECK(q4.format(parse_element("1+x", q4)) == "1+x");
  CHECK(parse_element("1+1", q4).index == 0);            // accumulation mod 2
  CHECK_THROWS_AS(parse_element("x^2", q4), ParseError); // degree out of range
  CHECK_THROWS_AS(parse_element("2x", q4), ParseError);  // coefficient out of range

  const Ring p = from_spec("Z2 x Z3");
  CHECK(p.format(parse_element("(1,2)", p)) == "(1,2)");
  CHECK_THROWS_AS(parse_element("(1)", p), ParseError);
  CHECK_THROWS_AS(parse_element("(1,2,0)", p), ParseError);
  CHECK_THROWS_AS(parse_element("(1,3)", p), ParseError);
}

TEST_CASE("format and parse round-trip on every catalog element") {
  for (const auto& spec : testutil::catalog_specs()) {
    CAPTURE(spec);
    const Ring R = from_spec(spec);
    for (std::size_t i = 0; i < R.order(); ++i) {
      const Elem e = R.element(i);
      CHECK(parse_element(R.format(e), R) == e);
    }
  }
}

TEST_CASE("matrix literals") {
  const Ring Z4 = zmod(4);
  const Matrix A = parse_matrix("2,0;0,1", Z4, 2, 2);
  CHECK(format_matrix(A) == "2,0;0,1");

  const Ring Z6 = zmod(6);
  CHECK(parse_matrix("0,1;2,0", Z6, 2, 2) ==
        jordan_cell(Z6, 2) + scalar_mul(Z6.element(2), matrix_unit(Z6, 2, 2, 1)));

  const Ring q4 = from_spec("Z2[x]/(x^2)");
  const Matrix Q = parse_matrix("1+x,0;0,x", q4, 2, 2);
  CHECK(q4.format(Q.at(0, 0)) == "1+x");
  CHECK(q4.format(Q.at(1, 1)) == "x");

  const Ring p = from_spec("Z2 x Z2");
  const Matrix P = parse_matrix("(1,0),(0,0);(0,0),(1,1)", p, 2, 2);
  CHECK(format_matrix(P) == "(1,0),(0,0);(0,0),(1,1)");

  CHECK(format_matrix(parse_matrix(" 2 , 0 ; 0 , 1 ", Z4, 2, 2)) == "2,0;0,1");

  CHECK_THROWS_AS(parse_matrix("2,0;0", Z4, 2, 2), ParseError);        // too short
  CHECK_THROWS_AS(parse_matrix("2,0;0,1;1,1", Z4, 2, 2), ParseError);  // too long
  CHECK_THROWS_AS(parse_matrix("2,0,1;0,1,1", Z4, 2, 2), ParseError);  // wrong shape
  CHECK_THROWS_AS(parse_matrix("5,0;0,1", Z4, 2, 2), ParseError);      // entry range
}

TEST_CASE("matrix round-trip across ring kinds") {
  std::mt19937 rng(59);
  for (const auto& spec : {std::string("Z6"), std::string("Z4[x]/(x^2)"),
                           std::string("Z2 x Z4")}) {
    const Ring R = from_spec(spec);
    std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(R.order() - 1));
    for (int t = 0; t < 25; ++t) {
      Matrix m(R, 2, 2);
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) m.set(i, j, Elem{pick(rng)});
      CHECK(parse_matrix(format_matrix(m), R, 2, 2) == m);
    }
  }
}

TEST_CASE("cli: info") {
  const CliRun r = run_cli({"info", "--ring", "Z6"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("order: 6") != std::string::npos);
  CHECK(r.out.find("zero_divisors (4): 0 2 3 4") != std::string::npos);
  CHECK(r.out.find("units: 2") != std::string::npos);

  const CliRun j = run_cli({"info", "--ring", "Z6", "--json"});
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["order"] == 6);
  CHECK(doc["unit_count"] == 2);
}

TEST_CASE("cli: predict") {
  const CliRun r = run_cli({"predict", "--ring", "Z6", "--n", "2", "--json"});
  REQUIRE(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["predicted_diameter"] == 4);
  CHECK(doc["cond"] == false);

  // byte-deterministic
  CHECK(run_cli({"predict", "--ring", "Z6", "--n", "2", "--json"}).out == r.out);

  const CliRun t = run_cli({"predict", "--ring", "Z4"});
  CHECK(t.out.find("predicted_diameter: 3") != std::string::npos);
  CHECK(t.out.find("predicted_radius: {2}") != std::string::npos);
}

TEST_CASE("cli: analyze") {
  const CliRun r = run_cli({"analyze", "--ring", "Z4", "--n", "2"});
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.rfind("connected, diameter=3, radius=2\n", 0) == 0);

  const CliRun j = run_cli({"analyze", "--ring", "Z4", "--n", "2", "--json"});
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["diameter"] == 3);
  CHECK(doc["radius"] == 2);
  CHECK(doc["vertex_count"] == 159);
  CHECK(run_cli({"analyze", "--ring", "Z4", "--n", "2", "--json"}).out == j.out);

  const CliRun d = run_cli({"analyze", "--ring", "Z2", "--n", "2"});
  CHECK(d.out.rfind("disconnected, diameter=infinite, radius=infinite\n", 0) == 0);

  const CliRun e = run_cli({"analyze", "--ring", "Z5", "--n", "1"});
  CHECK(e.out.rfind("empty graph", 0) == 0);
}

TEST_CASE("cli: witness verifies its own output") {
  const CliRun r =
      run_cli({"witness", "--ring", "Z4", "--matrix", "2,0;0,1", "--c", "2"});
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("check B not in M_n(I): ok") != std::string::npos);
  CHECK(r.out.find("check A*B in M_n(I): ok") != std::string::npos);
  CHECK(r.out.find("check A*C = C*A = 0: ok") != std::string::npos);

  const CliRun j = run_cli(
      {"witness", "--ring", "Z6", "--matrix", "0,1;2,0", "--c", "3", "--json"});
  REQUIRE(j.exit_code == 0);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["witness"] == "0,3;0,0");
  for (const auto& [key, value] : doc["checks"].items()) {
    CAPTURE(key);
    CHECK(value == true);
  }

  // c that does not annihilate the determinant: usage error
  const CliRun bad = run_cli({"witness", "--ring", "Z4", "--matrix", "2,0;0,1", "--c", "1"});
  CHECK(bad.exit_code == 2);
}

TEST_CASE("cli: path and distance") {
  const CliRun p = run_cli({"path", "--ring", "Z4", "--matrix", "2,0;0,1"});
  REQUIRE(p.exit_code == 0);
  CHECK(p.out.find("valid: ok") != std::string::npos);

  const CliRun c = run_cli(
      {"path", "--ring", "Z6", "--matrix", "0,1;2,0", "--matrix-b", "0,2;1,0", "--json"});
  REQUIRE(c.exit_code == 0);
  const auto doc = nlohmann::json::parse(c.out);
  CHECK(doc["length"] == 4);
  CHECK(doc["vertices"].size() == 5);

  const CliRun d = run_cli(
      {"distance", "--ring", "Z6", "--matrix", "0,1;2,0", "--matrix-b", "0,2;1,0"});
  REQUIRE(d.exit_code == 0);
  CHECK(d.out == "distance = 4\n");

  // non-vertex input is a usage error
  const CliRun bad = run_cli({"path", "--ring", "Z4", "--matrix", "1,0;0,1"});
  CHECK(bad.exit_code == 2);
}

TEST_CASE("cli: export") {
  const CliRun dot = run_cli({"export", "--ring", "Z4", "--n", "1"});
  REQUIRE(dot.exit_code == 0);
  CHECK(dot.out == "graph orthogonality {\n  v0 [label=\"2\"];\n}\n");

  const CliRun j = run_cli({"export", "--ring", "Z4", "--n", "2", "--json"});
  REQUIRE(j.exit_code == 0);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["vertices"].size() == 159);
}

TEST_CASE("cli: verify") {
  const CliRun r = run_cli({"verify", "--ring", "Z4", "--n", "2", "--suite", "all"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("PASS equivalence") != std::string::npos);
  CHECK(r.out.find("PASS complement") != std::string::npos);
  CHECK(r.out.find("PASS scalar-distance") != std::string::npos);
  CHECK(r.out.find("PASS diameter") != std::string::npos);
  CHECK(r.out.find("PASS radius") != std::string::npos);
  CHECK(r.out.find("PASS radius-diameter-bound") != std::string::npos);
  CHECK(r.out.find("6/6 checks passed") != std::string::npos);

  const CliRun one = run_cli({"verify", "--ring", "Z6", "--suite", "equivalence"});
  CHECK(one.exit_code == 0);
  CHECK(one.out.find("1/1 checks passed") != std::string::npos);

  const CliRun bad = run_cli({"verify", "--ring", "Z4", "--suite", "nonsense"});
  CHECK(bad.exit_code == 2);
}

TEST_CASE("cli: usage errors exit with 2") {
  CHECK(run_cli({"predict"}).exit_code == 2);                       // missing --ring
  CHECK(run_cli({"predict", "--ring", "Zoops"}).exit_code == 2);    // bad spec
  CHECK(run_cli({"predict", "--ring", "Z5"}).exit_code == 2);       // no zero-divisors
  CHECK(run_cli({"analyze", "--ring", "Z6", "--n", "3"}).exit_code == 2);  // cap
  CHECK(run_cli({}).exit_code == 2);                                // no subcommand
  CHECK(run_cli({"frobnicate"}).exit_code == 2);
}

TEST_CASE("cli: --max-vertices overrides the candidate cap") {
  CHECK(run_cli({"analyze", "--ring", "Z4", "--n", "2", "--max-vertices", "100"}).exit_code == 2);
  CHECK(run_cli({"analyze", "--ring", "Z6", "--n", "2", "--threads", "2"}).exit_code == 0);
}

TEST_CASE("cli: limits profile from the environment") {
  setenv("ORTHOGRAPH_LIMITS", "small", 1);
  // order 1024 exceeds the small profile's ring cap of 512
  CHECK(run_cli({"info", "--ring", "Z2[x]/(x^10)"}).exit_code == 2);
  setenv("ORTHOGRAPH_LIMITS", "bogus", 1);
  CHECK(run_cli({"info", "--ring", "Z4"}).exit_code == 2);
  unsetenv("ORTHOGRAPH_LIMITS");
  CHECK(run_cli({"info", "--ring", "Z2[x]/(x^10)"}).exit_code == 0);
}

TEST_CASE("parsers reject garbage with exceptions, never crashes") {
  const std::vector<std::string> junk = {
      "",      " ",     "Z",     "Z[x]",  "Z6[",    "Z6[x",   "Z6[x]",  "Z6[x]/",
      "Z6[x]/(", "Z6[x]/()", "x Z2", "Z2 x x Z2", "Z2 Z3",  "Z-4",    "Z6]",
      "Z6[x]/(x^)", "Z6[x]/(+)", "Z99999999999999999999", "Z6 x ", "(Z2)"};
  for (const auto& s : junk) {
    CAPTURE(s);
    CHECK_THROWS_AS(parse_ring_spec(s), ParseError);
  }
  const Ring Z6 = zmod(6);
  for (const std::string s : {"", "-1", "1;2", "(1)", "x", "2,", "1+", "^2"}) {
    CAPTURE(s);
    CHECK_THROWS_AS(parse_element(s, Z6), ParseError);
  }
  const Ring q4 = from_spec("Z2[x]/(x^2)");
  for (const std::string s : {"x^", "x+", "+x", "(1,0)", "y"}) {
    CAPTURE(s);
    CHECK_THROWS_AS(parse_element(s, q4), ParseError);
  }
}

TEST_CASE("cli: help exits cleanly") {
  const CliRun r = run_cli({"--help"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("analyze") != std::string::npos);
}
