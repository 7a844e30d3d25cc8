#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "reports.hpp"

using namespace spgeo;
using namespace spgeo::cli;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  fs::path d = fs::temp_directory_path() / ("spgeo_cli_test_" + name);
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write(const fs::path& p, const std::string& s) { std::ofstream(p) << s; }

// Exit status of the CLI binary with the report directory pointed at `dir`.
int run(const fs::path& dir, const std::string& args) {
  std::string cmd = "SPGEO_REPORT_DIR='" + dir.string() + "' '" SPGEO_CLI_PATH "' " + args + " > '" +
                    (dir / "stdout.txt").string() + "' 2> '" + (dir / "stderr.txt").string() + "'";
  int rc = std::system(cmd.c_str());
  REQUIRE(WIFEXITED(rc));
  return WEXITSTATUS(rc);
}

json admissible_point() {
  // N_p = 0: all counts vanish, every operator is 0x0 and both sides are 1.
  return json::parse(R"({"q": 3, "counts": {"N_p": 0, "N_s": 0, "N_ns": 0, "N1_type1_directed": 0,
    "N2_type2": 0, "N_chambers_directed": 0}, "gamma_det_in_4Z": true,
    "matrices": {"LP1": [], "LP2": [], "LI": [], "A1": [], "A2": []}})");
}

}  // namespace

TEST_CASE("matrix and series rendering") {
  QMatrix m(2, 2, {Rational(1), Rational(-1, 2), Rational(0), Rational(3)});
  CHECK(matrix_json(m) == json::array({"1/1", "-1/2", "0/1", "3/1"}));
  CHECK(series_json(QSeries::one(3)) == json::array({"1", "0", "0", "0"}));
}

TEST_CASE("type lists") {
  auto v = parse_type_list("I,IIa,VId");
  REQUIRE(v.size() == 3);
  CHECK(v[2] == RepType::VId);
  CHECK_THROWS_AS(parse_type_list("I,IVb"), InputError);
  CHECK_THROWS_AS(parse_type_list(""), InputError);
}

TEST_CASE("complex data parsing rejects malformed fields") {
  CHECK_THROWS_AS(parse_complex_data(json::parse(R"({"counts": {}})")), InputError);
  CHECK_THROWS_AS(parse_complex_data(json::parse(R"({"q": 1})")), InputError);
  CHECK_THROWS_AS(parse_complex_data(json::parse(R"({"q": 2, "matrices": {"LP1": [[1, 2], [3]]}})")), InputError);
  CHECK_THROWS_AS(parse_complex_data(json::parse(R"({"q": 2, "matrices": {"LP1": [[0.5]]}})")), InputError);
  CHECK_THROWS_AS(parse_complex_data(json::parse(R"({"q": 2, "counts": {"N_p": "1"}})")), InputError);
  ComplexData d = parse_complex_data(admissible_point());
  CHECK(d.q == 3);
  CHECK(d.gamma_det_in_4Z);
  REQUIRE(d.LI);
  CHECK(d.LI->rows() == 0);
  CHECK(complex_violations(d).empty());
}

TEST_CASE("verify-cosets report at p = 2") {
  Outcome o = verify_cosets(2);
  CHECK(o.pass);
  CHECK(o.report["schema_version"] == kSchemaVersion);
  REQUIRE(o.report["families"].size() == 5);
  for (const auto& f : o.report["families"]) {
    CHECK(f["count"] == f["expected_count"]);
    CHECK(f["geometry"] == true);
    CHECK(f["representatives"].size() == f["count"]);
    CHECK(f["representatives"][0]["matrix"].size() == 16);
  }
  CHECK_THROWS_AS(verify_cosets(7), InputError);
}

TEST_CASE("building-ball writes the ball and checks it") {
  fs::path d = scratch("ball");
  Outcome o = building_ball(2, 1, (d / "b.json").string());
  CHECK(o.pass);
  json b = json::parse(slurp(d / "b.json"));
  CHECK(b["p"] == 2);
  CHECK(b["radius"] == 1);
  CHECK(o.report["counts"]["vertices"] == b["vertices"].size());
  CHECK(o.report["witnesses"].empty());
  CHECK_THROWS_AS(building_ball(2, 4, (d / "c.json").string()), InputError);
}

TEST_CASE("verify-table3 and verify-identity reports") {
  Outcome t = verify_table3({RepType::I, RepType::Vd});
  CHECK(t.pass);
  REQUIRE(t.report["rows"].size() == 2);
  CHECK(t.report["rows"][1]["type"] == "Vd");
  Outcome id = verify_identity();
  CHECK(id.pass);
  CHECK(id.report["exponent_1_minus_u2_substituted"] == json({{"chi", "1"}}));
  CHECK(id.report["assembled_ok"] == true);
}

TEST_CASE("zeta report") {
  json in = json::parse(R"({"q": 2, "matrices": {"LP1": [[1, 1], [1, 0]], "LP2": [[2]]}})");
  Outcome o = zeta(in, 10);
  CHECK(o.pass);
  CHECK(o.report["edge_identity"]["match_order"] == 10);
  CHECK(o.report["vertex_identity"].contains("skipped"));
  CHECK(o.report["edge_identity"]["lhs_coeffs"] == o.report["edge_identity"]["rhs_coeffs"]);

  Outcome empty = zeta(admissible_point(), 6);
  CHECK(empty.pass);
  CHECK(empty.report["vertex_identity"]["pass"] == true);
  CHECK(empty.report["chi"] == 0);

  json bad = admissible_point();
  bad["gamma_det_in_4Z"] = false;
  CHECK_THROWS_AS(zeta(bad, 6), InputError);
  CHECK_THROWS_AS(zeta(in, 25), InputError);
  CHECK_THROWS_AS(zeta(json::parse(R"({"q": 2, "matrices": {"LP1": [[1]]}})"), 4), InputError);
  CHECK_THROWS_AS(zeta(json::parse(R"({"q": 2, "matrices": {"LP1": [[1, 0]], "LP2": [[1]]}})"), 4), InputError);
}

TEST_CASE("ramanujan report in all three input forms") {
  Outcome rep = ramanujan(json::parse(R"({"representation": {"type": "IIb"}})"), 1e-9);
  CHECK_FALSE(rep.pass);
  CHECK(rep.report["consistent"]["LP2"] == true);
  CHECK(rep.report["consistent"]["LI"] == false);

  Outcome roots = ramanujan(json::parse(R"({"roots": {"LP1": ["v^3"], "LP2": ["v^4"]}})"), 1e-9);
  CHECK(roots.report["mode"] == "exact");
  CHECK(roots.pass);

  // q = 4: LP1 zeros on |u| = q^-1 pass, q^-2 fails.
  Outcome ok = ramanujan(json::parse(R"({"q": 4, "zeros": {"LP1": [[0, 0.25]]}})"), 1e-9);
  CHECK(ok.pass);
  Outcome off = ramanujan(json::parse(R"({"q": 4, "zeros": {"LP1": [0.0625]}})"), 1e-9);
  CHECK_FALSE(off.pass);

  CHECK_THROWS_AS(ramanujan(json::parse(R"({"q": 4})"), 1e-9), InputError);
  CHECK_THROWS_AS(ramanujan(json::parse(R"({"q": 4, "zeros": {"L9": [1]}})"), 1e-9), InputError);
  CHECK_THROWS_AS(ramanujan(json::parse(R"({"representation": {"type": "IVb"}})"), 1e-9), InputError);
  CHECK_THROWS_AS(ramanujan(json::parse(R"({"roots": {"LP1": ["2*v + 1"]}})"), 1e-9), InputError);
  CHECK_THROWS_AS(ramanujan(json::parse(R"({"representation": {"type": "I"}})"), 0.0), InputError);
}

TEST_CASE("binary exit codes") {
  fs::path d = scratch("exit");
  CHECK(run(d, "verify-cosets --p 2") == 0);
  CHECK(fs::exists(d / "verify-cosets.json"));
  CHECK(run(d, "verify-cosets") == 2);
  CHECK(run(d, "verify-cosets --p 7") == 2);
  CHECK(run(d, "no-such-command") == 2);
  CHECK(run(d, "verify-table3 --types I,Foo") == 2);

  write(d / "iib.json", R"({"representation": {"type": "IIb", "sign": -1}})");
  CHECK(run(d, "ramanujan --input '" + (d / "iib.json").string() + "'") == 1);
  write(d / "i.json", R"({"representation": {"type": "I"}})");
  CHECK(run(d, "ramanujan --input '" + (d / "i.json").string() + "'") == 0);
  write(d / "broken.json", "{\"q\": ");
  CHECK(run(d, "ramanujan --input '" + (d / "broken.json").string() + "'") == 2);
  CHECK(run(d, "ramanujan --input '" + (d / "missing.json").string() + "'") == 2);

  json bad = admissible_point();
  bad["counts"]["N_ns"] = 1;
  write(d / "bad.json", bad.dump());
  CHECK(run(d, "zeta --input '" + (d / "bad.json").string() + "'") == 2);
  CHECK(slurp(d / "stderr.txt").find("N_ns != (q^2+1) N_p") != std::string::npos);
}

TEST_CASE("reports are byte-identical across runs") {
  fs::path a = scratch("det_a"), b = scratch("det_b");
  for (const auto& dir : {a, b}) {
    CHECK(run(dir, "verify-cosets --p 3") == 0);
    CHECK(run(dir, "verify-identity") == 0);
    CHECK(run(dir, "building-ball --p 2 --radius 2 --out '" + (dir / "ball.json").string() + "'") == 0);
  }
  CHECK(slurp(a / "verify-cosets.json") == slurp(b / "verify-cosets.json"));
  CHECK(slurp(a / "verify-identity.json") == slurp(b / "verify-identity.json"));
  CHECK(slurp(a / "ball.json") == slurp(b / "ball.json"));
  CHECK_FALSE(slurp(a / "ball.json").empty());
}
