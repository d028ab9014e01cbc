#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "support.hpp"
#include "wdec/report.hpp"

using namespace wdec;
using namespace wtest;

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path p = fs::temp_directory_path() / ("wdec_cli_" + std::to_string(::getpid()));
    fs::create_directories(p);
    return p;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream is(p);
  std::stringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

Run wdec_run(const std::string& args) {
  const fs::path out = scratch() / "stdout.txt", err = scratch() / "stderr.txt";
  const std::string cmd = std::string("\"") + WDEC_CLI + "\" " + args + " > \"" + out.string() + "\" 2> \"" +
                          err.string() + "\"";
  const int status = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

std::string pt2_input() { return std::string("--input \"") + WDEC_TEST_DATA + "/pt2_table.json\""; }

fs::path write_json(const std::string& name, const Json& j) {
  fs::path p = scratch() / name;
  std::ofstream(p) << j.dump() << "\n";
  return p;
}

std::string q(const fs::path& p) { return "\"" + p.string() + "\""; }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("gen prints the order") {
  Run pt = wdec_run("gen --family pt --n 2 --out " + q(scratch() / "pt2.json"));
  CHECK(pt.code == 0);
  CHECK(pt.out == "9\n");
  Json t = Json::parse(slurp(scratch() / "pt2.json"));
  CHECK(t["order"] == 9);
  CHECK(t["table"].size() == 9);
  CHECK(wdec_run("gen --family sym --n 1 --out " + q(scratch() / "s1.json")).out == "1\n");
  CHECK(wdec_run("gen --family b --n 2 --out " + q(scratch() / "b2.json")).out == "16\n");
  Run to_stdout = wdec_run("gen --family qp --n 2");
  CHECK(to_stdout.err == "7\n");
  CHECK(Json::parse(to_stdout.out)["order"] == 7);
}

TEST_CASE("decompose summary lines") {
  Run pt2 = wdec_run("decompose " + pt2_input() + " --out " + q(scratch() / "r2.json"));
  CHECK(pt2.code == 0);
  CHECK(pt2.out == "9 / 2 / 7 / 1,1,1,2\n");
  Run pt3 = wdec_run("decompose --family pt --n 3 --no-lift --out " + q(scratch() / "r3.json"));
  CHECK(pt3.code == 0);
  CHECK(pt3.out == "64 / 30 / 34 / 1,1,1,2,3,3,3\n");
  Run triv = wdec_run("decompose --family sym --n 1 --out " + q(scratch() / "r1.json"));
  CHECK(triv.out == "1 / 0 / 1 / 1\n");
  Json r = Json::parse(slurp(scratch() / "r2.json"));
  CHECK(r["summary"] == "9 / 2 / 7 / 1,1,1,2");
  CHECK(r["dims"]["A"] == 9);
  CHECK(r["lift"]["params_free"] == 2);
}

TEST_CASE("verify accepts a fresh report") {
  const fs::path rep = scratch() / "v2.json";
  REQUIRE(wdec_run("decompose " + pt2_input() + " --out " + q(rep)).code == 0);
  Run v = wdec_run("verify --report " + q(rep) + " " + pt2_input());
  CHECK(v.code == 0);
  CHECK(v.out.find("FAIL") == std::string::npos);
  CHECK(v.out.find("PASS matrix unit relations") != std::string::npos);
  CHECK(v.out.find("PASS lift closure") != std::string::npos);
}

TEST_CASE("verify rejects a perturbed matrix unit") {
  const fs::path rep = scratch() / "p2.json";
  REQUIRE(wdec_run("decompose " + pt2_input() + " --out " + q(rep)).code == 0);
  Json r = Json::parse(slurp(rep));
  auto& units = r["wedderburn"]["components"][3]["matrix_units"];
  units[1][0] = to_string(parse_rational(units[1][0].get<std::string>()) + 1);
  const fs::path bad = write_json("p2_bad.json", r);
  Run v = wdec_run("verify --report " + q(bad) + " " + pt2_input());
  CHECK(v.code == 1);
  CHECK(v.out.find("FAIL matrix unit relations") != std::string::npos);
}

TEST_CASE("verify fails fast on mismatched input") {
  const fs::path rep = scratch() / "m2.json";
  REQUIRE(wdec_run("decompose " + pt2_input() + " --out " + q(rep)).code == 0);
  Run v = wdec_run("verify --report " + q(rep) + " --family pt --n 3");
  CHECK(v.code == 1);
  CHECK(v.out.rfind("FAIL dimensions", 0) == 0);
  CHECK(v.out.find("PASS") == std::string::npos);
}

TEST_CASE("input errors exit with code 2") {
  Algebra bad(2);
  bad.add_constant(0, 0, 1, 1);
  bad.add_constant(0, 1, 0, 1);
  bad.add_constant(1, 0, 1, 1);
  const fs::path p = write_json("nonassoc.json", algebra_to_json(bad));
  Run r = wdec_run("decompose --input " + q(p) + " --check-assoc exhaustive");
  CHECK(r.code == 2);
  CHECK(r.err.find("not") != std::string::npos);
  CHECK(wdec_run("decompose " + pt2_input() + " --field GF2").code == 2);
  CHECK(wdec_run("decompose --input " + q(scratch() / "missing.json")).code == 2);
}

TEST_CASE("stage failures exit with code 3") {
  // Q[x]/(x^4 + x^3 + x^2 + x + 1) is a field of degree 4
  const fs::path p = write_json("cyclo5.json", algebra_to_json(truncated_polynomial_algebra({1, 1, 1, 1, 1})));
  Run capped = wdec_run("decompose --input " + q(p) + " --kronecker-max-degree 1 --out " + q(scratch() / "c5.json"));
  CHECK(capped.code == 3);
  CHECK(capped.err.find("split") != std::string::npos);
  Json r = Json::parse(slurp(scratch() / "c5.json"));
  CHECK_FALSE(r["errors"].empty());
  Run full = wdec_run("decompose --input " + q(p) + " --out " + q(scratch() / "c5b.json"));
  CHECK(full.code == 0);
  CHECK(full.out == "4 / 0 / 4 / 4*\n");
}

TEST_CASE("a capped search recovers through other elements") {
  // Q[x]/((x^2 - 2)(x^2 - 3)): x^2 has a minimal polynomial with rational roots
  const fs::path p = write_json("biquad.json", algebra_to_json(truncated_polynomial_algebra({6, 0, -5, 0, 1})));
  Run capped = wdec_run("decompose --input " + q(p) + " --kronecker-max-degree 1 --out " + q(scratch() / "bq.json"));
  CHECK(capped.code == 0);
  CHECK(capped.out == "4 / 0 / 4 / 2*,2*\n");
}

TEST_CASE("reports are reproducible") {
  const fs::path a = scratch() / "ra.json", b = scratch() / "rb.json";
  REQUIRE(wdec_run("decompose --family ft --n 3 --seed 4 --out " + q(a)).code == 0);
  REQUIRE(wdec_run("decompose --family ft --n 3 --seed 4 --out " + q(b)).code == 0);
  CHECK(slurp(a) == slurp(b));
  Run text = wdec_run("decompose " + pt2_input() + " --format text");
  CHECK(text.code == 0);
  CHECK(text.out.find("9 / 2 / 7 / 1,1,1,2") != std::string::npos);
}

TEST_CASE("lift parameters from the command line") {
  const fs::path rep = scratch() / "lp.json";
  REQUIRE(wdec_run("decompose " + pt2_input() + " --lift-params x4_2=1,x5_2=0 --out " + q(rep)).code == 0);
  Json r = Json::parse(slurp(rep));
  std::vector<Vec> rows;
  for (const auto& row : r["lift"]["basis"]) rows.push_back(vec_from_json(row));
  for (const auto& z : pt2_radical_reduced) rows.push_back(z);
  CHECK(rows == pt2_wedderburn_basis);
  CHECK(wdec_run("decompose " + pt2_input() + " --lift-params x4_2").code == 2);
}

}
