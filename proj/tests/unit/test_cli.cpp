#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "kzr/kzsolve.hpp"
#include "kzr/symrep.hpp"
#include "kzr/verify.hpp"

using namespace kzr;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  json report() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / ("kzr_cli_" + name);
  std::ofstream(path) << contents;
  return path;
}

/// Sets KZR_PRECISION for one scope.
struct PrecisionEnv {
  explicit PrecisionEnv(const char* value) { setenv("KZR_PRECISION", value, 1); }
  ~PrecisionEnv() { unsetenv("KZR_PRECISION"); }
};

}  // namespace

TEST_CASE("validate-rep") {
  CHECK(run({"validate-rep", "--rep", "s4-22"}).code == 0);
  CHECK(run({"validate-rep", "--rep", "young:2,1", "--n", "3"}).code == 0);
  CHECK(run({"validate-rep", "--rep", "young:2,2"}).code == 0);

  const Run partial = run({"validate-rep", "--rep", "s5-gen1", "--json"});
  CHECK(partial.code == 0);
  const json notes = partial.report().at("notes");
  CHECK(std::find(notes.begin(), notes.end(), "partial: braid checks skipped") != notes.end());

  const json full = run({"validate-rep", "--rep", "s4-22", "--json"}).report();
  CHECK(full.at("passed") == true);
  CHECK(full.at("checks").size() > 10);
  for (const auto& check : full.at("checks")) CHECK(check.at("passed") == true);
}

TEST_CASE("bad selectors exit 2") {
  CHECK(run({"validate-rep", "--rep", "bogus"}).code == 2);
  CHECK(run({"validate-rep", "--rep", "young:2,1", "--n", "4"}).code == 2);
  CHECK(run({"validate-rep", "--rep", "young:2,x"}).code == 2);
  CHECK(run({"rationality", "--rep", "s4-22", "--n", "5"}).code == 2);
  CHECK(run({"export-rep", "--rep", "young:"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
}

TEST_CASE("rationality") {
  const Run s4 = run({"rationality", "--rep", "s4-22", "--json"});
  CHECK(s4.code == 0);
  const json spectra = s4.report().at("spectra");
  REQUIRE(spectra.size() == 4);
  for (const auto& entry : spectra) {
    CHECK(entry.at("zero_matrix") == true);
    CHECK(entry.at("linear_roots") == json::array({"0", "0"}));
  }
  CHECK(s4.report().at("verdict") == "integer");

  const Run s5 = run({"rationality", "--rep", "s5-gen1", "--k", "1", "--json"});
  CHECK(s5.code == 1);
  const json q1 = s5.report().at("spectra").at(0);
  CHECK(q1.at("quadratic_roots") == "(17±√433)/18");
  CHECK(q1.at("linear_roots") == json::array({"1/9", "1/3", "5/3"}));
  CHECK(s5.report().at("verdict") == "non-integer");

  // Q_2 needs matrices the row-one data does not carry
  CHECK(run({"rationality", "--rep", "s5-gen1", "--k", "2"}).code == 2);
  CHECK(run({"rationality", "--rep", "s5-gen1", "--k", "9"}).code == 2);
  const Run all = run({"rationality", "--rep", "s5-gen1", "--json"});
  CHECK(all.code == 1);
  CHECK(all.report().at("spectra").size() == 1);
  CHECK(all.report().at("notes").size() == 4);

  // exit code follows the computed spectra
  const Run young = run({"rationality", "--rep", "young:3,1", "--n", "4", "--json"});
  const json young_report = young.report();
  bool integer = true;
  for (const auto& entry : young_report.at("spectra")) integer = integer && entry.at("integer_spectrum").get<bool>();
  CHECK(young.code == (integer ? 0 : 1));
  CHECK(young_report.at("spectra").size() == 4);
}

TEST_CASE("solve") {
  const Run solved = run({"solve", "--rho", "-1", "--grid", "default", "--json"});
  REQUIRE(solved.code == 0);
  const json j = solved.report();
  CHECK(j.at("mode") == "exact");
  CHECK(j.at("psi").at("psi1").is_object());
  const json points = j.at("grid");
  REQUIRE(points.size() == 25);
  const SolutionFrame w = compose_W(-1, FrameKind::exact);
  for (const auto& p : points) {
    const FieldScalar y(p.at("y").get<Rational>());
    const FieldScalar z(p.at("z").get<Rational>());
    CHECK(p.at("W").at("exact").get<FieldMatrix>() == w.at(y, z));
    CHECK(p.at("U").at("exact").get<FieldMatrix>() == fundamental_W2(-1, FrameKind::exact).at(y, z));
  }
  CHECK(j.at("U_of_z").get<RationalFunctionMatrix>() == fundamental_W2(-1, FrameKind::exact).along(Axis::z, 0));

  const Run numeric = run({"solve", "--rho", "-1/2", "--json"});
  CHECK(numeric.code == 0);
  CHECK(numeric.report().at("mode") == "numeric");
  CHECK(numeric.report().at("psi").is_null());

  CHECK(run({"solve", "--rho", "0"}).code == 2);
  CHECK(run({"solve", "--rho", "one"}).code == 2);
}

TEST_CASE("grid files") {
  const auto good = temp_file("good.json", R"([{"y":"1/2","z":"1"},{"y":"2","z":"3/7"}])");
  const Run solved = run({"solve", "--rho", "-2", "--grid", good.string(), "--json"});
  CHECK(solved.code == 0);
  CHECK(solved.report().at("grid").size() == 2);

  const auto pole = temp_file("pole.json", R"([{"y":"1/2","z":"1"},{"y":"-1","z":"1"}])");
  CHECK(run({"solve", "--rho", "-1", "--grid", pole.string()}).code == 2);
  CHECK(run({"verify", "--rho", "-1", "--grid", pole.string()}).code == 2);
  // 1 + y + yz = 0 at y = -1/2, z = 1
  const auto edge = temp_file("edge.json", R"([{"y":"-1/2","z":"1"}])");
  CHECK(run({"solve", "--rho", "-1", "--grid", edge.string()}).code == 2);
  // exact frames are defined at z < -1; numeric ones are not
  const auto negative = temp_file("negative.json", R"([{"y":"1","z":"-3"}])");
  CHECK(run({"solve", "--rho", "-1", "--grid", negative.string()}).code == 0);
  CHECK(run({"solve", "--rho", "-1/2", "--grid", negative.string()}).code == 2);

  CHECK(run({"solve", "--grid", temp_file("bad.json", "{").string()}).code == 2);
  CHECK(run({"solve", "--grid", temp_file("empty.json", "[]").string()}).code == 2);
  CHECK(run({"solve", "--grid", "/nonexistent/grid.json"}).code == 2);
}

TEST_CASE("verify") {
  const Run minus1 = run({"verify", "--rho", "-1", "--json"});
  CHECK(minus1.code == 0);
  const json j = minus1.report();
  CHECK(j.at("passed") == true);
  for (const auto& r : j.at("reports")) {
    CHECK(r.get<ResidualReport>().passed());
    CHECK(json(r.get<ResidualReport>()) == r);
  }
  CHECK(run({"verify", "--rho", "-2", "--lines", "3"}).code == 0);
  CHECK(run({"verify", "--rho", "2", "--lines", "1"}).code == 0);
  CHECK(run({"verify", "--rho", "-1/2"}).code == 0);

  CHECK(run({"verify", "--rho", "-1", "--tol", "1e-30"}).code == 1);
  CHECK(run({"verify", "--rho", "-1", "--tol", "-1"}).code == 2);
  CHECK(run({"verify", "--rho", "-1", "--lines", "0"}).code == 2);
  CHECK(run({"verify", "--rho", "-1", "--lines", "7"}).code == 2);

  const Run six = run({"verify", "--rho", "-1", "--lines", "6", "--json"});
  CHECK(six.code == 0);
  const json six_report = six.report();
  int kz_y_lines = 0;
  for (const auto& r : six_report.at("reports")) {
    if (r.at("equation") == "kz_y" && r.at("mode") == "exact-line") ++kz_y_lines;
  }
  CHECK(kz_y_lines == 6);
}

TEST_CASE("KZR_PRECISION") {
  {
    const PrecisionEnv env("extended");
    const Run r = run({"verify", "--rho", "-1/2", "--json"});
    CHECK(r.code == 0);
    CHECK(r.report().at("precision") == "long double");
  }
  {
    const PrecisionEnv env("quad");
    CHECK(run({"verify", "--rho", "-1"}).code == 2);
  }
  CHECK(run({"verify", "--rho", "-1/2", "--json"}).report().at("precision") == "double");
}

TEST_CASE("export-rep and --out") {
  const Run exported = run({"export-rep", "--rep", "s4-22"});
  CHECK(exported.code == 0);
  CHECK(exported.report().get<Representation>() == builtin_s4_22());

  const auto path = std::filesystem::temp_directory_path() / "kzr_cli_rep.json";
  std::filesystem::remove(path);
  const Run to_file = run({"export-rep", "--rep", "young:3,1", "--out", path.string()});
  CHECK(to_file.code == 0);
  CHECK(to_file.out.empty());
  std::ifstream in(path);
  CHECK(json::parse(in).get<Representation>() == young_orthogonal(Partition({3, 1}), 4));

  const auto report_path = std::filesystem::temp_directory_path() / "kzr_cli_validate.json";
  const Run validated = run({"validate-rep", "--rep", "s4-22", "--out", report_path.string()});
  CHECK(validated.code == 0);
  CHECK(validated.out.find("overall: PASS") != std::string::npos);
  std::ifstream report(report_path);
  CHECK(json::parse(report).at("passed") == true);
}
