#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "kzr/eigen.hpp"
#include "kzr/errors.hpp"
#include "kzr/hypergeom.hpp"
#include "kzr/kzcore.hpp"
#include "kzr/kzsolve.hpp"
#include "kzr/symrep.hpp"
#include "kzr/verify.hpp"

namespace kzr::cli {

namespace {

/// Input problems that map to exit code 2.
class BadInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::string rep = "s4-22";
  int n = 0;  // 0: taken from the selector
  int k = 0;  // 0: every computable Q_k
  std::string rho = "-1";
  std::string grid = "default";
  int lines = 3;
  std::optional<double> tol;
  std::string out;
  bool json_output = false;
};

// Line values for exact residuals, in the order they are used.
const std::vector<Rational>& kz_y_lines() {
  static const std::vector<Rational> lines{Rational(7, 5), Rational(1, 2), Rational(3),
                                           Rational(2, 3), Rational(5, 2), Rational(9, 4)};
  return lines;
}

const std::vector<Rational>& kz_z_lines() {
  static const std::vector<Rational> lines{Rational(0), Rational(1, 3), Rational(1),
                                           Rational(2, 5), Rational(3, 2), Rational(5, 7)};
  return lines;
}

constexpr double kPoleMargin = 1e-3;
constexpr double kExactStep = 1e-6;
constexpr double kNumericStep = 1e-5;
constexpr double kExactTol = 1e-8;
constexpr double kNumericTol = 1e-6;

Representation resolve_representation(const RunConfig& config) {
  try {
    return representation_from_selector(config.rep, config.n);
  } catch (const Error& e) {
    throw BadInput(e.what());
  }
}

Rational parse_rho(const std::string& text) {
  Rational rho;
  try {
    rho = Rational::parse(text);
  } catch (const Error& e) {
    throw BadInput("--rho: " + std::string(e.what()));
  }
  if (rho.is_zero()) throw BadInput("rho = 0 is excluded: the solutions carry a 1/rho factor");
  return rho;
}

std::vector<GridPoint> load_grid(const std::string& source) {
  if (source == "default") return default_grid();
  std::ifstream in(source);
  if (!in) throw BadInput("cannot open grid file " + source);
  std::vector<GridPoint> grid;
  try {
    const json j = json::parse(in);
    if (!j.is_array()) throw ParseError("grid must be a JSON list");
    for (const auto& point : j) grid.emplace_back(point.at("y").get<Rational>(), point.at("z").get<Rational>());
  } catch (const Error& e) {
    throw BadInput("grid " + source + ": " + e.what());
  } catch (const json::exception& e) {
    throw BadInput("grid " + source + ": " + e.what());
  }
  if (grid.empty()) throw BadInput("grid " + source + " is empty");
  return grid;
}

std::string point_str(const GridPoint& p) { return "(y, z) = (" + p.first.pretty() + ", " + p.second.pretty() + ")"; }

/// Rejects grids touching the pole set, and for non-integer rho grids leaving
/// the real domain y > -1, z > 0, 1 + y + yz > 0.
void check_grid(const std::vector<GridPoint>& grid, bool real_domain) {
  std::vector<std::string> bad;
  for (const auto& p : grid) {
    const double y = p.first.to<double>();
    const double z = p.second.to<double>();
    const double edge = 1 + y + y * z;
    const bool near_pole = std::abs(y + 1) <= kPoleMargin || std::abs(z) <= kPoleMargin ||
                           std::abs(z + 1) <= kPoleMargin || std::abs(edge) <= kPoleMargin;
    const bool outside = real_domain && !(y > -1 && z > 0 && edge > 0);
    if (near_pole) bad.push_back(point_str(p) + " lies within " + std::to_string(kPoleMargin) + " of a pole");
    if (!near_pole && outside) bad.push_back(point_str(p) + " is outside the real domain of the numeric frames");
  }
  if (!bad.empty()) {
    std::string message = "grid rejected:";
    for (const auto& b : bad) message += "\n  " + b;
    throw BadInput(message);
  }
}

void emit(const RunConfig& config, const json& report, const std::string& table, std::ostream& out) {
  if (!config.out.empty()) {
    std::ofstream file(config.out);
    if (!file) throw BadInput("cannot write " + config.out);
    file << report.dump(2) << '\n';
  }
  if (config.json_output) {
    out << report.dump(2) << '\n';
  } else {
    out << table;
  }
}

std::string verdict(bool passed) { return passed ? "PASS" : "FAIL"; }

int cmd_validate_rep(const RunConfig& config, std::ostream& out) {
  const Representation rep = resolve_representation(config);
  ValidationReport report = validate_representation(rep);
  report.merge(check_flatness(rep));
  json j = report;
  j["representation"] = config.rep;
  j["passed"] = report.passed();

  std::ostringstream table;
  table << "representation " << config.rep << " (S_" << rep.n() << ", dimension " << rep.dim() << ")\n";
  for (const auto& check : report.checks) table << verdict(check.passed) << "  " << check.identity << '\n';
  for (const auto& note : report.notes) table << "note: " << note << '\n';
  table << "overall: " << verdict(report.passed()) << '\n';
  emit(config, j, table.str(), out);
  return report.passed() ? kPass : kFail;
}

int cmd_rationality(const RunConfig& config, std::ostream& out) {
  const Representation rep = resolve_representation(config);
  std::vector<int> ks;
  if (config.k != 0) {
    if (config.k < 1 || config.k > rep.n()) throw BadInput("--k must lie in 1.." + std::to_string(rep.n()));
    ks.push_back(config.k);
  } else {
    for (int k = 1; k <= rep.n(); ++k) ks.push_back(k);
  }

  json spectra = json::array();
  json notes = json::array();
  std::ostringstream table;
  bool integer = true;
  for (int k : ks) {
    FieldMatrix q;
    try {
      q = build_Qk(rep, k);
    } catch (const MissingMatrix& e) {
      if (config.k != 0) throw BadInput(e.what());
      notes.push_back("Q_" + std::to_string(k) + " skipped: " + std::string(e.what()));
      continue;
    }
    const EigenReport eigen = integer_eigenvalue_test(q);
    integer = integer && eigen.integer_spectrum;
    json entry{{"k", k}, {"zero_matrix", q.is_zero_matrix()}};
    entry.update(json(eigen));
    spectra.push_back(std::move(entry));

    table << "Q_" << k << ": det(x - Q) = " << eigen.charpoly.str() << '\n';
    table << "  rational roots:";
    for (const auto& r : eigen.linear_roots) table << ' ' << r.pretty();
    table << '\n';
    if (eigen.quadratic_roots) table << "  quadratic roots: " << *eigen.quadratic_roots << '\n';
    if (!eigen.residual_factor.is_constant() && !eigen.quadratic_roots) {
      table << "  irreducible factor: " << eigen.residual_factor.str() << '\n';
    }
    table << "  spectrum: " << (eigen.integer_spectrum ? "integer" : "non-integer") << '\n';
  }
  if (spectra.empty()) throw BadInput("no Q_k is computable from the stored matrices");
  for (const auto& note : notes) table << "note: " << note.get<std::string>() << '\n';
  table << "verdict: " << (integer ? "integer" : "non-integer") << '\n';

  const json j{{"command", "rationality"}, {"representation", config.rep}, {"spectra", spectra},
               {"notes", notes},           {"verdict", integer ? "integer" : "non-integer"}};
  emit(config, j, table.str(), out);
  return integer ? kPass : kFail;
}

json float_matrix(const Matrix<long double>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(static_cast<double>(m(i, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

int cmd_solve(const RunConfig& config, std::ostream& out) {
  const Rational rho = parse_rho(config.rho);
  const bool exact = rho.is_integer();
  const std::vector<GridPoint> grid = load_grid(config.grid);
  check_grid(grid, !exact);
  const FrameKind kind = exact ? FrameKind::exact : FrameKind::numeric;
  const SolutionFrame w1 = fundamental_W1(rho, kind);
  const SolutionFrame w2 = fundamental_W2(rho, kind);
  const SolutionFrame w = compose_frames(w1, w2);

  json j{{"command", "solve"}, {"rho", rho}, {"mode", to_string(kind)}, {"hypergeometric", kz_hg_params(rho)}};
  std::ostringstream table;
  table << "rho = " << rho.pretty() << ", " << to_string(kind) << " frames, " << grid.size() << " grid points\n";
  if (exact) {
    const SolutionPair pair = frobenius_rational_solutions(rho.numerator().get_si());
    j["psi"] = pair;
    j["U_of_z"] = w2.along(Axis::z, FieldScalar(0));
    table << "psi1(v) = " << pair.psi1 << "\npsi2(v) = " << pair.psi2 << '\n';
  } else {
    j["psi"] = nullptr;
    j["notes"] = json::array({"non-integer rho: no rational psi pair; frames are evaluated numerically"});
  }

  json points = json::array();
  const Precision precision = precision_from_env();
  for (const auto& p : grid) {
    json entry{{"y", p.first}, {"z", p.second}};
    if (exact) {
      const FieldScalar y(p.first);
      const FieldScalar z(p.second);
      entry["Y"] = exact_and_float(w1.at(y, z));
      entry["U"] = exact_and_float(w2.at(y, z));
      entry["W"] = exact_and_float(w.at(y, z));
    } else {
      auto eval = [&](const SolutionFrame& f) {
        const long double y = p.first.to<long double>();
        const long double z = p.second.to<long double>();
        if (precision == Precision::extended) return float_matrix(f.numeric<long double>(y, z));
        const Matrix<double> d = f.numeric<double>(static_cast<double>(y), static_cast<double>(z));
        Matrix<long double> widened(d.rows(), d.cols());
        for (std::size_t r = 0; r < d.rows(); ++r)
          for (std::size_t c = 0; c < d.cols(); ++c) widened(r, c) = d(r, c);
        return float_matrix(widened);
      };
      entry["Y"] = json{{"float", eval(w1)}};
      entry["U"] = json{{"float", eval(w2)}};
      entry["W"] = json{{"float", eval(w)}};
    }
    points.push_back(std::move(entry));
  }
  j["precision"] = exact ? "exact" : to_string(precision);
  j["grid"] = std::move(points);
  table << "evaluated Y, U and W at every grid point\n";
  emit(config, j, table.str(), out);
  return kPass;
}

std::string describe(const ResidualReport& r) {
  std::ostringstream s;
  s << std::left << std::setw(5) << verdict(r.passed()) << ' ' << std::setw(20) << to_string(r.equation) << ' '
    << std::setw(18) << to_string(r.mode) << ' ' << r.subject;
  if (r.mode == ResidualMode::finite_difference) {
    s << ", " << r.samples.size() << " points";
  } else if (!r.samples.empty()) {
    s << ", " << r.samples.front();
    for (std::size_t i = 1; i < r.samples.size(); ++i) s << "; " << r.samples[i];
  }
  if (r.exact_zero) s << "  [" << (*r.exact_zero ? "exact zero" : "nonzero") << ']';
  if (r.max_abs_residual) {
    s << "  [max " << std::scientific << std::setprecision(3) << *r.max_abs_residual;
    if (r.tolerance) s << " <= " << *r.tolerance;
    s << ']';
  }
  s << '\n';
  return s.str();
}

int cmd_verify(const RunConfig& config, std::ostream& out) {
  const Rational rho = parse_rho(config.rho);
  const bool exact = rho.is_integer();
  if (config.lines < 1 || config.lines > static_cast<int>(kz_y_lines().size())) {
    throw BadInput("--lines must lie in 1.." + std::to_string(kz_y_lines().size()));
  }
  const std::vector<GridPoint> grid = load_grid(config.grid);
  check_grid(grid, !exact);
  const Precision precision = precision_from_env();

  std::vector<ResidualReport> reports;
  if (exact) {
    const SolutionFrame w = compose_W(rho, FrameKind::exact);
    const auto n = static_cast<std::size_t>(config.lines);
    for (std::size_t i = 0; i < n; ++i) {
      reports.push_back(exact_line_residual(w, EquationId::kz_y, FieldScalar(kz_y_lines()[i])));
      reports.push_back(exact_line_residual(w, EquationId::gauge_y, FieldScalar(kz_y_lines()[i])));
    }
    for (std::size_t i = 0; i < n; ++i) {
      reports.push_back(exact_line_residual(w, EquationId::kz_z, FieldScalar(kz_z_lines()[i])));
    }
    reports.push_back(exact_line_residual(w, EquationId::kz_z_edge, FieldScalar(0)));
    reports.push_back(exact_line_residual(w, EquationId::gauge_z, FieldScalar(0)));
    for (auto& r : scalar_ode_checks(rho)) reports.push_back(std::move(r));
  }
  const SolutionFrame w = compose_W(rho, exact ? FrameKind::exact : FrameKind::numeric);
  const double h = exact ? kExactStep : kNumericStep;
  const double tol = config.tol.value_or(exact ? kExactTol : kNumericTol);
  for (EquationId eq : {EquationId::kz_y, EquationId::kz_z, EquationId::kz_z_edge}) {
    reports.push_back(fd_grid_residual(w, eq, grid, h, tol, precision));
  }
  try {
    reports.push_back(rk_cross_check(w, 1, 1, 2, tol, 1e-12, precision));
  } catch (const PoleError& e) {
    throw BadInput(std::string("Runge-Kutta path: ") + e.what());
  }

  bool passed = true;
  json list = json::array();
  std::ostringstream table;
  table << "rho = " << rho.pretty() << ", " << (exact ? "exact" : "numeric") << " frames, precision "
        << to_string(precision) << '\n';
  for (const auto& r : reports) {
    passed = passed && r.passed();
    list.push_back(r);
    table << describe(r);
  }
  table << "overall: " << verdict(passed) << '\n';
  const json j{{"command", "verify"},
               {"rho", rho},
               {"mode", exact ? "exact" : "numeric"},
               {"precision", to_string(precision)},
               {"reports", std::move(list)},
               {"passed", passed}};
  emit(config, j, table.str(), out);
  return passed ? kPass : kFail;
}

int cmd_export_rep(const RunConfig& config, std::ostream& out) {
  const Representation rep = resolve_representation(config);
  const json j = rep;
  if (!config.out.empty()) {
    std::ofstream file(config.out);
    if (!file) throw BadInput("cannot write " + config.out);
    file << j.dump(2) << '\n';
  }
  if (config.out.empty() || config.json_output) out << j.dump(2) << '\n';
  return kPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"Exact construction, solution and verification of KZ systems for S_n representations", "kzr"};
  app.require_subcommand(1);

  auto add_rep = [&](CLI::App* sub) {
    sub->add_option("--rep", config.rep, "s4-22, s5-gen1 or young:<partition>")->capture_default_str();
    sub->add_option("--n", config.n, "degree n of S_n (defaults to the selector's)");
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--out", config.out, "also write the JSON report to this path");
    sub->add_flag("--json", config.json_output, "print the JSON report instead of the table");
  };

  CLI::App* validate = app.add_subcommand("validate-rep", "exact identity suite of a representation");
  add_rep(validate);
  add_output(validate);

  CLI::App* rationality = app.add_subcommand("rationality", "integer-eigenvalue test for Q_k");
  add_rep(rationality);
  rationality->add_option("--k", config.k, "single index k (default: every computable Q_k)");
  add_output(rationality);

  CLI::App* solve = app.add_subcommand("solve", "solution bundle for the n = 4 system");
  solve->add_option("--rho", config.rho, "rational \"p/q\"")->capture_default_str();
  solve->add_option("--grid", config.grid, "\"default\" or a JSON file of {\"y\",\"z\"} points")->capture_default_str();
  add_output(solve);

  CLI::App* verify = app.add_subcommand("verify", "residual checks of the n = 4 solutions");
  verify->add_option("--rho", config.rho, "rational \"p/q\"")->capture_default_str();
  verify->add_option("--grid", config.grid, "\"default\" or a JSON file of {\"y\",\"z\"} points")->capture_default_str();
  verify->add_option("--lines", config.lines, "exact lines per equation")->capture_default_str();
  verify->add_option("--tol", config.tol, "tolerance of the floating-point checks");
  add_output(verify);

  CLI::App* export_rep = app.add_subcommand("export-rep", "representation matrices as JSON");
  add_rep(export_rep);
  add_output(export_rep);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kBadInput;
  }

  try {
    if (config.tol && !(*config.tol > 0)) throw BadInput("--tol must be positive");
    if (validate->parsed()) return cmd_validate_rep(config, out);
    if (rationality->parsed()) return cmd_rationality(config, out);
    if (solve->parsed()) return cmd_solve(config, out);
    if (verify->parsed()) return cmd_verify(config, out);
    return cmd_export_rep(config, out);
  } catch (const BadInput& e) {
    err << "kzr: " << e.what() << '\n';
    return kBadInput;
  } catch (const ParseError& e) {
    err << "kzr: " << e.what() << '\n';
    return kBadInput;
  } catch (const PoleError& e) {
    err << "kzr: " << e.what() << '\n';
    return kBadInput;
  } catch (const Error& e) {
    err << "kzr: " << e.what() << '\n';
    return kFail;
  }
}

}  // namespace kzr::cli
