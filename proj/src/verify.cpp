#include "kzr/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <sstream>

#include <boost/numeric/odeint.hpp>

namespace kzr {

namespace {

using RF = RationalFunction;
using RFMatrix = RationalFunctionMatrix;

const std::map<EquationId, std::string>& equation_names() {
  static const std::map<EquationId, std::string> names{
      {EquationId::kz_y, "kz_y"},
      {EquationId::kz_z, "kz_z"},
      {EquationId::gauge_y, "gauge_y"},
      {EquationId::phi1_y, "phi1_y"},
      {EquationId::phi2_y, "phi2_y"},
      {EquationId::scalar_y, "scalar_y"},
      {EquationId::scalar_v, "scalar_v"},
      {EquationId::gauss, "gauss"},
      {EquationId::kz_z_edge, "kz_z_edge"},
      {EquationId::gauge_z, "gauge_z"},
      {EquationId::pair_z, "pair_z"},
      {EquationId::scalar_z, "scalar_z"},
      {EquationId::scalar_z_rho_minus1, "scalar_z_rho_minus1"},
  };
  return names;
}

RF rf(const FieldScalar& x) { return RF(x); }
RF rf(const Rational& x) { return RF(FieldScalar(x)); }

RFMatrix derivative(const RFMatrix& m) {
  return m.map([](const RF& f) { return f.derivative(); });
}

std::pair<RF, RF> line(Axis free, const FieldScalar& fixed) {
  const RF x = RF::variable();
  return free == Axis::y ? std::pair{x, rf(fixed)} : std::pair{rf(fixed), x};
}

RF int_power(const RF& base, long exponent) { return int_pow(base, exponent); }

void record_entries(ResidualReport& report, const RFMatrix& residual, const std::string& where,
                    const std::string& var) {
  for (std::size_t i = 0; i < residual.rows(); ++i) {
    for (std::size_t j = 0; j < residual.cols(); ++j) {
      if (residual(i, j).is_zero()) continue;
      report.residuals.push_back(where + " entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                 "): " + residual(i, j).str(var));
    }
  }
}

void record_scalar(ResidualReport& report, const RF& residual, const std::string& where, const std::string& var) {
  report.samples.push_back(where);
  if (!residual.is_zero()) report.residuals.push_back(where + ": " + residual.str(var));
}

void finish_exact(ResidualReport& report) { report.exact_zero = report.residuals.empty(); }

long require_integer_rho(const Rational& rho, const char* what) {
  if (rho.is_zero() || !rho.is_integer()) {
    throw DomainError(std::string(what) + " needs a nonzero integer rho, got " + rho.pretty());
  }
  return rho.numerator().get_si();
}

/// Coefficients (c1, c2) of a column in the basis {b1, b2}.
std::pair<RF, RF> coordinates(const RFMatrix& column, const FieldMatrix& b1, const FieldMatrix& b2) {
  const RFMatrix basis = lift<RF>(FieldMatrix::from_columns({b1, b2}));
  const RFMatrix c = basis.inverse() * column;
  return {c(0, 0), c(1, 0)};
}

const std::vector<Rational>& sample_lines() {
  static const std::vector<Rational> values{Rational(7, 5), Rational(1, 2), Rational(3)};
  return values;
}

template <class Real>
Real matrix_max_abs(const Matrix<Real>& m) {
  Real out = 0;
  for (const Real& x : m.entries()) out = std::max(out, std::abs(x));
  return out;
}

double max_abs_exact(const FieldMatrix& m) {
  double out = 0;
  for (const FieldScalar& x : m.entries()) out = std::max(out, std::abs(x.to_double()));
  return out;
}

std::string point_text(const Rational& y, const Rational& z) { return "(y,z)=(" + y.pretty() + "," + z.pretty() + ")"; }

std::optional<std::string> pole_proximity(double y, double z, double margin) {
  if (std::abs(y + 1) <= margin) return "near 1 + y = 0";
  if (std::abs(z) <= margin) return "near z = 0";
  if (std::abs(z + 1) <= margin) return "near 1 + z = 0";
  if (std::abs(1 + y + y * z) <= margin) return "near 1 + y + yz = 0";
  return std::nullopt;
}

template <class Real>
Matrix<Real> numeric_connection(EquationId equation, const Rational& rho, Real y, Real z) {
  const Representation& rep = kz_representation();
  const Real r = rho.to<Real>();
  if (equation == EquationId::kz_y) return connection_y<Real>(rep, y, z) * r;
  return connection_z<Real>(rep, y, z) * r;
}

FieldMatrix exact_connection(EquationId equation, const Rational& rho, const FieldScalar& y, const FieldScalar& z) {
  const Representation& rep = kz_representation();
  if (equation == EquationId::kz_y) return connection_y<FieldScalar>(rep, y, z) * FieldScalar(rho);
  return connection_z<FieldScalar>(rep, y, z) * FieldScalar(rho);
}

template <class Real>
double fd_point_numeric(const SolutionFrame& frame, EquationId equation, Real y, Real z, Real h) {
  Matrix<Real> plus, minus;
  if (equation == EquationId::kz_y) {
    plus = frame.numeric<Real>(y + h, z);
    minus = frame.numeric<Real>(y - h, z);
  } else {
    plus = frame.numeric<Real>(y, z + h);
    minus = frame.numeric<Real>(y, z - h);
  }
  const Matrix<Real> d = (plus - minus) * (Real(1) / (2 * h));
  const Matrix<Real> residual = d - numeric_connection<Real>(equation, frame.rho, y, z) * frame.numeric<Real>(y, z);
  return static_cast<double>(matrix_max_abs(residual));
}

double fd_point_exact(const SolutionFrame& frame, EquationId equation, const Rational& y, const Rational& z,
                      const Rational& h) {
  FieldMatrix plus, minus;
  if (equation == EquationId::kz_y) {
    plus = frame.at(y + h, z);
    minus = frame.at(y - h, z);
  } else {
    plus = frame.at(y, z + h);
    minus = frame.at(y, z - h);
  }
  const FieldMatrix d = (plus - minus) * FieldScalar((Rational(2) * h).inverse());
  return max_abs_exact(d - exact_connection(equation, frame.rho, y, z) * frame.at(y, z));
}

template <class Real>
double rk_run(const SolutionFrame& frame, double z_fixed, double y0, double y1, double integrator_tol) {
  using State = std::array<Real, 4>;
  namespace ode = boost::numeric::odeint;
  const Representation& rep = kz_representation();
  const Real z = z_fixed;
  const Real r = frame.rho.to<Real>();
  const Matrix<Real> start = frame.numeric<Real>(static_cast<Real>(y0), z);
  const Matrix<Real> target = frame.numeric<Real>(static_cast<Real>(y1), z);
  State w{start(0, 0), start(0, 1), start(1, 0), start(1, 1)};
  if (y0 != y1) {
    auto system = [&](const State& x, State& dxdt, Real y) {
      const Matrix<Real> h = connection_y<Real>(rep, y, z) * r;
      const Matrix<Real> m{{x[0], x[1]}, {x[2], x[3]}};
      const Matrix<Real> d = h * m;
      dxdt = {d(0, 0), d(0, 1), d(1, 0), d(1, 1)};
    };
    auto stepper = ode::make_controlled(static_cast<Real>(integrator_tol), static_cast<Real>(integrator_tol),
                                        ode::runge_kutta_dopri5<State, Real>());
    const Real dt = static_cast<Real>((y1 - y0) / 100);
    try {
      ode::integrate_adaptive(stepper, system, w, static_cast<Real>(y0), static_cast<Real>(y1), dt);
    } catch (const std::exception& e) {
      throw PoleError(std::string("step-size underflow in the Runge-Kutta transport: ") + e.what());
    }
  }
  Real diff = 0;
  Real norm = 0;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      const Real e = w[2 * i + j] - target(i, j);
      diff += e * e;
      norm += target(i, j) * target(i, j);
    }
  }
  return static_cast<double>(std::sqrt(diff / norm));
}

}  // namespace

std::string to_string(EquationId id) { return equation_names().at(id); }

EquationId parse_equation(const std::string& text) {
  for (const auto& [id, name] : equation_names()) {
    if (name == text) return id;
  }
  throw ParseError("unknown equation id '" + text + "'");
}

std::string to_string(ResidualMode mode) {
  switch (mode) {
    case ResidualMode::exact_line: return "exact-line";
    case ResidualMode::finite_difference: return "finite-difference";
    case ResidualMode::rk_compare: return "rk-compare";
  }
  return "exact-line";
}

ResidualMode parse_mode(const std::string& text) {
  for (ResidualMode m : {ResidualMode::exact_line, ResidualMode::finite_difference, ResidualMode::rk_compare}) {
    if (to_string(m) == text) return m;
  }
  throw ParseError("unknown residual mode '" + text + "'");
}

Precision precision_from_env() {
  const char* raw = std::getenv("KZR_PRECISION");
  if (raw == nullptr) return Precision::float64;
  const std::string value = raw;
  if (value.empty() || value == "double" || value == "float64") return Precision::float64;
  if (value == "long double" || value == "long-double" || value == "extended" || value == "float80") {
    return Precision::extended;
  }
  throw ParseError("KZR_PRECISION must be 'double' or 'long double', got '" + value + "'");
}

std::string to_string(Precision precision) { return precision == Precision::float64 ? "double" : "long double"; }

bool ResidualReport::passed() const {
  if (mode == ResidualMode::exact_line) return exact_zero.value_or(false);
  return max_abs_residual && tolerance && !samples.empty() && *max_abs_residual <= *tolerance;
}

void to_json(json& j, const ResidualReport& report) {
  auto opt = [](const auto& value) { return value ? json(*value) : json(nullptr); };
  j = json{{"equation", to_string(report.equation)},
           {"mode", to_string(report.mode)},
           {"subject", report.subject},
           {"passed", report.passed()},
           {"exact_zero", opt(report.exact_zero)},
           {"max_abs_residual", opt(report.max_abs_residual)},
           {"tolerance", opt(report.tolerance)},
           {"step", opt(report.step)},
           {"precision", opt(report.precision)},
           {"samples", report.samples},
           {"residuals", report.residuals},
           {"notes", report.notes}};
}

void from_json(const json& j, ResidualReport& report) {
  report.equation = parse_equation(j.at("equation").get<std::string>());
  report.mode = parse_mode(j.at("mode").get<std::string>());
  report.subject = j.at("subject").get<std::string>();
  auto read = [&j](const char* key, auto& field) {
    using Field = std::remove_reference_t<decltype(field)>;
    field = j.at(key).is_null() ? Field{} : Field{j.at(key).get<typename Field::value_type>()};
  };
  read("exact_zero", report.exact_zero);
  read("max_abs_residual", report.max_abs_residual);
  read("tolerance", report.tolerance);
  read("step", report.step);
  read("precision", report.precision);
  report.samples = j.at("samples").get<std::vector<std::string>>();
  report.residuals = j.at("residuals").get<std::vector<std::string>>();
  report.notes = j.at("notes").get<std::vector<std::string>>();
}

const Representation& kz_representation() {
  static const Representation rep = builtin_s4_22();
  return rep;
}

ResidualReport exact_line_residual(const SolutionFrame& frame, EquationId equation, const FieldScalar& fixed) {
  const Representation& rep = kz_representation();
  const FieldMatrix id = FieldMatrix::identity(2);
  const RF rho = rf(frame.rho);
  ResidualReport report;
  report.equation = equation;
  report.mode = ResidualMode::exact_line;
  report.subject = frame.label;
  RFMatrix residual;
  std::string where;
  std::string var;
  switch (equation) {
    case EquationId::kz_y: {
      const auto [y, z] = line(Axis::y, fixed);
      const RFMatrix w = frame.along(Axis::y, fixed);
      residual = derivative(w) - connection_y<RF>(rep, y, z) * rho * w;
      where = "z = " + fixed.str();
      var = "y";
      break;
    }
    case EquationId::gauge_y: {
      const long r = require_integer_rho(frame.rho, "the gauge check");
      const auto [y, z] = line(Axis::y, fixed);
      const RF one(1);
      const RF b = one + y + y * z;
      const RFMatrix f = frame.along(Axis::y, fixed) * (int_power(one + y, r) * int_power(b, r));
      const RFMatrix a = lift<RF>(rep.at(1, 3) + id) * (one / (one + y)) +
                         lift<RF>(rep.at(1, 4) + id) * ((one + z) / b);
      residual = derivative(f) - a * rho * f;
      where = "z = " + fixed.str();
      var = "y";
      break;
    }
    case EquationId::kz_z: {
      const auto [y, z] = line(Axis::z, fixed);
      const RFMatrix w = frame.along(Axis::z, fixed);
      residual = derivative(w) - connection_z<RF>(rep, y, z) * rho * w;
      where = "y = " + fixed.str();
      var = "z";
      break;
    }
    case EquationId::kz_z_edge:
    case EquationId::gauge_z: {
      if (!fixed.is_zero()) throw DomainError(to_string(equation) + " lives on the edge y = 0");
      const RF z = RF::variable();
      const RF one(1);
      const RFMatrix w = frame.along(Axis::z, 0);
      if (equation == EquationId::kz_z_edge) {
        const RFMatrix h = lift<RF>(rep.at(4, 3)) * (one / z) + lift<RF>(rep.at(4, 2)) * (one / (one + z));
        residual = derivative(w) - h * rho * w;
      } else {
        const long r = require_integer_rho(frame.rho, "the gauge check");
        const RFMatrix g = w * (int_power(z, r) * int_power(one + z, r));
        const RFMatrix a = lift<RF>(rep.at(4, 3) + id) * (one / z) + lift<RF>(rep.at(4, 2) + id) * (one / (one + z));
        residual = derivative(g) - a * rho * g;
      }
      where = "y = 0";
      var = "z";
      break;
    }
    default:
      throw DomainError(to_string(equation) + " is not a matrix equation for a frame");
  }
  report.samples.push_back(where);
  record_entries(report, residual, where, var);
  finish_exact(report);
  return report;
}

std::vector<ResidualReport> scalar_ode_checks(const Rational& rho_value) {
  const long r = require_integer_rho(rho_value, "scalar_ode_checks");
  const SolutionPair pair = frobenius_rational_solutions(r);
  const HGParams params = kz_hg_params(rho_value);
  const RF rho = rf(rho_value);
  const RF one(1);
  const RF s3 = rf(FieldScalar::sqrt3());
  const RF x = RF::variable();
  const std::vector<std::pair<std::string, RationalFunction>> members{{"psi1", pair.psi1}, {"psi2", pair.psi2}};

  auto make = [&](EquationId id, const std::string& subject) {
    ResidualReport report;
    report.equation = id;
    report.mode = ResidualMode::exact_line;
    report.subject = subject;
    return report;
  };
  ResidualReport gauss = make(EquationId::gauss, "Gauss equation, rho = " + rho_value.pretty());
  ResidualReport scalar_v = make(EquationId::scalar_v, "scalar equation in v, phi(v) = psi(-v)");
  ResidualReport scalar_y = make(EquationId::scalar_y, "scalar equation in y, phi1(y) from the assembled Y");
  ResidualReport phi1_y = make(EquationId::phi1_y, "first-order pair in y, first equation");
  ResidualReport phi2_y = make(EquationId::phi2_y, "first-order pair in y, second equation");
  ResidualReport pair_z = make(EquationId::pair_z, "first-order pair in z from the assembled U");
  ResidualReport scalar_z = make(EquationId::scalar_z, "scalar equation in z, phi1(z) from the assembled U");
  ResidualReport minus1 = make(EquationId::scalar_z_rho_minus1, "rho = -1 scalar equation in z");

  auto scalar_in = [&](const RF& phi) {
    // x(1+x) phi'' + [1+x-2rho(1+2x)] phi' + 3 rho^2 phi
    const RF d1 = phi.derivative();
    return x * (one + x) * d1.derivative() + (one + x - RF(2) * rho * (one + RF(2) * x)) * d1 +
           RF(3) * rho * rho * phi;
  };

  for (const auto& [name, psi] : members) {
    record_scalar(gauss, gauss_residual(psi, params), name, "v");
    record_scalar(scalar_v, scalar_in(reflect_argument(psi)), name, "v");

    for (const Rational& zq : sample_lines()) {
      const RF y = x;
      const RF z = rf(zq);
      const RFMatrix column = assemble_Y(psi, rho_value, y, z);
      const RF b = one + y + y * z;
      const RFMatrix f = column * (int_power(one + y, r) * int_power(b, r));
      const auto [phi1, phi2] = coordinates(f, basis_w1(), basis_w2());
      const std::string where = name + ", z = " + zq.pretty();
      record_scalar(phi1_y, phi1.derivative() + s3 * rho / (one + y) * phi2, where, "y");
      record_scalar(phi2_y,
                    phi2.derivative() - rho * (RF(2) * phi2 / (one + y) + (RF(2) * phi2 + s3 * phi1) * (one + z) / b),
                    where, "y");
      const RF c = one / (z + one);
      const RF bb = c + y - RF(2) * rho * (RF(2) * (c + y) + z / (z + one));
      record_scalar(scalar_y,
                    (one + y) * (c + y) * phi1.derivative().derivative() + bb * phi1.derivative() +
                        RF(3) * rho * rho * phi1,
                    where, "y");
    }

    const RFMatrix u = assemble_U(psi, rho_value, x);
    const RFMatrix g = u * (int_power(x, r) * int_power(one + x, r));
    const auto [phi1, phi2] = coordinates(g, basis_v1(), basis_v2());
    record_scalar(pair_z, phi1.derivative() - s3 * rho / x * phi2, name + ", first", "z");
    record_scalar(pair_z,
                  phi2.derivative() -
                      rho * (RF(2) * phi2 / x + RF(2) * phi2 / (one + x) - s3 * phi1 / (one + x)),
                  name + ", second", "z");
    record_scalar(scalar_z, scalar_in(phi1), name, "z");
  }

  const std::vector<std::pair<std::string, RF>> closed{{"1/(1+z)", one / (one + x)},
                                                       {"(1-z)/z^2", (one - x) / (x * x)}};
  for (const auto& [name, phi] : closed) {
    const RF d1 = phi.derivative();
    record_scalar(minus1, x * (one + x) * d1.derivative() + (RF(3) + RF(5) * x) * d1 + RF(3) * phi, name, "z");
  }
  // the rho = -1 specialization of the z-equation coefficients
  const RF minus_one(-1);
  const bool same = (one + x - RF(2) * minus_one * (one + RF(2) * x)) == RF(3) + RF(5) * x &&
                    RF(3) * minus_one * minus_one == RF(3);
  minus1.samples.push_back("coefficients equal the general z-equation at rho = -1");
  if (!same) minus1.residuals.push_back("coefficient mismatch with the general z-equation at rho = -1");

  std::vector<ResidualReport> out{gauss, scalar_v, scalar_y, phi1_y, phi2_y, pair_z, scalar_z, minus1};
  for (ResidualReport& report : out) finish_exact(report);
  return out;
}

std::vector<GridPoint> default_grid() {
  std::vector<GridPoint> grid;
  for (long i = 0; i < 5; ++i) {
    for (long j = 0; j < 5; ++j) grid.emplace_back(Rational(2 + i, 4), Rational(2 + j, 4));
  }
  return grid;
}

ResidualReport fd_grid_residual(const SolutionFrame& frame, EquationId equation, std::vector<GridPoint> grid,
                                double h, double tol, Precision precision) {
  if (equation != EquationId::kz_y && equation != EquationId::kz_z && equation != EquationId::kz_z_edge) {
    throw DomainError("finite differences support kz_y, kz_z and kz_z_edge, not " + to_string(equation));
  }
  if (!(h > 0) || !(tol > 0)) throw DomainError("step and tolerance must be positive");
  if (equation == EquationId::kz_z_edge) {
    for (GridPoint& p : grid) p.first = 0;
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  ResidualReport report;
  report.equation = equation;
  report.mode = ResidualMode::finite_difference;
  report.subject = frame.label;
  report.tolerance = tol;
  report.step = h;
  report.precision = frame.is_exact() ? "exact" : to_string(precision);
  const Rational h_exact = Rational::from_double(h);
  const double margin = std::max(1e-3, 2 * h);
  double worst = 0;
  for (const auto& [y, z] : grid) {
    const std::string where = point_text(y, z);
    const double yd = y.to_double();
    const double zd = z.to_double();
    // the shifted points must stay clear of the poles too
    if (const auto reason = pole_proximity(yd, zd, margin)) {
      report.notes.push_back("skipped " + where + ": " + *reason);
      continue;
    }
    double value = 0;
    const EquationId kind = equation == EquationId::kz_y ? EquationId::kz_y : EquationId::kz_z;
    if (frame.is_exact()) {
      value = fd_point_exact(frame, kind, y, z, h_exact);
    } else if (precision == Precision::extended) {
      value = fd_point_numeric<long double>(frame, kind, y.to_long_double(), z.to_long_double(),
                                            static_cast<long double>(h));
    } else {
      value = fd_point_numeric<double>(frame, kind, yd, zd, h);
    }
    report.samples.push_back(where);
    worst = std::max(worst, value);
  }
  report.max_abs_residual = worst;
  if (report.samples.empty()) report.notes.push_back("every grid point was skipped");
  return report;
}

ResidualReport rk_cross_check(const SolutionFrame& frame, double z_fixed, double y0, double y1, double tol,
                              double integrator_tol, Precision precision) {
  ResidualReport report;
  report.equation = EquationId::kz_y;
  report.mode = ResidualMode::rk_compare;
  report.subject = frame.label;
  report.tolerance = tol;
  report.precision = to_string(precision);
  const double lo = std::min(y0, y1);
  const double hi = std::max(y0, y1);
  if (z_fixed == 0 || z_fixed == -1) throw PoleError("z on a pole of the y-equation");
  const double wall = -1 / (1 + z_fixed);
  if ((lo <= -1 && -1 <= hi) || (lo <= wall && wall <= hi)) {
    throw PoleError("the integration path crosses a pole of the y-equation");
  }
  std::ostringstream where;
  where.precision(17);
  where << "z = " << z_fixed << ", y: " << y0 << " -> " << y1;
  where.precision(3);
  where << ", integrator tol " << integrator_tol;
  report.samples.push_back(where.str());
  report.max_abs_residual = precision == Precision::extended
                                ? rk_run<long double>(frame, z_fixed, y0, y1, integrator_tol)
                                : rk_run<double>(frame, z_fixed, y0, y1, integrator_tol);
  report.notes.push_back("max_abs_residual is the relative Frobenius error at the end point");
  return report;
}

SolutionFrame constant_frame(const FieldMatrix& m, const Rational& rho) {
  SolutionFrame frame;
  frame.kind = FrameKind::exact;
  frame.provenance = Provenance::custom;
  frame.rho = rho;
  frame.label = "constant frame";
  frame.exact_at = [m](const FieldScalar&, const FieldScalar&) { return m; };
  frame.exact_line = [m](Axis, const FieldScalar&) { return lift<RationalFunction>(m); };
  frame.double_at = [m](double, double) { return to_real<double>(m); };
  frame.long_at = [m](long double, long double) { return to_real<long double>(m); };
  return frame;
}

}  // namespace kzr
