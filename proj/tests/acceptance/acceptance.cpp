// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "kzr/eigen.hpp"
#include "kzr/hypergeom.hpp"
#include "kzr/kzcore.hpp"
#include "kzr/kzsolve.hpp"
#include "kzr/symrep.hpp"
#include "kzr/verify.hpp"

using namespace kzr;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

/// Seeded positive rationals p/q with 1 <= p <= 40, 1 <= q <= 17.
class PositiveRationals {
 public:
  explicit PositiveRationals(unsigned seed) : rng_(seed) {}
  Rational next() {
    return Rational(std::uniform_int_distribution<long>(1, 40)(rng_), std::uniform_int_distribution<long>(1, 17)(rng_));
  }

 private:
  std::mt19937 rng_;
};

Outcome representation_identities() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const std::vector<std::pair<std::string, Representation>> reps{
      {"s4-22", builtin_s4_22()},
      {"young [2,1]", young_orthogonal(Partition({2, 1}), 3)},
      {"young [2,2]", young_orthogonal(Partition({2, 2}), 4)}};
  std::size_t checks = 0;
  for (const auto& [name, rep] : reps) {
    const ValidationReport report = validate_representation(rep);
    o.require(rep.complete(), name + " is not complete");
    o.require(report.passed(), name + " violates " + std::to_string(report.violations().size()) + " identities");
    checks += report.checks.size();
  }
  const double t = seconds_since(start);
  o.require(t < 1.0, "runtime " + std::to_string(t) + " s");
  if (o.passed) o.detail = std::to_string(checks) + " exact identities, " + std::to_string(t) + " s";
  return o;
}

Outcome omega_vanishes() {
  Outcome o;
  const Representation rep = builtin_s4_22();
  o.require(omega(rep, 1).is_zero_matrix(), "Omega_1 != 0");
  o.require(omega(rep, 2).is_zero_matrix(), "Omega_2 != 0");
  std::mt19937 rng(41);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
  int points = 0;
  while (points < 40) {
    UPoint u{{FieldScalar(Rational(num(rng), den(rng))), FieldScalar(Rational(num(rng), den(rng))),
              FieldScalar(Rational(num(rng), den(rng))), FieldScalar(Rational(num(rng), den(rng)))}};
    const auto& [u1, u2, u3, u4] = u.u;
    (void)u4;
    if (u1.is_zero() || u2.is_zero() || u3.is_zero() || (u2 + 1).is_zero() || (u3 + 1).is_zero() ||
        (1 + u2 + u2 * u3).is_zero()) {
      continue;
    }
    const auto h = build_H(rep, u);
    o.require(h[0].is_zero_matrix(), "H_1 != 0 at a valid point");
    o.require(h[3].is_zero_matrix(), "H_4 != 0 at a valid point");
    ++points;
  }
  if (o.passed) o.detail = "Omega_1 = Omega_2 = 0; H_1 = H_4 = 0 at 40 seeded points";
  return o;
}

Outcome flatness() {
  Outcome o;
  const ValidationReport report = check_flatness(builtin_s4_22());
  o.require(!report.checks.empty(), "no flatness identities were checked");
  o.require(report.passed(), std::to_string(report.violations().size()) + " violations");
  if (o.passed) o.detail = std::to_string(report.checks.size()) + " commutator identities";
  return o;
}

Outcome q_spectra_n4() {
  Outcome o;
  const Representation rep = builtin_s4_22();
  for (int k = 1; k <= 4; ++k) {
    const FieldMatrix q = build_Qk(rep, k);
    o.require(q.is_zero_matrix(), "Q_" + std::to_string(k) + " != 0");
    const EigenReport report = integer_eigenvalue_test(q);
    o.require(report.integer_spectrum, "Q_" + std::to_string(k) + " verdict non-integer");
    o.require(report.linear_roots == std::vector<Rational>{0, 0}, "Q_" + std::to_string(k) + " spectrum != {0,0}");
  }
  if (o.passed) o.detail = "Q_1..Q_4 = 0, spectra {0,0}, verdict integer";
  return o;
}

Outcome q1_spectrum_n5() {
  Outcome o;
  const FieldMatrix q1 = build_Qk(builtin_s5_gen1(), 1);
  const EigenReport report = integer_eigenvalue_test(q1);
  auto lin = [](const Rational& r) { return Poly({FieldScalar(-r), FieldScalar(1)}); };
  const Poly quadratic({FieldScalar(Rational(-4, 9)), FieldScalar(Rational(-17, 9)), FieldScalar(1)});
  const Poly expected = lin(Rational(5, 3)) * lin(Rational(1, 3)) * lin(Rational(1, 9)) * quadratic;
  o.require(report.charpoly == expected, "characteristic polynomial " + report.charpoly.str());
  // det(xI - Q1) by Bareiss elimination at sample points, independent of the charpoly routine
  for (long x = -3; x <= 3; ++x) {
    FieldMatrix shifted = FieldMatrix::identity(q1.rows()) * FieldScalar(x) - q1;
    o.require(shifted.determinant() == expected.eval(FieldScalar(x)), "determinant oracle at x = " + std::to_string(x));
  }
  o.require(report.linear_roots == std::vector<Rational>{Rational(1, 9), Rational(1, 3), Rational(5, 3)},
            "rational roots");
  o.require(report.residual_factor == quadratic, "residual factor " + report.residual_factor.str());
  o.require(report.quadratic_roots == std::optional<std::string>("(17±√433)/18"), "quadratic roots");
  o.require(report.discriminant == std::optional<Rational>(433), "discriminant");
  o.require(q1.trace() == FieldScalar(4), "trace " + q1.trace().str());
  o.require(!report.integer_spectrum, "verdict integer");
  if (o.passed) o.detail = "roots {(17±√433)/18, 5/3, 1/3, 1/9}, trace 4, verdict non-integer";
  return o;
}

Outcome hypergeometric_rationality() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  for (long rho = -5; rho <= 5; ++rho) {
    if (rho == 0) continue;
    const std::string tag = "rho = " + std::to_string(rho);
    try {
      const SolutionPair pair = frobenius_rational_solutions(rho);
      const HGParams p = kz_hg_params(rho);
      o.require(gauss_residual(pair.psi1, p).is_zero(), tag + ": psi1 residual");
      o.require(gauss_residual(pair.psi2, p).is_zero(), tag + ": psi2 residual");
      o.require(!wronskian(pair.psi1, pair.psi2).is_zero(), tag + ": zero Wronskian");
    } catch (const Error& e) {
      o.require(false, tag + ": " + e.what());
    }
  }
  const double t = seconds_since(start);
  o.require(t < 5.0, "runtime " + std::to_string(t) + " s");
  if (o.passed) o.detail = "10 rational pairs, exact residuals, " + std::to_string(t) + " s";
  return o;
}

Outcome rho_minus1_closed_forms() {
  Outcome o;
  for (const ResidualReport& r : scalar_ode_checks(-1)) {
    if (r.equation == EquationId::scalar_z_rho_minus1) {
      o.require(r.exact_zero == std::optional<bool>(true), "closed forms do not solve the rho = -1 z-equation");
    }
  }
  const SolutionFrame w2 = fundamental_W2(-1, FrameKind::exact);
  const SolutionFrame w1 = fundamental_W1(-1, FrameKind::exact);
  const SolutionFrame explicit_w1 = explicit_W1_rho_minus1();
  PositiveRationals gen(1931);
  for (int i = 0; i < 50; ++i) {
    const FieldScalar z(gen.next());
    const FieldMatrix u = join_columns(explicit_U1<FieldScalar>(z), explicit_U2<FieldScalar>(z));
    o.require(w2.at(0, z) == u, "U differs from the closed form at z = " + z.str());
  }
  const FieldScalar y0(Rational(1, 2));
  const FieldScalar z0(Rational(1));
  const FieldMatrix factor = explicit_w1.at(y0, z0).inverse() * w1.at(y0, z0);
  o.require(!factor.determinant().is_zero(), "singular right factor");
  for (int i = 0; i < 49; ++i) {
    const FieldScalar y(gen.next());
    const FieldScalar z(gen.next());
    o.require(w1.at(y, z) == explicit_w1.at(y, z) * factor, "W1 != explicit * C at (" + y.str() + ", " + z.str() + ")");
  }
  if (o.passed) {
    std::ostringstream s;
    s << "closed forms solve the z-equation; U exact at 50 z; right factor C = [[" << factor(0, 0) << ", "
      << factor(0, 1) << "], [" << factor(1, 0) << ", " << factor(1, 1) << "]] reproduces W1 at 49 points";
    o.detail = s.str();
  }
  return o;
}

Outcome composed_frame() {
  Outcome o;
  const SolutionFrame w = compose_W(-1, FrameKind::exact);
  for (const Rational& z : {Rational(7, 5), Rational(1, 2), Rational(3)}) {
    const ResidualReport r = exact_line_residual(w, EquationId::kz_y, FieldScalar(z));
    o.require(r.exact_zero == std::optional<bool>(true), "y-equation residual nonzero at z = " + z.pretty());
  }
  for (const Rational& y : {Rational(0), Rational(1, 3), Rational(1)}) {
    const ResidualReport r = exact_line_residual(w, EquationId::kz_z, FieldScalar(y));
    o.require(r.exact_zero == std::optional<bool>(true), "z-equation residual nonzero at y = " + y.pretty());
  }
  double worst = 0;
  for (EquationId eq : {EquationId::kz_y, EquationId::kz_z}) {
    const ResidualReport r = fd_grid_residual(w, eq, default_grid(), 1e-6, 1e-8);
    o.require(r.passed() && r.samples.size() == 25, to_string(eq) + " finite-difference residual");
    if (r.max_abs_residual) worst = std::max(worst, *r.max_abs_residual);
  }
  const SolutionFrame w2 = fundamental_W2(-1, FrameKind::exact);
  o.require(w.along(Axis::z, 0) == w2.along(Axis::z, 0), "W(0, z) != W2(z) as rational functions");
  if (o.passed) {
    std::ostringstream s;
    s << "exact-zero on 6 lines; finite-difference max " << worst << " <= 1e-8; W(0,z) = W2(z)";
    o.detail = s.str();
  }
  return o;
}

Outcome numeric_cross_validation() {
  Outcome o;
  const SolutionFrame w = compose_W(-1, FrameKind::exact);
  const ResidualReport rk = rk_cross_check(w, 1, 1, 2, 1e-8);
  o.require(rk.passed(), "Runge-Kutta relative error " + std::to_string(*rk.max_abs_residual));
  const double coarse = *fd_grid_residual(w, EquationId::kz_y, default_grid(), 1e-6, 1).max_abs_residual;
  const double fine = *fd_grid_residual(w, EquationId::kz_y, default_grid(), 5e-7, 1).max_abs_residual;
  const double ratio = coarse / fine;
  o.require(ratio >= 3.5 && ratio <= 4.5, "halving ratio " + std::to_string(ratio));
  if (o.passed) {
    std::ostringstream s;
    s << "Runge-Kutta relative error " << *rk.max_abs_residual << "; halving ratio " << ratio;
    o.detail = s.str();
  }
  return o;
}

template <class T>
bool round_trips(const T& value) {
  const std::string text = json(value).dump();
  const T back = json::parse(text).get<T>();
  return back == value && json(back).dump() == text;
}

Outcome json_round_trip() {
  Outcome o;
  const std::vector<std::pair<std::string, Representation>> reps{
      {"s4-22", builtin_s4_22()},
      {"s5-gen1", builtin_s5_gen1()},
      {"young [2,1]", young_orthogonal(Partition({2, 1}), 3)},
      {"young [2,2]", young_orthogonal(Partition({2, 2}), 4)},
      {"young [3,1]", young_orthogonal(Partition({3, 1}), 4)}};
  for (const auto& [name, rep] : reps) o.require(round_trips(rep), name);

  ValidationReport validation = validate_representation(builtin_s4_22());
  validation.merge(check_flatness(builtin_s4_22()));
  o.require(round_trips(validation), "validation report");
  o.require(round_trips(validate_representation(builtin_s5_gen1())), "partial validation report");
  o.require(round_trips(integer_eigenvalue_test(build_Qk(builtin_s5_gen1(), 1))), "eigen report");

  const SolutionFrame w = compose_W(-1, FrameKind::exact);
  std::vector<ResidualReport> residuals = scalar_ode_checks(-1);
  residuals.push_back(exact_line_residual(w, EquationId::kz_y, FieldScalar(Rational(7, 5))));
  residuals.push_back(fd_grid_residual(w, EquationId::kz_z, default_grid(), 1e-6, 1e-8));
  residuals.push_back(rk_cross_check(w, 1, 1, 2, 1e-8));
  for (const auto& r : residuals) o.require(round_trips(r), "residual report " + to_string(r.equation));
  if (o.passed) {
    o.detail = "5 representations, 3 identity/eigen reports, " + std::to_string(residuals.size()) +
               " residual reports";
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"representation identities", representation_identities},
      {"Omega_1 = Omega_2 = 0, H_1 = H_4 = 0", omega_vanishes},
      {"flatness of s4-22", flatness},
      {"Q_k spectra for n = 4", q_spectra_n4},
      {"Q_1 spectrum for n = 5", q1_spectrum_n5},
      {"rational hypergeometric pairs", hypergeometric_rationality},
      {"rho = -1 closed forms", rho_minus1_closed_forms},
      {"composed fundamental solution", composed_frame},
      {"numeric cross-validation", numeric_cross_validation},
      {"JSON round trip", json_round_trip},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    Outcome outcome;
    try {
      outcome = check();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    if (!outcome.passed) ++failures;
    std::cout << (outcome.passed ? "PASS" : "FAIL") << "  criterion " << index << ": " << name << " | "
              << outcome.detail << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
  return failures == 0 ? 0 : 1;
}
