#pragma once

// Gauss hypergeometric equation
//   v(1-v) psi'' + [gamma - (alpha+beta+1) v] psi' - alpha beta psi = 0
// with the KZ parameters alpha = -rho, beta = -3 rho, gamma = 1 - 2 rho:
// exact rational solutions for integer rho and a numeric series evaluator.

#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "kzr/errors.hpp"
#include "kzr/exactnum/rational_function.hpp"
#include "kzr/exactnum/serialize.hpp"

namespace kzr {

struct HGParams {
  Rational alpha;
  Rational beta;
  Rational gamma;
  friend bool operator==(const HGParams&, const HGParams&) = default;
};

HGParams kz_hg_params(const Rational& rho);

/// Left-hand side of the Gauss equation applied to psi (variable v).
RationalFunction gauss_residual(const RationalFunction& psi, const HGParams& p);

/// f(v) -> f(-v). The only place the v <-> -v transport is performed.
RationalFunction reflect_argument(const RationalFunction& f);

/// psi1 psi2' - psi2 psi1'.
RationalFunction wronskian(const RationalFunction& psi1, const RationalFunction& psi2);

/// Roots of the indicial equation s(s - 1 + gamma) = 0 at v = 0: {0, 1 - gamma}.
std::array<Rational, 2> indicial_exponents(const HGParams& p);

struct SolutionPair {
  RationalFunction psi1;  // exponent 0 at v = 0, psi1(0) = 1
  RationalFunction psi2;  // exponent 1 - gamma, lowest Laurent coefficient 1
  std::string psi1_route;
  std::string psi2_route;
};

/// Exact rational pair for a nonzero integer rho; every member is checked
/// with gauss_residual and the Wronskian before return. NonTermination when
/// no rational solution appears within degree 6|rho| + 4.
SolutionPair frobenius_rational_solutions(long rho);

/// Second solution psi1 * integral(Wr / psi1^2) with Wr = v^-gamma (1-v)^(gamma-alpha-beta-1),
/// when that integral is a rational function (integer parameters only).
std::optional<RationalFunction> reduction_of_order(const RationalFunction& psi1, const HGParams& p);

/// Exact antiderivative of f when it is rational (no logarithmic part), via
/// Horowitz-Ostrogradsky. The constant of integration is zero at the
/// polynomial part and absent from the proper part.
std::optional<RationalFunction> rational_antiderivative(const RationalFunction& f);

void to_json(json& j, const HGParams& p);
void to_json(json& j, const SolutionPair& pair);

/// 2F1(alpha, beta; gamma; v) by partial sums, stopping when a rigorous
/// geometric bound on the tail drops below tol.
template <class Real>
Real hg_series_eval(const HGParams& p, Real v, Real tol) {
  if (!(std::abs(v) < Real(1))) throw DomainError("series evaluation needs |v| < 1");
  if (p.gamma.is_integer() && p.gamma.sign() <= 0) {
    throw DomainError("gamma = " + p.gamma.pretty() + " is a nonpositive integer; the series is undefined");
  }
  const Real a = p.alpha.to<Real>();
  const Real b = p.beta.to<Real>();
  const Real c = p.gamma.to<Real>();
  const Real abs_v = std::abs(v);
  long stop = -1;  // series is a polynomial of degree stop when a or b is a nonpositive integer
  for (const Rational* e : {&p.alpha, &p.beta}) {
    if (e->is_integer() && e->sign() <= 0) {
      const long n = -e->numerator().get_si();
      if (stop < 0 || n < stop) stop = n;
    }
  }
  Real sum = 1;
  Real term = 1;
  constexpr long max_terms = 1000000;
  for (long k = 0; k < max_terms; ++k) {
    const Real kk = static_cast<Real>(k);
    if (k == stop) return sum;
    term *= (a + kk) * (b + kk) / ((c + kk) * (kk + 1)) * v;
    sum += term;
    // bound on |t_{j+1} / t_j| for every j > k
    const Real j = kk + 1;
    if (j > std::abs(c)) {
      const Real q = abs_v * (j + std::abs(a)) / (j - std::abs(c)) * std::max(Real(1), (j + std::abs(b)) / (j + 1));
      if (q < Real(1) && std::abs(term) * q / (Real(1) - q) < tol) return sum;
    }
  }
  throw NonTermination("hypergeometric series did not reach tolerance");
}

}  // namespace kzr

namespace kzr {

/// Two independent real solutions of the Gauss equation on the negative axis
/// x < 0, with first derivatives. Series are summed after the Pfaff map
/// x -> x/(x-1) into (0, 1). When 1 - gamma is an integer only the
/// non-degenerate series is used; the second solution then comes from
/// reduction of order anchored at `base`, with the resulting initial value
/// problem integrated by an adaptive Runge-Kutta method.
class NegativeAxisGaussPair {
 public:
  struct Value {
    long double f;
    long double df;
  };

  explicit NegativeAxisGaussPair(HGParams p, long double base = -0.5L);

  std::array<Value, 2> eval(long double x) const;
  const HGParams& params() const { return p_; }
  /// "series+series" or "series+reduction".
  std::string route() const { return two_series_ ? "series+series" : "series+reduction"; }

 private:
  Value first(long double x) const;
  Value second(long double x) const;
  Value series_solution(bool at_exponent_zero, long double x) const;

  HGParams p_;
  long double base_;
  bool two_series_;
  bool first_at_zero_;  // which exponent seeds the first solution
};

}  // namespace kzr
