#include "kzr/hypergeom.hpp"

#include <functional>
#include <vector>

namespace kzr {

namespace {

RationalFunction v_power(long e) {
  const RationalFunction v = RationalFunction::variable();
  return e >= 0 ? v.pow(e) : v.inverse().pow(-e);
}

RationalFunction one_minus_v_power(long e) {
  const RationalFunction w = RationalFunction(1) - RationalFunction::variable();
  return e >= 0 ? w.pow(e) : w.inverse().pow(-e);
}

long to_long(const Rational& q) { return q.numerator().get_si(); }

enum class SeriesOutcome { polynomial, pole, too_long };

/// Coefficients of 2F1(a, b; c; v) while they are defined, up to the degree bound.
SeriesOutcome terminating_series(const Rational& a, const Rational& b, const Rational& c, long bound, Poly& out) {
  std::vector<FieldScalar> coeffs{FieldScalar(1)};
  Rational ck(1);
  for (long k = 0; k <= bound; ++k) {
    const Rational num = (a + k) * (b + k);
    const Rational den = (c + k) * Rational(k + 1);
    if (num.is_zero()) {
      out = Poly(std::move(coeffs));
      return SeriesOutcome::polynomial;
    }
    if (den.is_zero()) return SeriesOutcome::pole;
    ck = ck * num / den;
    coeffs.emplace_back(ck);
  }
  return SeriesOutcome::too_long;
}

/// Lowest-order Laurent coefficient at v = 0.
FieldScalar lowest_coefficient(const RationalFunction& f) {
  const Poly& n = f.numerator();
  const Poly& d = f.denominator();
  return n.coefficient(n.valuation()) / d.coefficient(d.valuation());
}

RationalFunction normalize_lowest(const RationalFunction& f) {
  return f * RationalFunction(lowest_coefficient(f).inverse());
}

Poly integrate(const Poly& p) {
  std::vector<FieldScalar> out{FieldScalar(0)};
  for (std::size_t k = 0; k < p.coefficients().size(); ++k) {
    out.push_back(p.coefficients()[k] * FieldScalar(Rational(1, static_cast<long>(k + 1))));
  }
  return Poly(std::move(out));
}

}  // namespace

HGParams kz_hg_params(const Rational& rho) { return {-rho, Rational(-3) * rho, Rational(1) - Rational(2) * rho}; }

RationalFunction gauss_residual(const RationalFunction& psi, const HGParams& p) {
  const RationalFunction v = RationalFunction::variable();
  const RationalFunction d1 = psi.derivative();
  const RationalFunction d2 = d1.derivative();
  const RationalFunction middle = RationalFunction(FieldScalar(p.gamma)) -
                                  RationalFunction(FieldScalar(p.alpha + p.beta + 1)) * v;
  return v * (RationalFunction(1) - v) * d2 + middle * d1 - RationalFunction(FieldScalar(p.alpha * p.beta)) * psi;
}

RationalFunction reflect_argument(const RationalFunction& f) { return f.compose(-RationalFunction::variable()); }

RationalFunction wronskian(const RationalFunction& psi1, const RationalFunction& psi2) {
  return psi1 * psi2.derivative() - psi2 * psi1.derivative();
}

std::array<Rational, 2> indicial_exponents(const HGParams& p) { return {Rational(0), Rational(1) - p.gamma}; }

std::optional<RationalFunction> rational_antiderivative(const RationalFunction& f) {
  const Poly& den = f.denominator();
  const auto [quotient, proper] = f.numerator().divmod(den);
  RationalFunction result(integrate(quotient));
  if (proper.is_zero()) return result;

  const Poly d1 = poly_gcd(den, den.derivative());
  const Poly d2 = exact_quotient(den, d1);
  const int m = d1.degree();
  const int n = d2.degree();
  if (m == 0) return std::nullopt;  // squarefree denominator: purely logarithmic
  // proper = A' d2 - A t + B d1, t = d2 d1' / d1, deg A < m, deg B < n
  const Poly t = exact_quotient(d2 * d1.derivative(), d1);
  const std::size_t size = static_cast<std::size_t>(m + n);
  std::vector<Poly> columns;
  for (int i = 0; i < m; ++i) {
    const Poly xi = Poly::monomial(1, i);
    const Poly dxi = i == 0 ? Poly() : Poly::monomial(FieldScalar(static_cast<long>(i)), i - 1);
    columns.push_back(dxi * d2 - xi * t);
  }
  for (int i = 0; i < n; ++i) columns.push_back(Poly::monomial(1, i) * d1);
  FieldMatrix system(size, size);
  FieldMatrix rhs(size, 1);
  for (std::size_t row = 0; row < size; ++row) {
    for (std::size_t col = 0; col < size; ++col) system(row, col) = columns[col].coefficient(static_cast<int>(row));
    rhs(row, 0) = proper.coefficient(static_cast<int>(row));
  }
  const FieldMatrix solution = system.inverse() * rhs;
  for (int i = 0; i < n; ++i) {
    if (!solution(static_cast<std::size_t>(m + i), 0).is_zero()) return std::nullopt;
  }
  std::vector<FieldScalar> a;
  for (int i = 0; i < m; ++i) a.push_back(solution(static_cast<std::size_t>(i), 0));
  return result + RationalFunction(Poly(std::move(a)), d1);
}

std::optional<RationalFunction> reduction_of_order(const RationalFunction& psi1, const HGParams& p) {
  for (const Rational* q : {&p.alpha, &p.beta, &p.gamma}) {
    if (!q->is_integer()) throw DomainError("reduction of order needs integer parameters");
  }
  if (psi1.is_zero()) throw DomainError("reduction of order from the zero solution");
  const RationalFunction wr = v_power(-to_long(p.gamma)) * one_minus_v_power(to_long(p.gamma - p.alpha - p.beta - 1));
  const auto integral = rational_antiderivative(wr / psi1.pow(2));
  if (!integral) return std::nullopt;
  return psi1 * *integral;
}

SolutionPair frobenius_rational_solutions(long rho) {
  if (rho == 0) throw DomainError("rho = 0 has no KZ hypergeometric reduction");
  const HGParams p = kz_hg_params(Rational(rho));
  const Rational& a = p.alpha;
  const Rational& b = p.beta;
  const Rational& c = p.gamma;
  const long bound = 6 * (rho < 0 ? -rho : rho) + 4;
  const long e_top = to_long(Rational(1) - c);   // exponent of v
  const long f_top = to_long(c - a - b);         // exponent of (1 - v)

  struct Form {
    std::string route;
    Rational a, b, c;
    long v_exp, w_exp;
  };
  const std::vector<Form> exponent0{{"F(a,b;c;v)", a, b, c, 0, 0},
                                    {"(1-v)^(c-a-b) F(c-a,c-b;c;v)", c - a, c - b, c, 0, f_top}};
  const std::vector<Form> exponent1{
      {"v^(1-c) F(a-c+1,b-c+1;2-c;v)", a - c + 1, b - c + 1, Rational(2) - c, e_top, 0},
      {"v^(1-c) (1-v)^(c-a-b) F(1-a,1-b;2-c;v)", Rational(1) - a, Rational(1) - b, Rational(2) - c, e_top, f_top}};

  bool hit_bound = false;
  auto first_valid = [&](const std::vector<Form>& forms, std::string& route) -> std::optional<RationalFunction> {
    for (const Form& form : forms) {
      Poly series;
      const SeriesOutcome outcome = terminating_series(form.a, form.b, form.c, bound, series);
      if (outcome == SeriesOutcome::too_long) hit_bound = true;
      if (outcome != SeriesOutcome::polynomial) continue;
      const RationalFunction psi = v_power(form.v_exp) * one_minus_v_power(form.w_exp) * RationalFunction(series);
      if (psi.is_zero() || !gauss_residual(psi, p).is_zero()) continue;
      route = form.route;
      return psi;
    }
    return std::nullopt;
  };

  SolutionPair pair;
  auto psi1 = first_valid(exponent0, pair.psi1_route);
  auto psi2 = first_valid(exponent1, pair.psi2_route);
  if (psi1 && !psi2) {
    psi2 = reduction_of_order(*psi1, p);
    pair.psi2_route = "reduction of order";
  } else if (psi2 && !psi1) {
    psi1 = reduction_of_order(*psi2, p);
    pair.psi1_route = "reduction of order";
  }
  if (!psi1 || !psi2) {
    throw NonTermination("no rational solution of the Gauss equation for rho = " + std::to_string(rho) +
                         (hit_bound ? " within degree " + std::to_string(bound) : ""));
  }
  pair.psi1 = normalize_lowest(*psi1);
  pair.psi2 = normalize_lowest(*psi2);
  if (!gauss_residual(pair.psi1, p).is_zero() || !gauss_residual(pair.psi2, p).is_zero()) {
    throw Error("internal: Frobenius solution failed its residual check");
  }
  if (wronskian(pair.psi1, pair.psi2).is_zero()) throw Error("internal: Frobenius solutions are dependent");
  return pair;
}

void to_json(json& j, const HGParams& p) { j = json{{"alpha", p.alpha}, {"beta", p.beta}, {"gamma", p.gamma}}; }

void to_json(json& j, const SolutionPair& pair) {
  j = json{{"psi1", pair.psi1}, {"psi2", pair.psi2}, {"psi1_route", pair.psi1_route}, {"psi2_route", pair.psi2_route}};
}

}  // namespace kzr

#include <boost/numeric/odeint.hpp>

namespace kzr {

namespace {

constexpr long double kSeriesTol = 1e-18L;

/// 2F1(a, b; c; x) for x < 0 through the Pfaff transformation.
long double gauss_negative(const Rational& a, const Rational& b, const Rational& c, long double x) {
  const long double s = x / (x - 1);
  return std::pow(1 - x, -a.to<long double>()) * hg_series_eval(HGParams{a, c - b, c}, s, kSeriesTol);
}

long double gauss_negative_derivative(const Rational& a, const Rational& b, const Rational& c, long double x) {
  if (a.is_zero() || b.is_zero()) return 0;
  return (a * b / c).to<long double>() * gauss_negative(a + 1, b + 1, c + 1, x);
}

}  // namespace

NegativeAxisGaussPair::NegativeAxisGaussPair(HGParams p, long double base) : p_(std::move(p)), base_(base) {
  const Rational one_minus_c = Rational(1) - p_.gamma;
  two_series_ = !one_minus_c.is_integer();
  first_at_zero_ = !(p_.gamma.is_integer() && p_.gamma.sign() <= 0);
  if (!(base_ < 0)) throw DomainError("reduction-of-order base point must be negative");
}

NegativeAxisGaussPair::Value NegativeAxisGaussPair::series_solution(bool at_exponent_zero, long double x) const {
  const Rational& a = p_.alpha;
  const Rational& b = p_.beta;
  const Rational& c = p_.gamma;
  if (at_exponent_zero) return {gauss_negative(a, b, c, x), gauss_negative_derivative(a, b, c, x)};
  const Rational a2 = a - c + 1;
  const Rational b2 = b - c + 1;
  const Rational c2 = Rational(2) - c;
  const long double e = (Rational(1) - c).to<long double>();
  const long double prefactor = std::pow(-x, e);
  const long double f = gauss_negative(a2, b2, c2, x);
  const long double df = gauss_negative_derivative(a2, b2, c2, x);
  return {prefactor * f, prefactor * (e / x * f + df)};
}

NegativeAxisGaussPair::Value NegativeAxisGaussPair::first(long double x) const {
  return series_solution(first_at_zero_, x);
}

NegativeAxisGaussPair::Value NegativeAxisGaussPair::second(long double x) const {
  if (two_series_) return series_solution(false, x);
  // g * integral_base^x W / g^2 solves the equation with h(base) = 0 and
  // h'(base) = W(base) / g(base); that initial value problem is integrated
  // directly, which stays valid across zeros of g.
  const long double a = p_.alpha.to<long double>();
  const long double b = p_.beta.to<long double>();
  const long double c = p_.gamma.to<long double>();
  const long double q = (p_.gamma - p_.alpha - p_.beta - 1).to<long double>();
  const long double g0 = first(base_).f;
  if (g0 == 0) throw DomainError("reduction-of-order base point is a zero of the first solution");
  std::array<long double, 2> state{0, std::pow(-base_, -c) * std::pow(1 - base_, q) / g0};
  if (x == base_) return {state[0], state[1]};
  auto rhs = [&](const std::array<long double, 2>& h, std::array<long double, 2>& dh, long double s) {
    dh[0] = h[1];
    dh[1] = (a * b * h[0] - (c - (a + b + 1) * s) * h[1]) / (s * (1 - s));
  };
  namespace odeint = boost::numeric::odeint;
  using Stepper = odeint::runge_kutta_dopri5<std::array<long double, 2>, long double>;
  const long double span = x - base_;
  odeint::integrate_adaptive(odeint::make_controlled<Stepper>(1e-17L, 1e-17L), rhs, state, base_, x, span / 64);
  return {state[0], state[1]};
}

std::array<NegativeAxisGaussPair::Value, 2> NegativeAxisGaussPair::eval(long double x) const {
  if (!(x < 0)) throw DomainError("negative-axis Gauss pair evaluated at x >= 0");
  return {first(x), second(x)};
}

}  // namespace kzr
