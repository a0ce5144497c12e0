#include "kzr/eigen.hpp"

#include <algorithm>

#include "kzr/errors.hpp"

namespace kzr {

namespace {

Poly component(const Poly& p, int which) {
  std::vector<FieldScalar> out;
  for (const FieldScalar& c : p.coefficients()) {
    const Rational* parts[] = {&c.a(), &c.b(), &c.c(), &c.d()};
    out.emplace_back(*parts[which]);
  }
  return Poly(std::move(out));
}

/// Primitive integer multiple of a nonzero polynomial with rational coefficients.
std::vector<mpz_class> integer_scaled(const Poly& p) {
  mpz_class den = 1;
  for (const FieldScalar& c : p.coefficients()) den = lcm(den, c.a().denominator());
  std::vector<mpz_class> out;
  mpz_class content = 0;
  for (const FieldScalar& c : p.coefficients()) {
    const mpq_class scaled = c.a().gmp() * mpq_class(den);
    out.push_back(scaled.get_num());
    content = gcd(content, scaled.get_num());
  }
  if (p.leading().a().sign() < 0) content = -content;
  for (mpz_class& c : out) c /= content;
  return out;
}

std::vector<mpz_class> positive_divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> small;
  std::vector<mpz_class> large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

/// n = s^2 r with r squarefree (n > 0).
std::pair<mpz_class, mpz_class> square_part(mpz_class n) {
  mpz_class s = 1;
  for (mpz_class f = 2; f * f <= n; ++f) {
    while (n % (f * f) == 0) {
      n /= f * f;
      s *= f;
    }
  }
  return {s, n};
}

bool vanishes_at(const std::vector<mpz_class>& coeffs, const mpz_class& p, const mpz_class& q) {
  mpz_class acc = 0;
  mpz_class qpow = 1;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * p + *it * qpow;
    qpow *= q;
  }
  return acc == 0;
}

Poly linear(const Rational& root) { return Poly(std::vector<FieldScalar>{FieldScalar(-root), FieldScalar(1)}); }

}  // namespace

Poly charpoly(const FieldMatrix& a) {
  if (a.rows() != a.cols()) throw ShapeMismatch("characteristic polynomial of a " + a.shape() + " matrix");
  const std::size_t n = a.rows();
  const FieldMatrix id = FieldMatrix::identity(n);
  std::vector<FieldScalar> c(n + 1);
  c[n] = 1;
  FieldMatrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m + id * c[n - k + 1];
    c[n - k] = -(a * m).trace() * FieldScalar(Rational(1, static_cast<long>(k)));
  }
  return Poly(std::move(c));
}

std::vector<Rational> rational_roots(const Poly& p) {
  if (p.is_zero()) throw DomainError("rational roots of the zero polynomial");
  Poly rational = component(p, 0);
  for (int which = 1; which < 4; ++which) rational = poly_gcd(rational, component(p, which));
  std::vector<Rational> roots;
  if (rational.is_constant()) return roots;

  const int zeros = rational.valuation();
  roots.insert(roots.end(), static_cast<std::size_t>(zeros), Rational(0));
  if (zeros > 0) {
    const auto& c = rational.coefficients();
    rational = Poly(std::vector<FieldScalar>(c.begin() + zeros, c.end()));
  }
  while (!rational.is_constant()) {
    const std::vector<mpz_class> coeffs = integer_scaled(rational);
    bool found = false;
    for (const mpz_class& num : positive_divisors(coeffs.front())) {
      for (const mpz_class& den : positive_divisors(coeffs.back())) {
        if (gcd(num, den) != 1) continue;
        for (const mpz_class& signed_num : {mpz_class(num), mpz_class(-num)}) {
          if (!vanishes_at(coeffs, signed_num, den)) continue;
          const Rational root(mpq_class(signed_num, den));
          roots.push_back(root);
          rational = exact_quotient(rational, linear(root));
          found = true;
          break;
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) break;
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

EigenReport integer_eigenvalue_test(const FieldMatrix& q) {
  EigenReport report;
  report.charpoly = charpoly(q);
  report.rational_coefficients = report.charpoly.has_rational_coefficients();
  report.linear_roots = rational_roots(report.charpoly);
  Poly residual = report.charpoly;
  for (const Rational& r : report.linear_roots) residual = exact_quotient(residual, linear(r));
  report.residual_factor = residual.monic();

  if (!report.rational_coefficients) {
    report.notes.push_back("characteristic polynomial has non-rational coefficients; roots of the residual factor are not rational");
  } else if (residual.degree() == 2) {
    const std::vector<mpz_class> abc = integer_scaled(residual);  // c0, c1, c2
    const mpz_class& a = abc[2];
    const mpz_class& b = abc[1];
    const mpz_class& c = abc[0];
    const mpz_class disc = b * b - 4 * a * c;
    report.discriminant = Rational(mpq_class(disc));
    const auto [s, r] = square_part(abs(disc));
    const mpz_class g = gcd(gcd(b, s), 2 * a);
    const mpz_class centre = -b / g;
    const mpz_class scale = s / g;
    const mpz_class den = 2 * a / g;
    std::string text = "(";
    if (centre != 0) text += centre.get_str();
    text += "±";
    if (scale != 1) text += scale.get_str();
    if (disc < 0) text += "i";
    text += "√" + r.get_str() + ")";
    if (den != 1) text += "/" + den.get_str();
    report.quadratic_roots = text;
  }
  if (residual.degree() > 0 && report.rational_coefficients) {
    report.notes.push_back("residual factor of degree " + std::to_string(residual.degree()) +
                           " has no rational roots");
  }
  report.integer_spectrum =
      residual.degree() == 0 &&
      std::all_of(report.linear_roots.begin(), report.linear_roots.end(), [](const Rational& r) { return r.is_integer(); });
  return report;
}

void to_json(json& j, const EigenReport& report) {
  std::vector<std::string> roots;
  for (const Rational& r : report.linear_roots) roots.push_back(r.pretty());
  j = json{{"charpoly", report.charpoly},
           {"linear_roots", roots},
           {"residual_factor", report.residual_factor},
           {"integer_spectrum", report.integer_spectrum},
           {"rational_coefficients", report.rational_coefficients}};
  if (report.quadratic_roots) j["quadratic_roots"] = *report.quadratic_roots;
  if (report.discriminant) j["discriminant"] = report.discriminant->pretty();
  j["notes"] = report.notes;
}

void from_json(const json& j, EigenReport& report) {
  report = EigenReport{};
  report.charpoly = j.at("charpoly").get<Poly>();
  for (const auto& r : j.at("linear_roots")) report.linear_roots.push_back(Rational::parse(r.get<std::string>()));
  report.residual_factor = j.at("residual_factor").get<Poly>();
  report.integer_spectrum = j.at("integer_spectrum").get<bool>();
  report.rational_coefficients = j.at("rational_coefficients").get<bool>();
  if (j.contains("quadratic_roots")) report.quadratic_roots = j.at("quadratic_roots").get<std::string>();
  if (j.contains("discriminant")) report.discriminant = Rational::parse(j.at("discriminant").get<std::string>());
  report.notes = j.at("notes").get<std::vector<std::string>>();
}

}  // namespace kzr
