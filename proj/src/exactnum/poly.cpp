#include "kzr/exactnum/poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "kzr/errors.hpp"

namespace kzr {

Poly::Poly(FieldScalar constant) {
  if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

Poly::Poly(std::vector<FieldScalar> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Poly Poly::x() { return Poly(std::vector<FieldScalar>{0, 1}); }

Poly Poly::monomial(FieldScalar scale, int degree) {
  if (degree < 0) throw DomainError("negative monomial degree");
  std::vector<FieldScalar> c(static_cast<std::size_t>(degree) + 1);
  c.back() = std::move(scale);
  return Poly(std::move(c));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

FieldScalar Poly::coefficient(int k) const {
  if (k < 0 || k > degree()) return FieldScalar{};
  return coeffs_[static_cast<std::size_t>(k)];
}

const FieldScalar& Poly::leading() const {
  if (coeffs_.empty()) throw DomainError("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

int Poly::valuation() const {
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (!coeffs_[k].is_zero()) return static_cast<int>(k);
  }
  return -1;
}

bool Poly::has_rational_coefficients() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const FieldScalar& c) { return c.is_rational(); });
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  const FieldScalar inv = leading().inverse();
  Poly out = *this;
  for (auto& c : out.coeffs_) c *= inv;
  return out;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<FieldScalar> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    d[k - 1] = coeffs_[k] * FieldScalar(static_cast<long>(k));
  }
  return Poly(std::move(d));
}

FieldScalar Poly::eval(const FieldScalar& x) const {
  FieldScalar acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::compose(const Poly& inner) const {
  Poly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * inner + Poly(*it);
  return acc;
}

Poly Poly::pow(int exponent) const {
  if (exponent < 0) throw DomainError("negative polynomial power");
  Poly result(1);
  Poly base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
  if (divisor.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (degree() < divisor.degree()) return {Poly{}, *this};
  const FieldScalar inv_lead = divisor.leading().inverse();
  std::vector<FieldScalar> rem = coeffs_;
  std::vector<FieldScalar> quot(static_cast<std::size_t>(degree() - divisor.degree() + 1));
  const int dd = divisor.degree();
  for (int k = degree(); k >= dd; --k) {
    const FieldScalar& top = rem[static_cast<std::size_t>(k)];
    if (top.is_zero()) continue;
    const FieldScalar factor = top * inv_lead;
    quot[static_cast<std::size_t>(k - dd)] = factor;
    for (int j = 0; j <= dd; ++j) {
      rem[static_cast<std::size_t>(k - dd + j)] -= factor * divisor.coeffs_[static_cast<std::size_t>(j)];
    }
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly Poly::pseudo_remainder(const Poly& divisor) const {
  if (divisor.is_zero()) throw DivisionByZero("pseudo-remainder by zero polynomial");
  if (degree() < divisor.degree()) return *this;
  const int delta = degree() - divisor.degree();
  Poly scaled = *this;
  const FieldScalar factor = divisor.leading().pow(delta + 1);
  for (auto& c : scaled.coeffs_) c *= factor;
  return scaled.divmod(divisor).second;
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const FieldScalar& c = coeffs_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    if (!first) out << " + ";
    first = false;
    const bool unit = c == FieldScalar(1);
    if (k == 0 || !unit) out << "(" << c.str() << ")";
    if (k > 0) out << (unit ? "" : "*") << var;
    if (k > 1) out << "^" << k;
  }
  return out.str();
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<FieldScalar> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Poly exact_quotient(const Poly& numerator, const Poly& denominator) {
  auto [q, r] = numerator.divmod(denominator);
  if (!r.is_zero()) throw DomainError("polynomial division is not exact");
  return q;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  Poly f = a.degree() >= b.degree() ? a : b;
  Poly g = a.degree() >= b.degree() ? b : a;
  // Subresultant PRS: every division below is exact in the coefficient domain.
  FieldScalar scale_g(1);
  FieldScalar scale_h(1);
  while (true) {
    const int delta = f.degree() - g.degree();
    Poly r = f.pseudo_remainder(g);
    if (r.is_zero()) break;
    if (r.degree() == 0) return Poly(1);
    const FieldScalar divisor = scale_g * scale_h.pow(delta);
    r = exact_quotient(r, Poly(divisor));
    f = std::move(g);
    g = std::move(r);
    scale_g = f.leading();
    scale_h = delta == 0 ? scale_h : scale_g.pow(delta) * scale_h.pow(1 - delta);
  }
  return g.monic();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

}  // namespace kzr
