#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "kzr/exactnum/field_scalar.hpp"

namespace kzr {

/// Univariate polynomial over Q(sqrt2, sqrt3); coefficient index = degree.
/// The zero polynomial has no coefficients and degree -1.
class Poly {
 public:
  Poly() = default;
  Poly(FieldScalar constant);  // NOLINT(google-explicit-constructor)
  Poly(long constant) : Poly(FieldScalar(constant)) {}  // NOLINT(google-explicit-constructor)
  explicit Poly(std::vector<FieldScalar> coefficients);

  /// The polynomial x.
  static Poly x();
  /// scale * x^degree.
  static Poly monomial(FieldScalar scale, int degree);

  const std::vector<FieldScalar>& coefficients() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  /// Coefficient of x^k (zero beyond the degree).
  FieldScalar coefficient(int k) const;
  const FieldScalar& leading() const;
  /// Lowest k with a nonzero coefficient (order of vanishing at 0).
  int valuation() const;
  bool has_rational_coefficients() const;

  Poly monic() const;
  Poly derivative() const;
  FieldScalar eval(const FieldScalar& x) const;
  template <class Real>
  Real eval_real(Real x) const {
    Real acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->to<Real>();
    return acc;
  }
  /// this(inner(x)).
  Poly compose(const Poly& inner) const;
  Poly pow(int exponent) const;

  /// Euclidean division over the field: *this = q * divisor + r, deg r < deg divisor.
  std::pair<Poly, Poly> divmod(const Poly& divisor) const;
  /// Pseudo-remainder lc(divisor)^(deg - deg divisor + 1) * this mod divisor.
  Poly pseudo_remainder(const Poly& divisor) const;

  std::string str(const std::string& var = "x") const;

  Poly operator-() const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);

  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(Poly lhs, const Poly& rhs) { return lhs *= rhs; }
  friend bool operator==(const Poly& lhs, const Poly& rhs) { return lhs.coeffs_ == rhs.coeffs_; }

 private:
  void trim();
  std::vector<FieldScalar> coeffs_;
};

/// Exact quotient; throws if the division leaves a remainder.
Poly exact_quotient(const Poly& numerator, const Poly& denominator);

/// Monic gcd computed with the subresultant polynomial remainder sequence.
/// gcd(0, 0) = 0.
Poly poly_gcd(const Poly& a, const Poly& b);

std::ostream& operator<<(std::ostream& os, const Poly& p);

inline bool is_zero(const Poly& p) { return p.is_zero(); }

}  // namespace kzr
