#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "kzr/exactnum/rational.hpp"

namespace kzr {

/// Element a + b*sqrt(2) + c*sqrt(3) + d*sqrt(6) of the biquadratic field
/// Q(sqrt2, sqrt3). The basis is linearly independent over Q, so equality is
/// componentwise.
class FieldScalar {
 public:
  FieldScalar() = default;
  FieldScalar(long value) : a_(value) {}                // NOLINT(google-explicit-constructor)
  FieldScalar(Rational value) : a_(std::move(value)) {}  // NOLINT(google-explicit-constructor)
  FieldScalar(Rational a, Rational b, Rational c, Rational d)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

  static FieldScalar sqrt2() { return {0, 1, 0, 0}; }
  static FieldScalar sqrt3() { return {0, 0, 1, 0}; }
  static FieldScalar sqrt6() { return {0, 0, 0, 1}; }

  /// sqrt(q) when it lies in the field: q, q/2, q/3 or q/6 must be a rational
  /// square. Negative q never qualifies (the field is real).
  static std::optional<FieldScalar> sqrt_of(const Rational& q);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }
  const Rational& d() const { return d_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero() && c_.is_zero() && d_.is_zero(); }
  bool is_rational() const { return b_.is_zero() && c_.is_zero() && d_.is_zero(); }

  /// Galois conjugates: sqrt2 -> -sqrt2, sqrt3 -> -sqrt3 (sqrt6 follows).
  FieldScalar conjugate_sqrt2() const { return {a_, -b_, c_, -d_}; }
  FieldScalar conjugate_sqrt3() const { return {a_, b_, -c_, -d_}; }

  /// Product of all four conjugates; rational, zero iff the element is zero.
  Rational norm() const;
  FieldScalar inverse() const;
  FieldScalar pow(long exponent) const;

  double to_double() const;
  long double to_long_double() const;
  template <class Real>
  Real to() const {
    if constexpr (std::is_same_v<Real, long double>) {
      return to_long_double();
    } else {
      return static_cast<Real>(to_double());
    }
  }

  /// Human form, e.g. "1/2 - 3/4*sqrt3".
  std::string str() const;

  FieldScalar operator-() const { return {-a_, -b_, -c_, -d_}; }
  FieldScalar& operator+=(const FieldScalar& rhs);
  FieldScalar& operator-=(const FieldScalar& rhs);
  FieldScalar& operator*=(const FieldScalar& rhs);
  FieldScalar& operator/=(const FieldScalar& rhs);

  friend FieldScalar operator+(FieldScalar lhs, const FieldScalar& rhs) { return lhs += rhs; }
  friend FieldScalar operator-(FieldScalar lhs, const FieldScalar& rhs) { return lhs -= rhs; }
  friend FieldScalar operator*(FieldScalar lhs, const FieldScalar& rhs) { return lhs *= rhs; }
  friend FieldScalar operator/(FieldScalar lhs, const FieldScalar& rhs) { return lhs /= rhs; }
  friend bool operator==(const FieldScalar& lhs, const FieldScalar& rhs) {
    return lhs.a_ == rhs.a_ && lhs.b_ == rhs.b_ && lhs.c_ == rhs.c_ && lhs.d_ == rhs.d_;
  }

 private:
  Rational a_, b_, c_, d_;
};

FieldScalar field_mul(const FieldScalar& x, const FieldScalar& y);
FieldScalar field_inv(const FieldScalar& x);

std::ostream& operator<<(std::ostream& os, const FieldScalar& value);

inline bool is_zero(const FieldScalar& x) { return x.is_zero(); }
inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(double x) { return x == 0.0; }
inline bool is_zero(long double x) { return x == 0.0L; }

}  // namespace kzr
