#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>
#include <type_traits>

namespace kzr {

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long numerator, long denominator);
  explicit Rational(mpq_class value);

  /// Parses "p", "-p" or "p/q" (whitespace around the slash is not allowed).
  static Rational parse(std::string_view text);
  /// Exact binary value of a finite double.
  static Rational from_double(double value);
  static Rational from_long_double(long double value);

  const mpq_class& gmp() const { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Rational abs() const;
  Rational inverse() const;
  Rational pow(long exponent) const;

  double to_double() const { return value_.get_d(); }
  long double to_long_double() const;
  template <class Real>
  Real to() const {
    if constexpr (std::is_same_v<Real, long double>) {
      return to_long_double();
    } else {
      return static_cast<Real>(to_double());
    }
  }

  /// Canonical "p/q" text; integers are rendered with denominator 1.
  std::string str() const;
  /// Short human form: "p" for integers, "p/q" otherwise.
  std::string pretty() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return lhs.value_ == rhs.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

/// Exact square root of a non-negative rational if it is itself rational.
bool rational_sqrt(const Rational& value, Rational& root);

}  // namespace kzr
