#pragma once

#include <iosfwd>
#include <string>

#include "kzr/errors.hpp"
#include "kzr/exactnum/matrix.hpp"
#include "kzr/exactnum/poly.hpp"

namespace kzr {

/// numerator / denominator over Q(sqrt2, sqrt3), normalized on construction:
/// the two polynomials are coprime and the denominator is monic.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(long constant) : num_(constant), den_(1) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(FieldScalar constant) : num_(std::move(constant)), den_(1) {}  // NOLINT
  RationalFunction(Poly numerator) : num_(std::move(numerator)), den_(1) {}  // NOLINT
  RationalFunction(Poly numerator, Poly denominator);

  /// The identity function x.
  static RationalFunction variable() { return RationalFunction(Poly::x()); }

  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  /// Applies the normalization again; a normalized value is a fixed point.
  RationalFunction normalized() const { return RationalFunction(num_, den_); }

  RationalFunction derivative() const;
  /// Value at a point; PoleError names the point when the denominator vanishes.
  FieldScalar eval(const FieldScalar& x) const;
  template <class Real>
  Real eval_real(Real x) const {
    const Real d = den_.eval_real(x);
    if (d == 0) throw PoleError("pole of rational function at x = " + std::to_string(static_cast<double>(x)));
    return num_.eval_real(x) / d;
  }
  /// this(inner(x)).
  RationalFunction compose(const RationalFunction& inner) const;
  RationalFunction pow(long exponent) const;
  RationalFunction inverse() const;

  std::string str(const std::string& var = "x") const;

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& rhs);
  RationalFunction& operator-=(const RationalFunction& rhs);
  RationalFunction& operator*=(const RationalFunction& rhs);
  RationalFunction& operator/=(const RationalFunction& rhs);

  friend RationalFunction operator+(RationalFunction lhs, const RationalFunction& rhs) { return lhs += rhs; }
  friend RationalFunction operator-(RationalFunction lhs, const RationalFunction& rhs) { return lhs -= rhs; }
  friend RationalFunction operator*(RationalFunction lhs, const RationalFunction& rhs) { return lhs *= rhs; }
  friend RationalFunction operator/(RationalFunction lhs, const RationalFunction& rhs) { return lhs /= rhs; }
  friend bool operator==(const RationalFunction& lhs, const RationalFunction& rhs) {
    return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
  }

 private:
  struct Raw {};
  RationalFunction(Raw, Poly numerator, Poly denominator)
      : num_(std::move(numerator)), den_(std::move(denominator)) {}

  Poly num_;
  Poly den_;
};

using RationalFunctionMatrix = Matrix<RationalFunction>;

inline bool is_zero(const RationalFunction& f) { return f.is_zero(); }

/// f evaluated at a point / composed with another function. These two
/// overloads let the solution assembly run over points and over lines alike.
inline FieldScalar substitute(const RationalFunction& f, const FieldScalar& x) { return f.eval(x); }
inline RationalFunction substitute(const RationalFunction& f, const RationalFunction& x) {
  return f.compose(x);
}
template <class Real>
Real substitute(const RationalFunction& f, Real x) {
  return f.eval_real(x);
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& f);

}  // namespace kzr
