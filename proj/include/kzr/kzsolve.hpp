#pragma once

// Closed-form fundamental solutions of the n = 4 KZ system for the
// two-dimensional representation: W1 (y-equation), W2 (z-equation on the
// edge y = 0) and the composition W(y,z) = W1(y,z) W1(0,z)^-1 W2(z).
// Here y = u2 and z = u3.

#include <functional>
#include <memory>
#include <string>

#include "kzr/exactnum/scalar.hpp"
#include "kzr/hypergeom.hpp"

namespace kzr {

FieldMatrix basis_w1();  // col[sqrt3, 1]
FieldMatrix basis_w2();  // col[1, sqrt3]
FieldMatrix basis_v1();  // col[0, 2]
FieldMatrix basis_v2();  // col[1, -sqrt3]

/// The variable of the Gauss solution inside Y: t = (y+1)(z+1)/z.
template <class T>
T gauss_argument(const T& y, const T& z) {
  const T one(1);
  if (is_zero(z)) throw PoleError("pole: u3 vanishes");
  return (y + one) * (z + one) / z;
}

namespace detail {

inline void require_nonzero_rho(const Rational& rho) {
  if (rho.is_zero()) throw DomainError("rho = 0: the w2/v2 coefficient divides by rho");
}

inline long integer_rho(const Rational& rho) {
  if (!rho.is_integer()) throw DomainError("exact assembly needs an integer rho, got " + rho.pretty());
  return rho.numerator().get_si();
}

}  // namespace detail

/// Y = (1+y)^-rho (1+y+yz)^-rho [psi(t) w1 - t/(sqrt3 rho) psi'(t) w2].
/// psi solves the Gauss equation in its own variable; integer rho.
template <class T>
Matrix<T> assemble_Y(const RationalFunction& psi, const Rational& rho, const T& y, const T& z) {
  detail::require_nonzero_rho(rho);
  const long r = detail::integer_rho(rho);
  const T one(1);
  const T t = gauss_argument(y, z);
  const T a = one + y;
  const T b = one + y + y * z;
  if (is_zero(a)) throw PoleError("pole: 1 + u2 vanishes");
  if (is_zero(b)) throw PoleError("pole: 1 + u2 + u2 u3 vanishes");
  const T pref = int_pow(a, -r) * int_pow(b, -r);
  const T value = substitute(psi, t);
  const T slope = substitute(psi.derivative(), t);
  const T coeff = t / from_field<T>(FieldScalar::sqrt3() * FieldScalar(rho)) * slope;
  return (lift<T>(basis_w1()) * value - lift<T>(basis_w2()) * coeff) * pref;
}

/// U = [psi(-z) v1 - z/(sqrt3 rho) psi'(-z) v2] z^-rho (1+z)^-rho; integer rho.
template <class T>
Matrix<T> assemble_U(const RationalFunction& psi, const Rational& rho, const T& z) {
  detail::require_nonzero_rho(rho);
  const long r = detail::integer_rho(rho);
  const T one(1);
  if (is_zero(z)) throw PoleError("pole: u3 vanishes");
  if (is_zero(one + z)) throw PoleError("pole: 1 + u3 vanishes");
  const RationalFunction phi = reflect_argument(psi);
  // psi'(-z) = -phi'(z)
  const T value = substitute(phi, z);
  const T slope = -substitute(phi.derivative(), z);
  const T pref = int_pow(z, -r) * int_pow(one + z, -r);
  const T coeff = z / from_field<T>(FieldScalar::sqrt3() * FieldScalar(rho)) * slope;
  return (lift<T>(basis_v1()) * value - lift<T>(basis_v2()) * coeff) * pref;
}

enum class FrameKind { exact, numeric };
enum class Provenance { W1, W2, composed, explicit_form, custom };
/// The free variable of a line restriction.
enum class Axis { y, z };

std::string to_string(FrameKind kind);
std::string to_string(Provenance provenance);

/// A 2x2 matrix solution evaluated on demand. Exact frames evaluate at
/// points of Q(sqrt2, sqrt3) and restrict to lines as univariate rational
/// functions; every frame evaluates in floating point.
class SolutionFrame {
 public:
  using ExactAt = std::function<FieldMatrix(const FieldScalar&, const FieldScalar&)>;
  using ExactLine = std::function<RationalFunctionMatrix(Axis, const FieldScalar&)>;
  using DoubleAt = std::function<Matrix<double>(double, double)>;
  using LongAt = std::function<Matrix<long double>(long double, long double)>;

  FrameKind kind = FrameKind::numeric;
  Provenance provenance = Provenance::custom;
  Rational rho;
  std::string label;

  ExactAt exact_at;
  ExactLine exact_line;
  DoubleAt double_at;
  LongAt long_at;

  bool is_exact() const { return kind == FrameKind::exact; }
  /// Exact value at (y, z); DomainError for numeric frames.
  FieldMatrix at(const FieldScalar& y, const FieldScalar& z) const;
  /// Restriction to {z = fixed} (free Axis::y) or {y = fixed} (free Axis::z).
  RationalFunctionMatrix along(Axis free, const FieldScalar& fixed) const;

  template <class Real>
  Matrix<Real> numeric(Real y, Real z) const {
    if constexpr (std::is_same_v<Real, long double>) {
      return long_at(y, z);
    } else {
      return double_at(y, z);
    }
  }
};

/// Exact frames for integer rho != 0; numeric frames for any rational rho != 0
/// on the real domain y > -1, z > 0.
SolutionFrame fundamental_W1(const Rational& rho, FrameKind kind);
SolutionFrame fundamental_W2(const Rational& rho, FrameKind kind);
SolutionFrame compose_W(const Rational& rho, FrameKind kind);

/// W1 (y, z) W1(0, z)^-1 W2(z) for arbitrary component frames of the same kind.
SolutionFrame compose_frames(const SolutionFrame& w1, const SolutionFrame& w2);

/// The displayed closed forms for rho = -1.
template <class T>
Matrix<T> explicit_Y1(const T& y, const T& z) {
  const T one(1);
  const T b = one + y + y * z;
  const T s3 = from_field<T>(FieldScalar::sqrt3());
  if (is_zero(b)) throw PoleError("pole: 1 + u2 + u2 u3 vanishes");
  return lift<T>(basis_w1()) * (-(z * (y + one))) + lift<T>(basis_w2()) * (z * (z + one) * (y + one) * (y + one) / (s3 * b));
}

template <class T>
Matrix<T> explicit_Y2(const T& y, const T& z) {
  const T one(1);
  const T b = one + y + y * z;
  const T s3 = from_field<T>(FieldScalar::sqrt3());
  const T zp = z + one;
  if (is_zero(zp)) throw PoleError("pole: 1 + u3 vanishes");
  if (is_zero(y + one)) throw PoleError("pole: 1 + u2 vanishes");
  const T first = z * z * b / (zp * zp * (y + one)) + z * b / zp;
  const T second = T(2) * z * z * b / (s3 * zp * zp * (y + one)) + z * b / (s3 * zp);
  return lift<T>(basis_w1()) * first - lift<T>(basis_w2()) * second;
}

template <class T>
Matrix<T> explicit_U1(const T& z) {
  const T one(1);
  const T s3 = from_field<T>(FieldScalar::sqrt3());
  if (is_zero(one + z)) throw PoleError("pole: 1 + u3 vanishes");
  return lift<T>(basis_v1()) * z + lift<T>(basis_v2()) * (z * z / (s3 * (one + z)));
}

template <class T>
Matrix<T> explicit_U2(const T& z) {
  const T one(1);
  const T s3 = from_field<T>(FieldScalar::sqrt3());
  if (is_zero(z)) throw PoleError("pole: u3 vanishes");
  return lift<T>(basis_v1()) * ((one - z * z) / z) - lift<T>(basis_v2()) * ((z - T(2)) * (z + one) / (s3 * z));
}

/// Frames [Y1, Y2] and [U1, U2] built from the closed forms.
SolutionFrame explicit_W1_rho_minus1();
SolutionFrame explicit_W2_rho_minus1();

/// Column concatenation of two column vectors.
template <class T>
Matrix<T> join_columns(const Matrix<T>& a, const Matrix<T>& b) {
  return Matrix<T>::from_columns({a, b});
}

}  // namespace kzr
