#include "kzr/exactnum/field_scalar.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include "kzr/errors.hpp"

namespace kzr {

std::optional<FieldScalar> FieldScalar::sqrt_of(const Rational& q) {
  if (q.is_zero()) return FieldScalar{};
  if (q.sign() < 0) return std::nullopt;
  Rational root;
  if (rational_sqrt(q, root)) return FieldScalar(root);
  if (rational_sqrt(q / 2, root)) return FieldScalar(0, root, 0, 0);
  if (rational_sqrt(q / 3, root)) return FieldScalar(0, 0, root, 0);
  if (rational_sqrt(q / 6, root)) return FieldScalar(0, 0, 0, root);
  return std::nullopt;
}

FieldScalar& FieldScalar::operator+=(const FieldScalar& rhs) {
  a_ += rhs.a_;
  b_ += rhs.b_;
  c_ += rhs.c_;
  d_ += rhs.d_;
  return *this;
}

FieldScalar& FieldScalar::operator-=(const FieldScalar& rhs) {
  a_ -= rhs.a_;
  b_ -= rhs.b_;
  c_ -= rhs.c_;
  d_ -= rhs.d_;
  return *this;
}

FieldScalar& FieldScalar::operator*=(const FieldScalar& rhs) {
  // sqrt2*sqrt3 = sqrt6, sqrt2*sqrt6 = 2 sqrt3, sqrt3*sqrt6 = 3 sqrt2, sqrt6^2 = 6.
  const Rational a = a_ * rhs.a_ + 2 * (b_ * rhs.b_) + 3 * (c_ * rhs.c_) + 6 * (d_ * rhs.d_);
  const Rational b = a_ * rhs.b_ + b_ * rhs.a_ + 3 * (c_ * rhs.d_ + d_ * rhs.c_);
  const Rational c = a_ * rhs.c_ + c_ * rhs.a_ + 2 * (b_ * rhs.d_ + d_ * rhs.b_);
  const Rational d = a_ * rhs.d_ + d_ * rhs.a_ + b_ * rhs.c_ + c_ * rhs.b_;
  a_ = a;
  b_ = b;
  c_ = c;
  d_ = d;
  return *this;
}

FieldScalar& FieldScalar::operator/=(const FieldScalar& rhs) { return *this *= rhs.inverse(); }

Rational FieldScalar::norm() const {
  const FieldScalar half = *this * conjugate_sqrt2();  // lies in Q(sqrt3)
  return (half * half.conjugate_sqrt3()).a();
}

FieldScalar FieldScalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero field element");
  const FieldScalar sigma2 = conjugate_sqrt2();
  const FieldScalar half = *this * sigma2;
  const FieldScalar half_conj = half.conjugate_sqrt3();
  const Rational n = (half * half_conj).a();
  FieldScalar result = sigma2 * half_conj;
  result *= FieldScalar(n.inverse());
  return result;
}

FieldScalar FieldScalar::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  FieldScalar result(1);
  FieldScalar base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

double FieldScalar::to_double() const {
  return a_.to_double() + b_.to_double() * std::sqrt(2.0) + c_.to_double() * std::sqrt(3.0) +
         d_.to_double() * std::sqrt(6.0);
}

long double FieldScalar::to_long_double() const {
  return a_.to_long_double() + b_.to_long_double() * std::sqrt(2.0L) +
         c_.to_long_double() * std::sqrt(3.0L) + d_.to_long_double() * std::sqrt(6.0L);
}

std::string FieldScalar::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  auto term = [&](const Rational& coeff, const char* unit) {
    if (coeff.is_zero()) return;
    Rational mag = coeff.abs();
    if (first) {
      if (coeff.sign() < 0) out << "-";
    } else {
      out << (coeff.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (unit == nullptr) {
      out << mag.pretty();
    } else if (mag == Rational(1)) {
      out << unit;
    } else {
      out << mag.pretty() << "*" << unit;
    }
  };
  term(a_, nullptr);
  term(b_, "sqrt2");
  term(c_, "sqrt3");
  term(d_, "sqrt6");
  return out.str();
}

FieldScalar field_mul(const FieldScalar& x, const FieldScalar& y) { return x * y; }

FieldScalar field_inv(const FieldScalar& x) { return x.inverse(); }

std::ostream& operator<<(std::ostream& os, const FieldScalar& value) { return os << value.str(); }

}  // namespace kzr
