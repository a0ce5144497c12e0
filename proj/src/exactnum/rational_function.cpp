#include "kzr/exactnum/rational_function.hpp"

#include <ostream>

#include "kzr/errors.hpp"

namespace kzr {

RationalFunction::RationalFunction(Poly numerator, Poly denominator) {
  if (denominator.is_zero()) throw DivisionByZero("rational function with zero denominator");
  if (numerator.is_zero()) {
    den_ = Poly(1);
    return;
  }
  const Poly g = poly_gcd(numerator, denominator);
  if (g.degree() > 0) {
    numerator = exact_quotient(numerator, g);
    denominator = exact_quotient(denominator, g);
  }
  const FieldScalar inv_lead = denominator.leading().inverse();
  num_ = numerator * Poly(inv_lead);
  den_ = denominator * Poly(inv_lead);
}

RationalFunction RationalFunction::derivative() const {
  // (n/d)' = (n' d - n d') / d^2
  return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

FieldScalar RationalFunction::eval(const FieldScalar& x) const {
  const FieldScalar d = den_.eval(x);
  if (d.is_zero()) throw PoleError("pole of rational function at x = " + x.str());
  return num_.eval(x) / d;
}

RationalFunction RationalFunction::compose(const RationalFunction& inner) const {
  if (num_.is_zero()) return {};
  const Poly& p = inner.num_;
  const Poly& q = inner.den_;
  auto homogenize = [&](const Poly& f) {
    Poly acc;
    const int deg = f.degree();
    Poly p_power(1);
    for (int i = 0; i <= deg; ++i) {
      const FieldScalar& c = f.coefficients()[static_cast<std::size_t>(i)];
      if (!c.is_zero()) acc += Poly(c) * p_power * q.pow(deg - i);
      p_power *= p;
    }
    return acc;
  };
  Poly top = homogenize(num_);
  Poly bottom = homogenize(den_);
  if (bottom.is_zero()) {
    throw PoleError("composition lands on a pole identically: " + str() + " at " + inner.str());
  }
  const int gap = den_.degree() - num_.degree();
  if (gap >= 0) {
    top *= q.pow(gap);
  } else {
    bottom *= q.pow(-gap);
  }
  return RationalFunction(std::move(top), std::move(bottom));
}

RationalFunction RationalFunction::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  const int e = static_cast<int>(exponent);
  return RationalFunction(Raw{}, num_.pow(e), den_.pow(e));
}

RationalFunction RationalFunction::inverse() const {
  if (num_.is_zero()) throw DivisionByZero("inverse of the zero rational function");
  return RationalFunction(den_, num_);
}

std::string RationalFunction::str(const std::string& var) const {
  if (den_ == Poly(1)) return num_.str(var);
  return "(" + num_.str(var) + ") / (" + den_.str(var) + ")";
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(Raw{}, -num_, den_); }

RationalFunction& RationalFunction::operator+=(const RationalFunction& rhs) {
  if (den_ == rhs.den_) {
    *this = RationalFunction(num_ + rhs.num_, den_);
  } else {
    *this = RationalFunction(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
  }
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& rhs) { return *this += -rhs; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& rhs) {
  if (num_.is_zero() || rhs.num_.is_zero()) {
    *this = RationalFunction();
    return *this;
  }
  if (is_constant() || rhs.is_constant()) {
    // Scaling by a constant keeps the pair coprime and the denominator monic.
    const RationalFunction& poly_side = is_constant() ? rhs : *this;
    const FieldScalar scale = (is_constant() ? *this : rhs).num_.leading();
    *this = RationalFunction(Raw{}, poly_side.num_ * Poly(scale), poly_side.den_);
    return *this;
  }
  *this = RationalFunction(num_ * rhs.num_, den_ * rhs.den_);
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& rhs) { return *this *= rhs.inverse(); }

std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << f.str(); }

}  // namespace kzr
