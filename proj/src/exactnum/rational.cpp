#include "kzr/exactnum/rational.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

#include "kzr/errors.hpp"

namespace kzr {

namespace {

bool valid_integer_text(std::string_view text) {
  if (text.empty()) return false;
  std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (i == text.size()) return false;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view text) {
  if (!valid_integer_text(text)) {
    throw ParseError("not an integer: '" + std::string(text) + "'");
  }
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return mpz_class(digits, 10);
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw DivisionByZero("rational with zero denominator");
  value_ = mpq_class(numerator, 1) / mpq_class(denominator, 1);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(mpq_class(parse_integer(text)));
  }
  mpz_class num = parse_integer(text.substr(0, slash));
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
    throw ParseError("denominator must be unsigned: '" + std::string(text) + "'");
  }
  mpz_class den = parse_integer(den_text);
  if (den == 0) throw DivisionByZero("rational with zero denominator: '" + std::string(text) + "'");
  return Rational(mpq_class(num, den));
}

Rational Rational::from_double(double value) {
  if (!std::isfinite(value)) throw DomainError("non-finite value cannot be made rational");
  return Rational(mpq_class(value));
}

Rational Rational::from_long_double(long double value) {
  if (!std::isfinite(value)) throw DomainError("non-finite value cannot be made rational");
  int exponent = 0;
  long double mantissa = std::frexp(value, &exponent);
  // 64 mantissa bits cover the x87 extended format.
  const auto scaled = static_cast<long long>(std::ldexp(mantissa, 63));
  mpz_class m(std::to_string(scaled), 10);
  mpq_class q(m);
  exponent -= 63;
  if (exponent >= 0) {
    q *= mpq_class(mpz_class(1) << exponent);
  } else {
    q /= mpq_class(mpz_class(1) << -exponent);
  }
  return Rational(q);
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero rational");
  return Rational(mpq_class(1) / value_);
}

Rational Rational::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(mpq_class(num, den));
}

long double Rational::to_long_double() const {
  if (is_zero()) return 0.0L;
  mpz_class num = ::abs(value_.get_num());
  mpz_class den = value_.get_den();
  const long shift = 72 - static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2)) +
                     static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2));
  mpz_class scaled = shift >= 0 ? mpz_class((num << shift) / den) : mpz_class(num / (den << -shift));
  const mpz_class hi = scaled >> 36;
  const mpz_class lo = scaled - (hi << 36);
  long double result = std::ldexp(static_cast<long double>(hi.get_ui()), 36) +
                       static_cast<long double>(lo.get_ui());
  result = std::ldexp(result, static_cast<int>(-shift));
  return sign() < 0 ? -result : result;
}

std::string Rational::str() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::pretty() const {
  return is_integer() ? value_.get_num().get_str() : str();
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DivisionByZero("rational division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.pretty(); }

bool rational_sqrt(const Rational& value, Rational& root) {
  if (value.sign() < 0) return false;
  const mpz_class num = value.numerator();
  const mpz_class den = value.denominator();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    return false;
  }
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  root = Rational(mpq_class(rn, rd));
  return true;
}

}  // namespace kzr
