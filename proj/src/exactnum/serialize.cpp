#include "kzr/exactnum/serialize.hpp"

namespace kzr {

void to_json(json& j, const Rational& q) { j = q.str(); }

void from_json(const json& j, Rational& q) {
  if (j.is_string()) {
    q = Rational::parse(j.get<std::string>());
  } else if (j.is_number_integer()) {
    q = Rational(j.get<long>());
  } else {
    throw ParseError("rational must be a \"p/q\" string");
  }
}

void to_json(json& j, const FieldScalar& x) {
  j = json{{"a", x.a()}, {"b", x.b()}, {"c", x.c()}, {"d", x.d()}};
}

void from_json(const json& j, FieldScalar& x) {
  if (!j.is_object()) throw ParseError("field element must be an object with keys a, b, c, d");
  auto part = [&](const char* key) {
    return j.contains(key) ? j.at(key).get<Rational>() : Rational(0);
  };
  x = FieldScalar(part("a"), part("b"), part("c"), part("d"));
}

void to_json(json& j, const Poly& p) {
  j = json::array();
  for (const auto& c : p.coefficients()) j.push_back(c);
}

void from_json(const json& j, Poly& p) {
  if (!j.is_array()) throw ParseError("polynomial must be a coefficient array");
  std::vector<FieldScalar> coeffs;
  for (const auto& c : j) coeffs.push_back(c.get<FieldScalar>());
  p = Poly(std::move(coeffs));
}

void to_json(json& j, const RationalFunction& f) {
  j = json{{"numerator", f.numerator()}, {"denominator", f.denominator()}};
}

void from_json(const json& j, RationalFunction& f) {
  f = RationalFunction(j.at("numerator").get<Poly>(), j.at("denominator").get<Poly>());
}

json exact_and_float(const FieldMatrix& m) {
  json floats = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(i, c).to_double());
    floats.push_back(std::move(row));
  }
  return json{{"exact", m}, {"float", std::move(floats)}};
}

}  // namespace kzr
