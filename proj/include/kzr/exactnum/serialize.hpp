#pragma once

// JSON encoding of the exact types. Rationals are "p/q" strings, field
// elements are {"a","b","c","d"} objects, matrices nested row arrays and
// polynomials ascending coefficient arrays.

#include <json.hpp>

#include "kzr/exactnum/field_scalar.hpp"
#include "kzr/exactnum/matrix.hpp"
#include "kzr/exactnum/poly.hpp"
#include "kzr/exactnum/rational.hpp"
#include "kzr/exactnum/rational_function.hpp"

namespace kzr {

using json = nlohmann::ordered_json;

void to_json(json& j, const Rational& q);
void from_json(const json& j, Rational& q);

void to_json(json& j, const FieldScalar& x);
void from_json(const json& j, FieldScalar& x);

void to_json(json& j, const Poly& p);
void from_json(const json& j, Poly& p);

void to_json(json& j, const RationalFunction& f);
void from_json(const json& j, RationalFunction& f);

template <class T>
void to_json(json& j, const Matrix<T>& m) {
  j = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(i, c));
    j.push_back(std::move(row));
  }
}

template <class T>
void from_json(const json& j, Matrix<T>& m) {
  if (!j.is_array()) throw ParseError("matrix must be a JSON array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows == 0 ? 0 : j.at(0).size();
  std::vector<T> entries;
  entries.reserve(rows * cols);
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != cols) throw ParseError("ragged matrix rows in JSON");
    for (const auto& e : row) entries.push_back(e.template get<T>());
  }
  m = Matrix<T>(rows, cols, std::move(entries));
}

/// Matrix as {"exact": [...], "float": [...]} for reports that carry both.
json exact_and_float(const FieldMatrix& m);

}  // namespace kzr
