#pragma once

// Exact spectra of Q_k: characteristic polynomial over Q(sqrt2, sqrt3),
// rational-root extraction and the integer-spectrum verdict.

#include <optional>
#include <string>
#include <vector>

#include "kzr/exactnum/matrix.hpp"
#include "kzr/exactnum/poly.hpp"
#include "kzr/exactnum/serialize.hpp"

namespace kzr {

/// det(lambda I - A), monic, by Faddeev-LeVerrier.
Poly charpoly(const FieldMatrix& a);

/// Rational roots of p with multiplicity, ascending. p must be nonzero.
/// Non-rational coefficients are handled through the gcd of the four
/// Q-components of p, which every rational root annihilates.
std::vector<Rational> rational_roots(const Poly& p);

struct EigenReport {
  Poly charpoly;
  bool rational_coefficients = true;
  std::vector<Rational> linear_roots;  // with multiplicity
  Poly residual_factor;                // monic, charpoly / prod (x - r)
  /// Exact roots of a degree-2 residual, "(a±b√r)/L" or "(a±b·i√r)/L".
  std::optional<std::string> quadratic_roots;
  std::optional<Rational> discriminant;  // of the primitive integer quadratic
  bool integer_spectrum = false;
  std::vector<std::string> notes;

  friend bool operator==(const EigenReport&, const EigenReport&) = default;
};

EigenReport integer_eigenvalue_test(const FieldMatrix& q);

void to_json(json& j, const EigenReport& report);
void from_json(const json& j, EigenReport& report);

}  // namespace kzr
