#pragma once

// Transposition representations of the symmetric group S_n: the built-in
// S4 / S5 data and a Young-orthogonal-form generator.

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "kzr/exactnum/matrix.hpp"
#include "kzr/exactnum/serialize.hpp"
#include "kzr/report.hpp"

namespace kzr {

/// Transposition (i j) of S_n with 1-based i < j.
struct Transposition {
  int i = 1;
  int j = 2;

  /// Orders the pair; throws DomainError for i == j or non-positive indices.
  static Transposition of(int a, int b);
  std::string key() const;  // "i,j"
  static Transposition parse(const std::string& key);

  friend auto operator<=>(const Transposition&, const Transposition&) = default;
};

/// Weakly decreasing positive parts.
class Partition {
 public:
  explicit Partition(std::vector<int> parts);
  static Partition parse(const std::string& text);  // "3,1"

  const std::vector<int>& parts() const { return parts_; }
  int size() const;
  std::string str() const;

 private:
  std::vector<int> parts_;
};

/// A filling of a Young diagram with 1..n, rows and columns increasing.
struct StandardTableau {
  std::vector<int> row;  // row[k-1] = 0-based row of letter k
  std::vector<int> col;  // col[k-1] = 0-based column of letter k

  int content(int letter) const { return col[letter - 1] - row[letter - 1]; }
  friend bool operator==(const StandardTableau&, const StandardTableau&) = default;
};

/// Standard tableaux of shape `shape`, in last-letter order: compare the rows
/// of n, n-1, ..., 1 in turn; the tableau holding the letter lower wins.
std::vector<StandardTableau> standard_tableaux(const Partition& shape);

/// Map from transpositions of S_n to dim x dim symmetric involutions. A
/// representation holding all n(n-1)/2 matrices is complete; the rest are
/// partial (for instance generator-row data P(1,k) only).
class Representation {
 public:
  Representation() = default;
  Representation(int n, int dim, std::map<Transposition, FieldMatrix> matrices);

  int n() const { return n_; }
  int dim() const { return dim_; }
  bool complete() const;
  bool partial() const { return !complete(); }
  bool has(int a, int b) const;
  /// P_{a,b} = P_{b,a}; MissingMatrix if absent.
  const FieldMatrix& at(int a, int b) const;
  const std::map<Transposition, FieldMatrix>& matrices() const { return matrices_; }
  /// Copy with one matrix replaced (or added).
  Representation with(int a, int b, FieldMatrix m) const;

  friend bool operator==(const Representation&, const Representation&) = default;

 private:
  int n_ = 0;
  int dim_ = 0;
  std::map<Transposition, FieldMatrix> matrices_;
};

/// Two-dimensional irreducible representation of S4 (partition [2,2]).
Representation builtin_s4_22();
/// Row-one data P(1,2), ..., P(1,5) of a five-dimensional S5 representation.
Representation builtin_s5_gen1();
/// Young's orthogonal form for `shape`. Throws DomainError when the shape does
/// not partition n, FieldExtensionError when an entry leaves Q(sqrt2, sqrt3).
Representation young_orthogonal(const Partition& shape, int n);

/// Resolves "s4-22", "s5-gen1" or "young:<partition>". n = 0 takes the degree
/// from the selector; any other n must match it. DomainError for unknown
/// selectors, ParseError for malformed partitions.
Representation representation_from_selector(const std::string& selector, int n = 0);

/// Exact checks: symmetry and P^2 = I for every stored matrix; for complete
/// representations also the braid relations P_ij P_jk P_ij = P_ik and
/// commutation of disjoint transpositions.
ValidationReport validate_representation(const Representation& rep);

void to_json(json& j, const Representation& rep);
void from_json(const json& j, Representation& rep);

}  // namespace kzr
