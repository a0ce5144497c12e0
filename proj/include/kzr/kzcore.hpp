#pragma once

// The KZ connection of a transposition representation: A_k, Q_k, the
// flatness identities, and the n = 4 change of variables
//   u1 = z1 - z2,  u2 = (z2 - z3)/(z1 - z2),  u3 = (z3 - z4)/(z2 - z3),
//   u4 = z1 + z2 + z3 + z4
// under which the system becomes dW/du_j = rho H_j(u) W.

#include <array>
#include <vector>

#include "kzr/exactnum/scalar.hpp"
#include "kzr/symrep.hpp"

namespace kzr {

struct KZParams {
  Representation rep;
  Rational rho;
};

/// Pairwise distinct coordinates z_1..z_n.
class ZPoint {
 public:
  explicit ZPoint(std::vector<FieldScalar> z);
  std::size_t size() const { return z_.size(); }
  const FieldScalar& operator[](std::size_t k) const { return z_[k]; }  // 0-based
  const std::vector<FieldScalar>& values() const { return z_; }
  friend bool operator==(const ZPoint&, const ZPoint&) = default;

 private:
  std::vector<FieldScalar> z_;
};

struct UPoint {
  std::array<FieldScalar, 4> u;
  friend bool operator==(const UPoint&, const UPoint&) = default;
};

/// A_k = sum_{j != k} P_{k,j} / (z_k - z_j).
FieldMatrix build_Ak(const Representation& rep, int k, const ZPoint& at);
/// Q_k = sum_{j != k} P_{k,j}; works on partial data holding row k.
FieldMatrix build_Qk(const Representation& rep, int k);

/// [P_ij, P_ik + P_jk] = 0 for distinct triples and [P_ij, P_kl] = 0 for
/// disjoint pairs, exactly.
ValidationReport check_flatness(const Representation& rep);

UPoint z_to_u(const ZPoint& at);
/// Inverse map; requires u1 != 0, u2, u3 not in {0, -1}, 1 + u2 + u2 u3 != 0.
ZPoint u_to_z(const UPoint& at);

/// P_r = sum_{j > r} P_{j,r} and Omega_s = P_s + ... + P_4 (n = 4).
FieldMatrix partial_row_sum(const Representation& rep, int r);
FieldMatrix omega(const Representation& rep, int s);

/// H_2(y, z) with y = u2, z = u3:
///   Omega_2 / y + P_13 / (1 + y) + P_14 (1 + z) / (1 + y + y z).
/// The Omega_2 term (and its pole at y = 0) is dropped when Omega_2 = 0.
template <class T>
Matrix<T> connection_y(const Representation& rep, const T& y, const T& z) {
  const T one(1);
  Matrix<T> h = divide_or_pole(lift<T>(rep.at(1, 3)), one + y, "1 + u2");
  h += divide_or_pole(lift<T>(rep.at(1, 4)) * (one + z), one + y + y * z, "1 + u2 + u2 u3");
  const FieldMatrix om2 = omega(rep, 2);
  if (!om2.is_zero_matrix()) h += divide_or_pole(lift<T>(om2), y, "u2");
  return h;
}

/// H_3(y, z) = P_43 / z + P_42 / (1 + z) + P_41 y / (1 + y + y z).
template <class T>
Matrix<T> connection_z(const Representation& rep, const T& y, const T& z) {
  const T one(1);
  Matrix<T> h = divide_or_pole(lift<T>(rep.at(4, 3)), z, "u3");
  h += divide_or_pole(lift<T>(rep.at(4, 2)), one + z, "1 + u3");
  h += divide_or_pole(lift<T>(rep.at(4, 1)) * y, one + y + y * z, "1 + u2 + u2 u3");
  return h;
}

/// H_1..H_4 at a point (without the factor rho); H_4 = 0.
std::array<FieldMatrix, 4> build_H(const Representation& rep, const UPoint& at);

}  // namespace kzr
