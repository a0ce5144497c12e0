#include <doctest.h>

#include <cmath>

#include "generators.hpp"
#include "kzr/kzcore.hpp"
#include "kzr/kzsolve.hpp"

using namespace kzr;

namespace {

FieldScalar r(long n, long d = 1) { return FieldScalar(Rational(n, d)); }
const FieldScalar s3 = FieldScalar::sqrt3();

template <class Real>
Real max_diff(const Matrix<Real>& a, const Matrix<Real>& b) {
  Real m = 0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

Matrix<long double> to_ld(const FieldMatrix& m) { return to_real<long double>(m); }

}  // namespace

TEST_CASE("eigenvector relations of the basis vectors") {
  const Representation rep = builtin_s4_22();
  const FieldMatrix id = FieldMatrix::identity(2);
  const FieldMatrix w1 = basis_w1(), w2 = basis_w2(), v1 = basis_v1(), v2 = basis_v2();
  CHECK(((rep.at(1, 3) + id) * w1).is_zero_matrix());
  CHECK((rep.at(1, 3) + id) * w2 == w1 * (-s3) + w2 * 2);
  CHECK((rep.at(1, 4) + id) * w1 == w2 * s3);
  CHECK((rep.at(1, 4) + id) * w2 == w2 * 2);
  CHECK(((rep.at(4, 3) + id) * v1).is_zero_matrix());
  CHECK((rep.at(4, 2) + id) * v1 == v2 * (-s3));
  CHECK((rep.at(4, 3) + id) * v2 == v1 * s3 + v2 * 2);
  CHECK((rep.at(4, 2) + id) * v2 == v2 * 2);
}

TEST_CASE("assembled Y and U for rho = -1") {
  const SolutionPair pair = frobenius_rational_solutions(-1);
  const Rational rho(-1);
  CHECK(assemble_Y(pair.psi1, rho, r(1), r(1)) == basis_w1() * (-2) + basis_w2() * (r(8, 3) / s3));
  // 1 + y + yz = 4 at (1, 2)
  CHECK(assemble_Y(pair.psi1, rho, r(1), r(2)) == basis_w1() * (-4) + basis_w2() * (r(6) / s3));
  // at y = 0 the prefactor is 1
  const FieldScalar z = r(3, 7);
  const FieldScalar t = (z + 1) / z;
  const RationalFunction d = pair.psi2.derivative();
  CHECK(assemble_Y(pair.psi2, rho, r(0), z) ==
        basis_w1() * pair.psi2.eval(t) - basis_w2() * (t / (s3 * r(-1)) * d.eval(t)));

  CHECK(assemble_U(pair.psi1, rho, r(1)) == FieldMatrix{{r(1, 2) / s3}, {r(3, 2)}});
  for (const FieldScalar& zz : {r(1), r(2), r(5, 3), r(-1, 2)}) {
    CHECK(assemble_U(pair.psi1, rho, zz) == explicit_U1(zz));
    CHECK(assemble_U(pair.psi2, rho, zz) == explicit_U2(zz));
  }
  CHECK_THROWS_AS(assemble_U(pair.psi1, Rational(0), r(1)), DomainError);
  CHECK_THROWS_AS(assemble_U(pair.psi1, Rational(1, 2), r(1)), DomainError);
  CHECK_THROWS_AS(assemble_U(pair.psi1, rho, r(-1)), PoleError);
  CHECK_THROWS_AS(assemble_Y(pair.psi1, rho, r(1), r(0)), PoleError);
  CHECK_THROWS_AS(assemble_Y(pair.psi1, rho, r(-1, 3), r(2)), PoleError);
}

TEST_CASE("closed forms for rho = -1") {
  CHECK(explicit_Y1(r(1), r(1)) == basis_w1() * (-2) + basis_w2() * (r(8, 3) / s3));
  CHECK(explicit_U2(r(2)) == basis_v1() * r(-3, 2));
  CHECK(explicit_Y2(r(0), r(1)) == basis_w1() * r(3, 4) - basis_w2() * (1 / s3));
}

TEST_CASE("assembled frames and closed forms differ by a constant right factor") {
  const SolutionFrame w1 = fundamental_W1(-1, FrameKind::exact);
  const SolutionFrame e1 = explicit_W1_rho_minus1();
  const SolutionFrame w2 = fundamental_W2(-1, FrameKind::exact);
  const SolutionFrame e2 = explicit_W2_rho_minus1();
  testing::Gen gen(8);
  std::optional<FieldMatrix> c1, c2;
  for (int trial = 0; trial < 10; ++trial) {
    const FieldScalar y = Rational(gen.integer(1, 9), gen.integer(1, 9));
    const FieldScalar z = Rational(gen.integer(1, 9), gen.integer(1, 9));
    const FieldMatrix f1 = e1.at(y, z).inverse() * w1.at(y, z);
    const FieldMatrix f2 = e2.at(y, z).inverse() * w2.at(y, z);
    if (!c1) c1 = f1, c2 = f2;
    CHECK(f1 == *c1);
    CHECK(f2 == *c2);
  }
  CHECK(*c1 == FieldMatrix::identity(2));
  CHECK(*c2 == FieldMatrix::identity(2));
  CHECK_FALSE(w2.at(0, 1).determinant().is_zero());
}

TEST_CASE("composed frame") {
  const SolutionFrame w = compose_W(-1, FrameKind::exact);
  const SolutionFrame w2 = fundamental_W2(-1, FrameKind::exact);
  testing::Gen gen(99);
  for (int trial = 0; trial < 25; ++trial) {
    const FieldScalar y = Rational(gen.integer(1, 12), gen.integer(1, 12));
    const FieldScalar z = Rational(gen.integer(1, 12), gen.integer(1, 12));
    CHECK_FALSE(w.at(y, z).determinant().is_zero());
    if (trial < 5) CHECK(w.at(0, z) == w2.at(0, z));
  }
  const FieldMatrix at11 = w.at(1, 1);
  CHECK(at11.rows() == 2);
  // the line restrictions agree with pointwise evaluation
  const FieldScalar z = r(7, 5);
  const RationalFunctionMatrix line = w.along(Axis::y, z);
  CHECK(line.map([](const RationalFunction& f) { return f.eval(r(2, 3)); }) == w.at(r(2, 3), z));
  const RationalFunctionMatrix zline = w.along(Axis::z, r(1, 2));
  CHECK(zline.map([](const RationalFunction& f) { return f.eval(r(5, 2)); }) == w.at(r(1, 2), r(5, 2)));
  CHECK(w.along(Axis::z, 0) == w2.along(Axis::z, 0));
}

TEST_CASE("exact frames for other integer rho") {
  for (long rho : {-3, -2, 1, 2}) {
    CAPTURE(rho);
    const SolutionFrame w = compose_W(rho, FrameKind::exact);
    const FieldMatrix m = w.at(r(1, 2), r(3, 4));
    CHECK_FALSE(m.determinant().is_zero());
    CHECK(max_diff(w.numeric<long double>(0.5L, 0.75L), to_ld(m)) < 1e-12L * (1 + max_abs(to_ld(m))));
  }
  CHECK_THROWS_AS(fundamental_W1(0, FrameKind::exact), DomainError);
  CHECK_THROWS_AS(fundamental_W1(Rational(1, 2), FrameKind::exact), DomainError);
}

TEST_CASE("numeric frames agree with exact frames up to a constant right factor") {
  for (long rho : {-1, -2, 1, 2}) {
    CAPTURE(rho);
    const SolutionFrame exact2 = fundamental_W2(rho, FrameKind::exact);
    const SolutionFrame num2 = fundamental_W2(rho, FrameKind::numeric);
    const Matrix<long double> c2 = to_ld(exact2.at(0, 1)).inverse() * num2.numeric<long double>(0, 1);
    const Matrix<long double> expected2 = to_ld(exact2.at(0, r(1, 2))) * c2;
    CHECK(max_diff(num2.numeric<long double>(0, 0.5L), expected2) < 1e-10L * (1 + max_abs(expected2)));

    const SolutionFrame exact1 = fundamental_W1(rho, FrameKind::exact);
    const SolutionFrame num1 = fundamental_W1(rho, FrameKind::numeric);
    const Matrix<long double> c1 = to_ld(exact1.at(1, 1)).inverse() * num1.numeric<long double>(1, 1);
    for (const auto& [y, z] : std::vector<std::pair<long, long>>{{1, 2}, {2, 1}, {3, 5}}) {
      const Matrix<long double> expected1 = to_ld(exact1.at(r(y, 2), r(z, 2))) * c1;
      CHECK(max_diff(num1.numeric<long double>(y / 2.0L, z / 2.0L), expected1) < 1e-10L * (1 + max_abs(expected1)));
    }
  }
}

TEST_CASE("numeric frames for non-integer rho") {
  for (const Rational& rho : {Rational(-1, 2), Rational(1, 3), Rational(3, 2), Rational(-5, 4)}) {
    CAPTURE(rho.pretty());
    const SolutionFrame w = compose_W(rho, FrameKind::numeric);
    CHECK_FALSE(w.is_exact());
    const Matrix<double> m = w.numeric<double>(0.75, 1.25);
    CHECK(std::isfinite(m(0, 0)));
    CHECK(std::abs(m.determinant()) > 1e-12);
    CHECK(max_diff(w.numeric<double>(0, 1.25), fundamental_W2(rho, FrameKind::numeric).numeric<double>(0, 1.25)) < 1e-12);
    CHECK_THROWS_AS(w.at(1, 1), DomainError);
  }
}
