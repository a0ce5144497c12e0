#include "kzr/kzsolve.hpp"

#include <cmath>

namespace kzr {

namespace {

FieldMatrix col(FieldScalar a, FieldScalar b) { return FieldMatrix{{std::move(a)}, {std::move(b)}}; }

RationalFunction constant(const FieldScalar& x) { return RationalFunction(x); }

/// (y, z) on a line: the free coordinate is the variable, the other is fixed.
std::pair<RationalFunction, RationalFunction> line_coordinates(Axis free, const FieldScalar& fixed) {
  const RationalFunction x = RationalFunction::variable();
  return free == Axis::y ? std::pair{x, constant(fixed)} : std::pair{constant(fixed), x};
}

struct NumericW1Columns {
  Rational rho;
  NegativeAxisGaussPair pair;

  template <class Real>
  Matrix<Real> operator()(Real y, Real z) const {
    using LD = long double;
    const LD yl = y;
    const LD zl = z;
    const LD a = 1 + yl;
    const LD b = 1 + yl + yl * zl;
    if (!(zl > 0) || !(a > 0) || !(b > 0)) {
      throw DomainError("numeric W1 needs y > -1, z > 0, 1 + y + yz > 0");
    }
    const LD t = a * (zl + 1) / zl;
    const LD r = rho.to<LD>();
    const LD pref = std::pow(a, -r) * std::pow(b, -r);
    const LD s3 = std::sqrt(3.0L);
    const auto values = pair.eval(1 - t);  // solutions around v = 1, x = 1 - t
    Matrix<Real> m(2, 2);
    for (std::size_t k = 0; k < 2; ++k) {
      const LD psi = values[k].f;
      const LD dpsi = -values[k].df;
      const LD coeff = t / (s3 * r) * dpsi;
      m(0, k) = static_cast<Real>(pref * (psi * s3 - coeff * 1));
      m(1, k) = static_cast<Real>(pref * (psi * 1 - coeff * s3));
    }
    return m;
  }
};

struct NumericW2Columns {
  Rational rho;
  NegativeAxisGaussPair pair;

  template <class Real>
  Matrix<Real> operator()(Real, Real z) const {
    using LD = long double;
    const LD zl = z;
    if (!(zl > 0)) throw DomainError("numeric W2 needs z > 0");
    const LD r = rho.to<LD>();
    const LD pref = std::pow(zl, -r) * std::pow(1 + zl, -r);
    const LD s3 = std::sqrt(3.0L);
    const auto values = pair.eval(-zl);
    Matrix<Real> m(2, 2);
    for (std::size_t k = 0; k < 2; ++k) {
      const LD psi = values[k].f;
      const LD dpsi = values[k].df;
      const LD coeff = zl / (s3 * r) * dpsi;
      m(0, k) = static_cast<Real>(pref * (psi * 0 - coeff * 1));
      m(1, k) = static_cast<Real>(pref * (psi * 2 + coeff * s3));
    }
    return m;
  }
};

template <class Real>
Matrix<Real> compose_numeric(const SolutionFrame& w1, const SolutionFrame& w2, Real y, Real z) {
  const Matrix<Real> base = w1.numeric<Real>(Real(0), z);
  if (base.determinant() == Real(0)) throw SingularMatrix("W1(0, z) is singular");
  return w1.numeric<Real>(y, z) * base.inverse() * w2.numeric<Real>(Real(0), z);
}

}  // namespace

FieldMatrix basis_w1() { return col(FieldScalar::sqrt3(), 1); }
FieldMatrix basis_w2() { return col(1, FieldScalar::sqrt3()); }
FieldMatrix basis_v1() { return col(0, 2); }
FieldMatrix basis_v2() { return col(1, -FieldScalar::sqrt3()); }

std::string to_string(FrameKind kind) { return kind == FrameKind::exact ? "exact" : "numeric"; }

std::string to_string(Provenance provenance) {
  switch (provenance) {
    case Provenance::W1: return "W1";
    case Provenance::W2: return "W2";
    case Provenance::composed: return "composed";
    case Provenance::explicit_form: return "explicit";
    case Provenance::custom: return "custom";
  }
  return "custom";
}

FieldMatrix SolutionFrame::at(const FieldScalar& y, const FieldScalar& z) const {
  if (!is_exact() || !exact_at) throw DomainError("frame '" + label + "' has no exact evaluator");
  return exact_at(y, z);
}

RationalFunctionMatrix SolutionFrame::along(Axis free, const FieldScalar& fixed) const {
  if (!is_exact() || !exact_line) throw DomainError("frame '" + label + "' has no exact line restriction");
  return exact_line(free, fixed);
}

SolutionFrame fundamental_W1(const Rational& rho, FrameKind kind) {
  detail::require_nonzero_rho(rho);
  SolutionFrame frame;
  frame.kind = kind;
  frame.provenance = Provenance::W1;
  frame.rho = rho;
  frame.label = "W1";
  if (kind == FrameKind::exact) {
    const long r = detail::integer_rho(rho);
    const auto pair = std::make_shared<SolutionPair>(frobenius_rational_solutions(r));
    frame.exact_at = [pair, rho](const FieldScalar& y, const FieldScalar& z) {
      return join_columns(assemble_Y(pair->psi1, rho, y, z), assemble_Y(pair->psi2, rho, y, z));
    };
    frame.exact_line = [pair, rho](Axis free, const FieldScalar& fixed) {
      const auto [y, z] = line_coordinates(free, fixed);
      return join_columns(assemble_Y(pair->psi1, rho, y, z), assemble_Y(pair->psi2, rho, y, z));
    };
    frame.double_at = [pair, rho](double y, double z) {
      return join_columns(assemble_Y(pair->psi1, rho, y, z), assemble_Y(pair->psi2, rho, y, z));
    };
    frame.long_at = [pair, rho](long double y, long double z) {
      return join_columns(assemble_Y(pair->psi1, rho, y, z), assemble_Y(pair->psi2, rho, y, z));
    };
    return frame;
  }
  const HGParams p = kz_hg_params(rho);
  const auto columns = std::make_shared<NumericW1Columns>(
      NumericW1Columns{rho, NegativeAxisGaussPair(HGParams{p.alpha, p.beta, p.alpha + p.beta + 1 - p.gamma}, -1.0L)});
  frame.double_at = [columns](double y, double z) { return (*columns)(y, z); };
  frame.long_at = [columns](long double y, long double z) { return (*columns)(y, z); };
  return frame;
}

SolutionFrame fundamental_W2(const Rational& rho, FrameKind kind) {
  detail::require_nonzero_rho(rho);
  SolutionFrame frame;
  frame.kind = kind;
  frame.provenance = Provenance::W2;
  frame.rho = rho;
  frame.label = "W2";
  if (kind == FrameKind::exact) {
    const long r = detail::integer_rho(rho);
    const auto pair = std::make_shared<SolutionPair>(frobenius_rational_solutions(r));
    frame.exact_at = [pair, rho](const FieldScalar&, const FieldScalar& z) {
      return join_columns(assemble_U(pair->psi1, rho, z), assemble_U(pair->psi2, rho, z));
    };
    frame.exact_line = [pair, rho](Axis free, const FieldScalar& fixed) {
      const auto [y, z] = line_coordinates(free, fixed);
      return join_columns(assemble_U(pair->psi1, rho, z), assemble_U(pair->psi2, rho, z));
    };
    frame.double_at = [pair, rho](double, double z) {
      return join_columns(assemble_U(pair->psi1, rho, z), assemble_U(pair->psi2, rho, z));
    };
    frame.long_at = [pair, rho](long double, long double z) {
      return join_columns(assemble_U(pair->psi1, rho, z), assemble_U(pair->psi2, rho, z));
    };
    return frame;
  }
  const auto columns =
      std::make_shared<NumericW2Columns>(NumericW2Columns{rho, NegativeAxisGaussPair(kz_hg_params(rho), -0.5L)});
  frame.double_at = [columns](double y, double z) { return (*columns)(y, z); };
  frame.long_at = [columns](long double y, long double z) { return (*columns)(y, z); };
  return frame;
}

SolutionFrame compose_frames(const SolutionFrame& w1, const SolutionFrame& w2) {
  if (w1.kind != w2.kind) throw DomainError("composition needs frames of one kind");
  SolutionFrame frame;
  frame.kind = w1.kind;
  frame.provenance = Provenance::composed;
  frame.rho = w1.rho;
  frame.label = "W1(y,z) W1(0,z)^-1 W2(z)";
  if (frame.is_exact()) {
    frame.exact_at = [w1, w2](const FieldScalar& y, const FieldScalar& z) {
      const FieldMatrix base = w1.at(0, z);
      if (base.determinant().is_zero()) throw SingularMatrix("W1(0, z) is singular at z = " + z.str());
      return w1.at(y, z) * base.inverse() * w2.at(0, z);
    };
    frame.exact_line = [w1, w2](Axis free, const FieldScalar& fixed) {
      if (free == Axis::y) {
        const FieldMatrix base = w1.at(0, fixed);
        if (base.determinant().is_zero()) throw SingularMatrix("W1(0, z) is singular at z = " + fixed.str());
        const FieldMatrix right = base.inverse() * w2.at(0, fixed);
        return w1.along(Axis::y, fixed) * lift<RationalFunction>(right);
      }
      const RationalFunctionMatrix base = w1.along(Axis::z, 0);
      if (base.determinant().is_zero()) throw SingularMatrix("W1(0, z) is identically singular");
      return w1.along(Axis::z, fixed) * base.inverse() * w2.along(Axis::z, 0);
    };
  }
  frame.double_at = [w1, w2](double y, double z) { return compose_numeric(w1, w2, y, z); };
  frame.long_at = [w1, w2](long double y, long double z) { return compose_numeric(w1, w2, y, z); };
  return frame;
}

SolutionFrame compose_W(const Rational& rho, FrameKind kind) {
  return compose_frames(fundamental_W1(rho, kind), fundamental_W2(rho, kind));
}

SolutionFrame explicit_W1_rho_minus1() {
  SolutionFrame frame;
  frame.kind = FrameKind::exact;
  frame.provenance = Provenance::explicit_form;
  frame.rho = -1;
  frame.label = "[Y1, Y2] closed form, rho = -1";
  frame.exact_at = [](const FieldScalar& y, const FieldScalar& z) {
    return join_columns(explicit_Y1(y, z), explicit_Y2(y, z));
  };
  frame.exact_line = [](Axis free, const FieldScalar& fixed) {
    const auto [y, z] = line_coordinates(free, fixed);
    return join_columns(explicit_Y1(y, z), explicit_Y2(y, z));
  };
  frame.double_at = [](double y, double z) { return join_columns(explicit_Y1(y, z), explicit_Y2(y, z)); };
  frame.long_at = [](long double y, long double z) { return join_columns(explicit_Y1(y, z), explicit_Y2(y, z)); };
  return frame;
}

SolutionFrame explicit_W2_rho_minus1() {
  SolutionFrame frame;
  frame.kind = FrameKind::exact;
  frame.provenance = Provenance::explicit_form;
  frame.rho = -1;
  frame.label = "[U1, U2] closed form, rho = -1";
  frame.exact_at = [](const FieldScalar&, const FieldScalar& z) { return join_columns(explicit_U1(z), explicit_U2(z)); };
  frame.exact_line = [](Axis free, const FieldScalar& fixed) {
    const auto [y, z] = line_coordinates(free, fixed);
    return join_columns(explicit_U1(z), explicit_U2(z));
  };
  frame.double_at = [](double, double z) { return join_columns(explicit_U1(z), explicit_U2(z)); };
  frame.long_at = [](long double, long double z) { return join_columns(explicit_U1(z), explicit_U2(z)); };
  return frame;
}

}  // namespace kzr
