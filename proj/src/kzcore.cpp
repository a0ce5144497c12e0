#include "kzr/kzcore.hpp"

#include "kzr/errors.hpp"

namespace kzr {

namespace {

std::string pname(int a, int b) { return "P(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

void require_n4(const Representation& rep) {
  if (rep.n() != 4) throw DomainError("the u-coordinates are defined for n = 4 only");
}

}  // namespace

ZPoint::ZPoint(std::vector<FieldScalar> z) : z_(std::move(z)) {
  for (std::size_t a = 0; a < z_.size(); ++a) {
    for (std::size_t b = a + 1; b < z_.size(); ++b) {
      if (z_[a] == z_[b]) {
        throw PoleError("coincident coordinates z" + std::to_string(a + 1) + " = z" + std::to_string(b + 1) +
                        " = " + z_[a].str());
      }
    }
  }
}

FieldMatrix build_Ak(const Representation& rep, int k, const ZPoint& at) {
  if (at.size() != static_cast<std::size_t>(rep.n())) {
    throw ShapeMismatch("point has " + std::to_string(at.size()) + " coordinates, representation degree is " +
                        std::to_string(rep.n()));
  }
  if (k < 1 || k > rep.n()) throw DomainError("index k out of range");
  FieldMatrix a(static_cast<std::size_t>(rep.dim()), static_cast<std::size_t>(rep.dim()));
  for (int j = 1; j <= rep.n(); ++j) {
    if (j == k) continue;
    a += rep.at(k, j) * (at[static_cast<std::size_t>(k - 1)] - at[static_cast<std::size_t>(j - 1)]).inverse();
  }
  return a;
}

FieldMatrix build_Qk(const Representation& rep, int k) {
  if (k < 1 || k > rep.n()) throw DomainError("index k out of range");
  std::string missing;
  for (int j = 1; j <= rep.n(); ++j) {
    if (j != k && !rep.has(k, j)) missing += (missing.empty() ? "" : ", ") + pname(k, j);
  }
  if (!missing.empty()) throw MissingMatrix("Q_" + std::to_string(k) + " needs " + missing);
  FieldMatrix q(static_cast<std::size_t>(rep.dim()), static_cast<std::size_t>(rep.dim()));
  for (int j = 1; j <= rep.n(); ++j) {
    if (j != k) q += rep.at(k, j);
  }
  return q;
}

ValidationReport check_flatness(const Representation& rep) {
  ValidationReport report;
  report.subject = "infinitesimal braid relations, S_" + std::to_string(rep.n());
  if (rep.partial()) {
    report.notes.push_back("partial: flatness needs every transposition matrix, checks skipped");
    return report;
  }
  auto commutes = [](const FieldMatrix& a, const FieldMatrix& b) { return a * b == b * a; };
  const int n = rep.n();
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int k = 1; k <= n; ++k) {
        if (k == i || k == j) continue;
        report.record("[" + pname(i, j) + ", " + pname(i, k) + " + " + pname(j, k) + "] = 0",
                      commutes(rep.at(i, j), rep.at(i, k) + rep.at(j, k)));
      }
    }
  }
  for (const auto& [a, ma] : rep.matrices()) {
    for (const auto& [b, mb] : rep.matrices()) {
      if (!(a < b) || a.i == b.i || a.i == b.j || a.j == b.i || a.j == b.j) continue;
      report.record("[" + pname(a.i, a.j) + ", " + pname(b.i, b.j) + "] = 0", commutes(ma, mb));
    }
  }
  return report;
}

UPoint z_to_u(const ZPoint& at) {
  if (at.size() != 4) throw DomainError("z_to_u expects four coordinates");
  const FieldScalar d1 = at[0] - at[1];
  const FieldScalar d2 = at[1] - at[2];
  const FieldScalar d3 = at[2] - at[3];
  return UPoint{{d1, d2 / d1, d3 / d2, at[0] + at[1] + at[2] + at[3]}};
}

ZPoint u_to_z(const UPoint& at) {
  const auto& [u1, u2, u3, u4] = at.u;
  if (u1.is_zero()) throw PoleError("u1 = 0");
  if (u2.is_zero() || u2 == FieldScalar(-1)) throw PoleError("u2 must avoid 0 and -1");
  if (u3.is_zero() || u3 == FieldScalar(-1)) throw PoleError("u3 must avoid 0 and -1");
  if ((1 + u2 + u2 * u3).is_zero()) throw PoleError("1 + u2 + u2 u3 = 0");
  const FieldScalar d1 = u1;
  const FieldScalar d2 = u1 * u2;
  const FieldScalar d3 = d2 * u3;
  const FieldScalar z1 = (u4 + 3 * d1 + 2 * d2 + d3) * FieldScalar(Rational(1, 4));
  return ZPoint({z1, z1 - d1, z1 - d1 - d2, z1 - d1 - d2 - d3});
}

FieldMatrix partial_row_sum(const Representation& rep, int r) {
  require_n4(rep);
  FieldMatrix p(static_cast<std::size_t>(rep.dim()), static_cast<std::size_t>(rep.dim()));
  for (int j = r + 1; j <= 4; ++j) p += rep.at(j, r);
  return p;
}

FieldMatrix omega(const Representation& rep, int s) {
  require_n4(rep);
  FieldMatrix o(static_cast<std::size_t>(rep.dim()), static_cast<std::size_t>(rep.dim()));
  for (int r = s; r <= 4; ++r) o += partial_row_sum(rep, r);
  return o;
}

std::array<FieldMatrix, 4> build_H(const Representation& rep, const UPoint& at) {
  require_n4(rep);
  const auto& [u1, u2, u3, u4] = at.u;
  (void)u4;
  const std::size_t dim = static_cast<std::size_t>(rep.dim());
  FieldMatrix h1(dim, dim);
  const FieldMatrix om1 = omega(rep, 1);
  if (!om1.is_zero_matrix()) h1 = divide_or_pole(om1, u1, "u1");
  return {h1, connection_y(rep, u2, u3), connection_z(rep, u2, u3), FieldMatrix(dim, dim)};
}

}  // namespace kzr
