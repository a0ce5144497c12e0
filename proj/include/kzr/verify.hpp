#pragma once

// Independent checks that a frame solves the KZ equations: exact residuals on
// rational lines, finite-difference residuals on grids, Runge-Kutta transport,
// and the scalar ODEs of the reduction.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kzr/kzcore.hpp"
#include "kzr/kzsolve.hpp"

namespace kzr {

enum class EquationId {
  kz_y,                 // dW/dy = rho H2 W
  kz_z,                 // dW/dz = rho H3 W
  gauge_y,              // dF/dy for F = W (1+y)^rho (1+y+yz)^rho
  phi1_y,               // phi1' = -sqrt3 rho phi2 / (1+y)
  phi2_y,               // phi2' = rho (2 phi2/(1+y) + (2 phi2 + sqrt3 phi1)(1+z)/(1+y+yz))
  scalar_y,             // second-order equation for phi1 in y
  scalar_v,             // v(1+v) phi'' + [1+v-2rho(1+2v)] phi' + 3 rho^2 phi = 0
  gauss,                // Gauss equation for psi
  kz_z_edge,            // dW/dz = rho (P43/z + P42/(1+z)) W on y = 0
  gauge_z,              // dG/dz for G = W z^rho (1+z)^rho on y = 0
  pair_z,               // phi1' = sqrt3 rho phi2 / z, phi2' = rho(2phi2/z + 2phi2/(1+z) - sqrt3 phi1/(1+z))
  scalar_z,             // z(1+z) phi'' + [1+z-2rho(1+2z)] phi' + 3 rho^2 phi = 0
  scalar_z_rho_minus1,  // z(1+z) phi'' + (3+5z) phi' + 3 phi = 0
};

std::string to_string(EquationId id);
EquationId parse_equation(const std::string& text);

enum class ResidualMode { exact_line, finite_difference, rk_compare };
std::string to_string(ResidualMode mode);

enum class Precision { float64, extended };
/// KZR_PRECISION: unset, "double" or "float64" -> float64; "long double",
/// "long-double", "extended" or "float80" -> extended. Anything else is a ParseError.
Precision precision_from_env();
std::string to_string(Precision precision);

struct ResidualReport {
  EquationId equation = EquationId::kz_y;
  ResidualMode mode = ResidualMode::exact_line;
  std::string subject;
  /// Set only by exact evaluation.
  std::optional<bool> exact_zero;
  /// Set only by floating-point modes.
  std::optional<double> max_abs_residual;
  std::optional<double> tolerance;
  std::optional<double> step;
  std::optional<std::string> precision;
  std::vector<std::string> samples;
  std::vector<std::string> residuals;  // nonzero exact residual entries
  std::vector<std::string> notes;

  bool passed() const;
  friend bool operator==(const ResidualReport&, const ResidualReport&) = default;
};

void to_json(json& j, const ResidualReport& report);
void from_json(const json& j, ResidualReport& report);

/// The representation the n = 4 frames solve (builtin_s4_22).
const Representation& kz_representation();

/// Exact residual on a line. kz_y and gauge_y fix z = fixed; kz_z fixes
/// y = fixed; kz_z_edge and gauge_z live on y = 0 and require fixed = 0.
ResidualReport exact_line_residual(const SolutionFrame& frame, EquationId equation, const FieldScalar& fixed);

/// Exact checks of the scalar and first-order reductions for integer rho.
std::vector<ResidualReport> scalar_ode_checks(const Rational& rho);

using GridPoint = std::pair<Rational, Rational>;  // (y, z)

/// The default grid: 5 x 5 points of [1/2, 3/2]^2.
std::vector<GridPoint> default_grid();

/// Central differences of kz_y (d/dy) or kz_z / kz_z_edge (d/dz). Exact frames
/// are differenced exactly at rational points, so the residual is pure
/// truncation error; numeric frames are differenced in the chosen precision.
/// Points within max(1e-3, 2h) of a pole are skipped and logged.
ResidualReport fd_grid_residual(const SolutionFrame& frame, EquationId equation, std::vector<GridPoint> grid,
                                double h, double tol, Precision precision = Precision::float64);

/// Integrates dW/dy = rho H2(y, z_fixed) W from the frame's value at y0 to y1
/// with adaptive Dormand-Prince 5(4) steps and compares with the frame at y1
/// in relative Frobenius norm.
ResidualReport rk_cross_check(const SolutionFrame& frame, double z_fixed, double y0, double y1, double tol,
                              double integrator_tol = 1e-12, Precision precision = Precision::float64);

/// A frame that is the constant matrix m everywhere.
SolutionFrame constant_frame(const FieldMatrix& m, const Rational& rho);

}  // namespace kzr
