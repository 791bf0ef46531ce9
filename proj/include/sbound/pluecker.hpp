#pragma once

#include <array>

#include "sbound/stiefel.hpp"

namespace sbound {

/// Signed 2×2 row minors of a 4×2 matrix; pij uses rows (i, j), 1-based.
struct PlueckerCoords {
  double p12 = 0.0;
  double p13 = 0.0;
  double p14 = 0.0;
  double p23 = 0.0;
  double p24 = 0.0;
  double p34 = 0.0;

  std::array<double, 6> values() const { return {p12, p13, p14, p23, p24, p34}; }
};

/// Pairwise sums and differences of complementary minors:
/// x = p12 ± p34, y = p13 ∓ p24, z = p14 ± p23.
struct TransformedVars {
  double x1 = 0.0;
  double x2 = 0.0;
  double y1 = 0.0;
  double y2 = 0.0;
  double z1 = 0.0;
  double z2 = 0.0;

  std::array<double, 6> values() const { return {x1, x2, y1, y2, z1, z2}; }
};

/// Radius/angle form of the three nonnegative pairs:
/// (x1, x2) = X·(sin(x + π/3), sin(x − π/3)), likewise for y and z.
struct EllipticParams {
  double X = 0.0;
  double x = 0.0;
  double Y = 0.0;
  double y = 0.0;
  double Z = 0.0;
  double z = 0.0;
};

struct SystemReport {
  double sphere1_residual = 0.0;
  double sphere2_residual = 0.0;
  // x+, x−, y+, y−, z+, z− where the sign is that of the cross term.
  std::array<double, 6> qform_values{};
  double bound_used = 0.0;
  bool satisfied = false;
};

/// Quadratic-form bound a² ± ab + b² ≤ 3/4 implied by the minor constraints.
inline constexpr double kDefaultFormBound = 0.75;

struct Residuals {
  double relation = 0.0;
  double normalization = 0.0;
};

PlueckerCoords pluecker4x2(const StiefelMatrix& a);
/// Same minors for an arbitrary 4×2 matrix.
PlueckerCoords pluecker4x2(const DenseMatrix& a);

Residuals invariant_residuals(const PlueckerCoords& p);

TransformedVars to_transformed(const PlueckerCoords& p);
PlueckerCoords from_transformed(const TransformedVars& v);

SystemReport eval_system(const TransformedVars& v, double bound = kDefaultFormBound,
                         double tol = 1e-12);

/// Representative of the sign orbit in the nonnegative orthant. System (1)
/// only involves squares and both signs of each cross term, so it is invariant
/// under flipping any component.
TransformedVars nonnegative_representative(const TransformedVars& v);

struct RadiusAngle {
  double radius = 0.0;
  double angle = 0.0;
};

/// Solves a = R sin(θ + π/3), b = R sin(θ − π/3) for a, b ≥ 0.
/// θ ∈ [π/3, 2π/3]; θ = π/2 when a = b = 0. Throws NegativeComponent.
RadiusAngle elliptic_pair(double a, double b);

/// Inverse of elliptic_pair: (R sin(θ + π/3), R sin(θ − π/3)).
std::array<double, 2> elliptic_point(double radius, double angle);

EllipticParams elliptic_params(const TransformedVars& v);
TransformedVars from_elliptic(const EllipticParams& e);

struct Eq3Sums {
  double s_plus = 0.0;
  double s_minus = 0.0;
};

/// s± = sin²(x ± π/3) + sin²(y ± π/3) + sin²(z ± π/3).
Eq3Sums eq3_sums(double x, double y, double z);

}  // namespace sbound
