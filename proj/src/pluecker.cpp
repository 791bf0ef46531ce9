#include "sbound/pluecker.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "sbound/errors.hpp"

namespace sbound {
namespace {

constexpr double kThird = std::numbers::pi / 3.0;

double minor(const DenseMatrix& a, int i, int j) { return a(i, 0) * a(j, 1) - a(j, 0) * a(i, 1); }

double sq(double v) { return v * v; }

}  // namespace

PlueckerCoords pluecker4x2(const DenseMatrix& a) {
  if (a.rows() != 4 || a.cols() != 2) {
    throw DimensionError("Pluecker coordinates are defined here for 4x2 matrices only, got " +
                         std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
  return {minor(a, 0, 1), minor(a, 0, 2), minor(a, 0, 3),
          minor(a, 1, 2), minor(a, 1, 3), minor(a, 2, 3)};
}

PlueckerCoords pluecker4x2(const StiefelMatrix& a) { return pluecker4x2(a.matrix()); }

Residuals invariant_residuals(const PlueckerCoords& p) {
  const double relation = p.p12 * p.p34 - p.p13 * p.p24 + p.p14 * p.p23;
  double norm = 0.0;
  for (double v : p.values()) norm += v * v;
  return {std::abs(relation), std::abs(norm - 1.0)};
}

TransformedVars to_transformed(const PlueckerCoords& p) {
  return {p.p12 + p.p34, p.p12 - p.p34, p.p13 - p.p24,
          p.p13 + p.p24, p.p14 + p.p23, p.p14 - p.p23};
}

PlueckerCoords from_transformed(const TransformedVars& v) {
  PlueckerCoords p;
  p.p12 = 0.5 * (v.x1 + v.x2);
  p.p34 = 0.5 * (v.x1 - v.x2);
  p.p13 = 0.5 * (v.y1 + v.y2);
  p.p24 = 0.5 * (v.y2 - v.y1);
  p.p14 = 0.5 * (v.z1 + v.z2);
  p.p23 = 0.5 * (v.z1 - v.z2);
  return p;
}

SystemReport eval_system(const TransformedVars& v, double bound, double tol) {
  SystemReport r;
  r.sphere1_residual = std::abs(sq(v.x1) + sq(v.y1) + sq(v.z1) - 1.0);
  r.sphere2_residual = std::abs(sq(v.x2) + sq(v.y2) + sq(v.z2) - 1.0);
  const auto forms = [](double a, double b) {
    return std::array<double, 2>{sq(a) + a * b + sq(b), sq(a) - a * b + sq(b)};
  };
  const auto fx = forms(v.x1, v.x2);
  const auto fy = forms(v.y1, v.y2);
  const auto fz = forms(v.z1, v.z2);
  r.qform_values = {fx[0], fx[1], fy[0], fy[1], fz[0], fz[1]};
  r.bound_used = bound;
  r.satisfied = r.sphere1_residual <= tol && r.sphere2_residual <= tol &&
                std::all_of(r.qform_values.begin(), r.qform_values.end(),
                            [&](double q) { return q <= bound + tol; });
  return r;
}

TransformedVars nonnegative_representative(const TransformedVars& v) {
  return {std::abs(v.x1), std::abs(v.x2), std::abs(v.y1),
          std::abs(v.y2), std::abs(v.z1), std::abs(v.z2)};
}

RadiusAngle elliptic_pair(double a, double b) {
  if (!(a >= 0.0) || !(b >= 0.0)) {
    throw NegativeComponent("elliptic parametrization needs nonnegative components, got (" +
                            std::to_string(a) + ", " + std::to_string(b) + ")");
  }
  // a + b = R sin θ and a − b = √3 R cos θ.
  const double s = a + b;
  const double c = (a - b) / std::numbers::sqrt3;
  const double radius = std::hypot(s, c);
  if (radius == 0.0) return {0.0, std::numbers::pi / 2.0};
  const double angle = std::clamp(std::atan2(s, c), kThird, 2.0 * kThird);
  return {radius, angle};
}

std::array<double, 2> elliptic_point(double radius, double angle) {
  return {radius * std::sin(angle + kThird), radius * std::sin(angle - kThird)};
}

EllipticParams elliptic_params(const TransformedVars& v) {
  const RadiusAngle x = elliptic_pair(v.x1, v.x2);
  const RadiusAngle y = elliptic_pair(v.y1, v.y2);
  const RadiusAngle z = elliptic_pair(v.z1, v.z2);
  return {x.radius, x.angle, y.radius, y.angle, z.radius, z.angle};
}

TransformedVars from_elliptic(const EllipticParams& e) {
  const auto x = elliptic_point(e.X, e.x);
  const auto y = elliptic_point(e.Y, e.y);
  const auto z = elliptic_point(e.Z, e.z);
  return {x[0], x[1], y[0], y[1], z[0], z[1]};
}

Eq3Sums eq3_sums(double x, double y, double z) {
  const auto term = [](double t, double shift) { return sq(std::sin(t + shift)); };
  return {term(x, kThird) + term(y, kThird) + term(z, kThird),
          term(x, -kThird) + term(y, -kThird) + term(z, -kThird)};
}

}  // namespace sbound
