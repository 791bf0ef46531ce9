#include "sbound/csdecomp.hpp"

#include <cmath>
#include <string>

#include "sbound/errors.hpp"

namespace sbound {

CSFactors cs_decompose(const StiefelMatrix& a) {
  if (a.n() != 4 || a.k() != 2) {
    throw DimensionError("cs_decompose expects a 4x2 matrix, got " + std::to_string(a.n()) +
                         "x" + std::to_string(a.k()));
  }
  const Eigen::Matrix2d top = a.matrix().topRows(2);
  const Eigen::Matrix2d bottom = a.matrix().bottomRows(2);

  // top = U diag(c1, c2) Vᵀ with c1 ≥ c2 ≥ 0.
  const Eigen::JacobiSVD<Eigen::Matrix2d> svd(top, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::Matrix2d u = svd.matrixU();
  Eigen::Matrix2d v = svd.matrixV();
  for (int j = 0; j < 2; ++j) {
    if (u(j, j) < 0.0) {
      u.col(j) = -u.col(j);
      v.col(j) = -v.col(j);
    }
  }
  const Eigen::Vector2d c = svd.singularValues().cwiseMin(1.0);

  // Columns of bottom·V are orthogonal with norms s1 ≤ s2.
  const Eigen::Matrix2d bv = bottom * v;
  const Eigen::Vector2d s(bv.col(0).norm(), bv.col(1).norm());

  CSFactors f;
  f.q1 = u;
  f.q3 = v.transpose();
  f.alpha = std::atan2(s(0), c(0));
  f.beta = std::atan2(s(1), c(1));
  if (f.alpha > f.beta) f.alpha = f.beta;  // rounding only; c1 ≥ c2 forces α ≤ β

  // q2's second column comes from the larger sine; the first is its
  // perpendicular, oriented along bottom·V's first column when that is
  // resolvable and with det(q2) = +1 otherwise.
  Eigen::Matrix2d q2;
  if (s(1) <= kVanishingSine) {
    q2.setIdentity();
  } else {
    q2.col(1) = bv.col(1) / s(1);
    q2.col(0) = Eigen::Vector2d(q2(1, 1), -q2(0, 1));
    if (s(0) > kVanishingSine && q2.col(0).dot(bv.col(0)) < 0.0) q2.col(0) = -q2.col(0);
  }
  f.q2 = q2;
  return f;
}

DenseMatrix cs_reconstruct(const CSFactors& f) {
  Eigen::Matrix<double, 4, 2> cs = Eigen::Matrix<double, 4, 2>::Zero();
  cs(0, 0) = std::cos(f.alpha);
  cs(1, 1) = std::cos(f.beta);
  cs(2, 0) = std::sin(f.alpha);
  cs(3, 1) = std::sin(f.beta);
  Eigen::Matrix4d block = Eigen::Matrix4d::Zero();
  block.topLeftCorner<2, 2>() = f.q1;
  block.bottomRightCorner<2, 2>() = f.q2;
  return block * cs * f.q3;
}

CSMinors minors_from_cs(double alpha, double beta) {
  return {std::cos(alpha) * std::cos(beta), std::sin(alpha) * std::sin(beta)};
}

CSMinors minors_from_cs(const CSFactors& f) { return minors_from_cs(f.alpha, f.beta); }

}  // namespace sbound
