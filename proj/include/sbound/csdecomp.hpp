#pragma once

#include <Eigen/Dense>

#include "sbound/stiefel.hpp"

namespace sbound {

/// Thin CS decomposition of a 4×2 matrix with orthonormal columns, split into
/// rows {0,1} and {2,3}:
///
///   A = blockdiag(q1, q2) · [[cos α, 0], [0, cos β], [sin α, 0], [0, sin β]] · q3
///
/// with 0 ≤ α ≤ β ≤ π/2 and q1, q2, q3 orthogonal.
struct CSFactors {
  Eigen::Matrix2d q1 = Eigen::Matrix2d::Identity();
  Eigen::Matrix2d q2 = Eigen::Matrix2d::Identity();
  Eigen::Matrix2d q3 = Eigen::Matrix2d::Identity();
  double alpha = 0.0;
  double beta = 0.0;
};

/// Sines below this are treated as zero and the matching column of q2 is
/// filled in by orthogonal completion.
inline constexpr double kVanishingSine = 1e-8;

CSFactors cs_decompose(const StiefelMatrix& a);

/// blockdiag(q1, q2) · CS · q3.
DenseMatrix cs_reconstruct(const CSFactors& f);

struct CSMinors {
  double m_top = 0.0;     // cos α cos β = |det A[{0,1}]|
  double m_bottom = 0.0;  // sin α sin β = |det A[{2,3}]|
};

CSMinors minors_from_cs(const CSFactors& f);
CSMinors minors_from_cs(double alpha, double beta);

}  // namespace sbound
