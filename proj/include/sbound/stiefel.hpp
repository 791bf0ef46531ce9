#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace sbound {

using DenseMatrix = Eigen::MatrixXd;
using RowSet = std::vector<int>;

/// Largest admissible deviation ‖AᵀA − I‖_max for a StiefelMatrix.
inline constexpr double kStiefelTolerance = 1e-10;

/// Default cap on the number of row subsets enumerated by best_submatrix.
inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

/// An n×k real matrix with orthonormal columns.
///
/// Construction validates the shape (1 ≤ k ≤ n), finiteness of every entry and
/// ‖AᵀA − I‖_max ≤ kStiefelTolerance. The value is immutable afterwards.
class StiefelMatrix {
 public:
  /// Throws DimensionError on a bad shape or non-finite entries and
  /// NotOrthonormal when the column check fails.
  explicit StiefelMatrix(DenseMatrix entries);

  int n() const { return static_cast<int>(entries_.rows()); }
  int k() const { return static_cast<int>(entries_.cols()); }
  double operator()(int row, int col) const { return entries_(row, col); }
  const DenseMatrix& matrix() const { return entries_; }

 private:
  DenseMatrix entries_;
};

/// ‖MᵀM − I‖_max.
double orthonormality_error(const DenseMatrix& m);

/// Thin QR-based orthonormalization with a nonnegative diagonal in the
/// triangular factor. Throws DimensionError if cols > rows and RankDeficient
/// when the smallest singular value of `m` does not exceed `tol`.
StiefelMatrix orthonormalize(const DenseMatrix& m, double tol = 1e-10);

/// orthonormalize() applied to an n×k matrix of standard normal variates drawn
/// from a generator seeded with `seed`.
StiefelMatrix haar_sample(int n, int k, std::uint64_t seed);

/// Smallest singular value of a square matrix. Closed form for k ≤ 2,
/// symmetric eigen-decomposition of the Gram matrix otherwise.
double sigma_min(const DenseMatrix& m);

/// Rows of `a` selected by `rows`, in the given order.
DenseMatrix row_submatrix(const DenseMatrix& a, const RowSet& rows);

/// Binomial coefficient, saturating at UINT64_MAX.
std::uint64_t binomial(int n, int k);

struct SubsetValue {
  RowSet row_set;
  double sigma_min = 0.0;
};

struct SubmatrixReport {
  RowSet row_set;
  double sigma_min = 0.0;
  double determinant = 0.0;
  std::vector<SubsetValue> all_values;  // lexicographic order of row_set
};

/// σ_min of every k×k row submatrix of a (not necessarily orthonormal)
/// n×k matrix, in lexicographic subset order.
std::vector<SubsetValue> all_subset_sigmas(const DenseMatrix& a,
                                           std::uint64_t cap = kDefaultEnumerationCap);

/// Exhaustive search for the k-row subset maximizing σ_min. Ties go to the
/// lexicographically smallest subset.
SubmatrixReport best_submatrix(const StiefelMatrix& a,
                               std::uint64_t cap = kDefaultEnumerationCap);

/// max over subsets of σ_min without materializing all_values.
double best_sigma_min(const DenseMatrix& a, std::uint64_t cap = kDefaultEnumerationCap);

/// Largest principal angle between span(A) and the coordinate subspace
/// spanned by `row_set`, in radians.
double principal_angle(const StiefelMatrix& a, const RowSet& row_set);

}  // namespace sbound
