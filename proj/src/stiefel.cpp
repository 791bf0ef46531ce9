#include "sbound/stiefel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "sbound/errors.hpp"

namespace sbound {
namespace {

void require_finite(const DenseMatrix& m) {
  if (!m.allFinite()) throw DimensionError("matrix has non-finite entries");
}

// Householder QR with column signs fixed so that diag(R) ≥ 0.
DenseMatrix thin_q(const DenseMatrix& m) {
  const Eigen::HouseholderQR<DenseMatrix> qr(m);
  DenseMatrix q = qr.householderQ() * DenseMatrix::Identity(m.rows(), m.cols());
  const DenseMatrix& r = qr.matrixQR();
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    if (r(j, j) < 0.0) q.col(j) = -q.col(j);
  }
  return q;
}

double sigma_min_2x2(double a, double b, double c, double d) {
  // Largest singular value in closed form; the smallest follows from
  // |det| = σ_max σ_min without cancellation.
  const double p = std::hypot(a + d, c - b);
  const double q = std::hypot(a - d, b + c);
  const double s_max = 0.5 * (p + q);
  if (s_max == 0.0) return 0.0;
  return std::min(std::abs(a * d - b * c) / s_max, s_max);
}

// Advances `idx` to the next k-subset of {0..n-1} in lexicographic order.
bool next_combination(RowSet& idx, int n) {
  const int k = static_cast<int>(idx.size());
  int i = k - 1;
  while (i >= 0 && idx[i] == n - k + i) --i;
  if (i < 0) return false;
  ++idx[i];
  for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  return true;
}

void check_cap(int n, int k, std::uint64_t cap) {
  const std::uint64_t count = binomial(n, k);
  if (count > cap) {
    throw EnumerationCapExceeded("C(" + std::to_string(n) + "," + std::to_string(k) +
                                 ") = " + std::to_string(count) +
                                 " exceeds the enumeration cap " + std::to_string(cap));
  }
}

void check_subset_shape(const DenseMatrix& a) {
  if (a.rows() < 1 || a.cols() < 1 || a.cols() > a.rows()) {
    throw DimensionError("submatrix enumeration needs 1 <= k <= n");
  }
}

}  // namespace

StiefelMatrix::StiefelMatrix(DenseMatrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() < 1 || entries_.cols() < 1 || entries_.cols() > entries_.rows()) {
    throw DimensionError("Stiefel matrix needs 1 <= k <= n, got " +
                         std::to_string(entries_.rows()) + "x" +
                         std::to_string(entries_.cols()));
  }
  require_finite(entries_);
  const double err = orthonormality_error(entries_);
  if (!(err <= kStiefelTolerance)) {
    throw NotOrthonormal("columns are not orthonormal: |A^T A - I|_max = " +
                         std::to_string(err));
  }
}

double orthonormality_error(const DenseMatrix& m) {
  const DenseMatrix gram = m.transpose() * m;
  return (gram - DenseMatrix::Identity(m.cols(), m.cols())).cwiseAbs().maxCoeff();
}

StiefelMatrix orthonormalize(const DenseMatrix& m, double tol) {
  if (m.rows() < 1 || m.cols() < 1) throw DimensionError("empty matrix");
  if (m.cols() > m.rows()) {
    throw DimensionError("cannot orthonormalize " + std::to_string(m.cols()) +
                         " columns in dimension " + std::to_string(m.rows()));
  }
  require_finite(m);
  const Eigen::JacobiSVD<DenseMatrix> svd(m);
  const double smallest = svd.singularValues().minCoeff();
  if (!(smallest > tol)) {
    throw RankDeficient("smallest singular value " + std::to_string(smallest) +
                        " does not exceed tolerance " + std::to_string(tol));
  }
  return StiefelMatrix(thin_q(m));
}

StiefelMatrix haar_sample(int n, int k, std::uint64_t seed) {
  if (k < 1 || n < k) {
    throw DimensionError("haar_sample needs 1 <= k <= n, got n=" + std::to_string(n) +
                         " k=" + std::to_string(k));
  }
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  DenseMatrix g(n, k);
  // Fill in row-major order so that the stream maps to entries predictably.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < k; ++j) g(i, j) = normal(gen);
  return orthonormalize(g, 0.0);
}

double sigma_min(const DenseMatrix& m) {
  if (m.rows() != m.cols() || m.rows() < 1) {
    throw DimensionError("sigma_min needs a non-empty square matrix, got " +
                         std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  switch (m.rows()) {
    case 1:
      return std::abs(m(0, 0));
    case 2:
      return sigma_min_2x2(m(0, 0), m(0, 1), m(1, 0), m(1, 1));
    default: {
      const DenseMatrix gram = m.transpose() * m;
      const Eigen::SelfAdjointEigenSolver<DenseMatrix> eig(gram, Eigen::EigenvaluesOnly);
      return std::sqrt(std::max(eig.eigenvalues().minCoeff(), 0.0));
    }
  }
}

DenseMatrix row_submatrix(const DenseMatrix& a, const RowSet& rows) {
  DenseMatrix out(static_cast<Eigen::Index>(rows.size()), a.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] < 0 || rows[i] >= a.rows()) {
      throw IndexError("row index " + std::to_string(rows[i]) + " out of range");
    }
    out.row(static_cast<Eigen::Index>(i)) = a.row(rows[i]);
  }
  return out;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    const std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
    // result * num / i is exact at every step; guard the multiplication.
    if (result > std::numeric_limits<std::uint64_t>::max() / num) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    result = result * num / static_cast<std::uint64_t>(i);
  }
  return result;
}

std::vector<SubsetValue> all_subset_sigmas(const DenseMatrix& a, std::uint64_t cap) {
  check_subset_shape(a);
  const int n = static_cast<int>(a.rows());
  const int k = static_cast<int>(a.cols());
  check_cap(n, k, cap);
  std::vector<SubsetValue> values;
  values.reserve(binomial(n, k));
  RowSet idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  do {
    values.push_back({idx, sigma_min(row_submatrix(a, idx))});
  } while (next_combination(idx, n));
  return values;
}

SubmatrixReport best_submatrix(const StiefelMatrix& a, std::uint64_t cap) {
  SubmatrixReport report;
  report.all_values = all_subset_sigmas(a.matrix(), cap);
  const SubsetValue* best = &report.all_values.front();
  for (const SubsetValue& v : report.all_values) {
    if (v.sigma_min > best->sigma_min) best = &v;
  }
  report.row_set = best->row_set;
  report.sigma_min = best->sigma_min;
  report.determinant = row_submatrix(a.matrix(), best->row_set).determinant();
  return report;
}

double best_sigma_min(const DenseMatrix& a, std::uint64_t cap) {
  check_subset_shape(a);
  const int n = static_cast<int>(a.rows());
  const int k = static_cast<int>(a.cols());
  check_cap(n, k, cap);
  double best = -1.0;
  if (k == 1) {
    for (int i = 0; i < n; ++i) best = std::max(best, std::abs(a(i, 0)));
    return best;
  }
  if (k == 2) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        best = std::max(best, sigma_min_2x2(a(i, 0), a(i, 1), a(j, 0), a(j, 1)));
    return best;
  }
  RowSet idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  do {
    best = std::max(best, sigma_min(row_submatrix(a, idx)));
  } while (next_combination(idx, n));
  return best;
}

double principal_angle(const StiefelMatrix& a, const RowSet& row_set) {
  if (static_cast<int>(row_set.size()) != a.k()) {
    throw IndexError("row set must have exactly k = " + std::to_string(a.k()) + " indices");
  }
  RowSet sorted = row_set;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw IndexError("row set has repeated indices");
  }
  const double s = sigma_min(row_submatrix(a.matrix(), row_set));
  return std::acos(std::clamp(s, 0.0, 1.0));
}

}  // namespace sbound
