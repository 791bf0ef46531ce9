#include "sbound/worstcase.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "sbound/errors.hpp"

namespace sbound {
namespace {

// Rotation in the (i, j) coordinate plane applied from the left, followed by
// re-orthonormalization to stop rounding drift from accumulating.
DenseMatrix rotate_rows(const DenseMatrix& a, int i, int j, double angle) {
  DenseMatrix out = a;
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  out.row(i) = c * a.row(i) - s * a.row(j);
  out.row(j) = s * a.row(i) + c * a.row(j);
  return orthonormalize(out, 0.0).matrix();
}

}  // namespace

void validate(const SearchParams& p) {
  if (p.restarts < 0 || p.max_iters < 0 || !(p.initial_step > 0.0) || !(p.step_shrink > 0.0) ||
      !(p.step_shrink < 1.0) || !(p.stop_step > 0.0)) {
    throw std::invalid_argument(
        "search parameters need restarts, max_iters >= 0, positive steps and 0 < shrink < 1");
  }
}

double objective(const StiefelMatrix& a, std::uint64_t cap) { return best_sigma_min(a.matrix(), cap); }

DescentResult local_descent(const StiefelMatrix& start, const SearchParams& params) {
  validate(params);
  DenseMatrix current = start.matrix();
  double value = best_sigma_min(current);
  std::vector<double> trace{value};
  const int n = start.n();
  double step = params.initial_step;
  int iter = 0;

  while (iter < params.max_iters && step >= params.stop_step) {
    ++iter;
    double best_value = value;
    DenseMatrix best;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        for (double sign : {1.0, -1.0}) {
          DenseMatrix candidate = rotate_rows(current, i, j, sign * step);
          const double v = best_sigma_min(candidate);
          if (v < best_value) {
            best_value = v;
            best = std::move(candidate);
          }
        }
      }
    }
    if (best_value < value) {
      current = std::move(best);
      value = best_value;
      trace.push_back(value);
    } else {
      step *= params.step_shrink;
    }
  }
  return {StiefelMatrix(std::move(current)), value, iter, std::move(trace)};
}

WorstCaseResult multistart_search(int n, int k, const SearchParams& params) {
  validate(params);
  if (k < 1 || k > n - 1) {
    throw DimensionError("multistart_search needs 1 <= k <= n-1, got n=" + std::to_string(n) +
                         " k=" + std::to_string(k));
  }
  if (params.restarts < 1) throw std::invalid_argument("multistart_search needs restarts >= 1");

  std::vector<DescentResult> runs;
  runs.reserve(params.restarts);
  for (int r = 0; r < params.restarts; ++r) {
    runs.push_back(local_descent(haar_sample(n, k, params.seed + static_cast<std::uint64_t>(r)), params));
  }

  std::size_t best = 0;
  WorstCaseResult out{runs.front().matrix, runs.front().value, {}, {}};
  for (std::size_t r = 0; r < runs.size(); ++r) {
    out.per_restart_values.push_back(runs[r].value);
    out.iterations_used.push_back(runs[r].iterations);
    if (runs[r].value < runs[best].value) best = r;
  }
  out.best_matrix = runs[best].matrix;
  out.best_value = runs[best].value;
  return out;
}

}  // namespace sbound
