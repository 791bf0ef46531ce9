#pragma once

#include <cstdint>
#include <vector>

#include "sbound/stiefel.hpp"

namespace sbound {

struct SearchParams {
  int restarts = 64;
  int max_iters = 2000;
  double initial_step = 0.3;  // radians
  double step_shrink = 0.5;
  double stop_step = 1e-7;  // radians
  std::uint64_t seed = 0;
};

/// Throws std::invalid_argument unless every field is positive and
/// step_shrink < 1 (max_iters = 0 and restarts = 0 are accepted).
void validate(const SearchParams& params);

struct DescentResult {
  StiefelMatrix matrix;
  double value = 0.0;
  int iterations = 0;
  // Objective after each accepted move, starting with the initial value.
  std::vector<double> trace;
};

struct WorstCaseResult {
  StiefelMatrix best_matrix;
  double best_value = 0.0;
  std::vector<double> per_restart_values;
  std::vector<int> iterations_used;
};

/// max over k-row subsets of σ_min; well-defined on the Grassmannian.
double objective(const StiefelMatrix& a, std::uint64_t cap = kDefaultEnumerationCap);

/// Pattern search over ambient Givens rotations G(i, j, ±θ)·A. Each iteration
/// tries every coordinate pair and both signs, moves to the best strict
/// decrease, and otherwise shrinks θ. Stops after max_iters iterations or once
/// θ < stop_step.
DescentResult local_descent(const StiefelMatrix& start, const SearchParams& params);

/// local_descent from haar_sample(n, k, seed + r) for r < restarts; the
/// lowest value wins, ties to the lower restart index.
WorstCaseResult multistart_search(int n, int k, const SearchParams& params);

}  // namespace sbound
