#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sbound/pluecker.hpp"
#include "sbound/stiefel.hpp"

namespace sbound {

/// The 4×2 matrix whose best 2×2 submatrix has σ_min exactly 1/2:
///   ( √(1/2)  √(1/8) )
///   (−√(1/2)  √(1/8) )
///   (   0     √(3/8) )
///   (   0     √(3/8) )
DenseMatrix extremal_matrix();

/// Auxiliary numbers attached to a check (tightness values, verified
/// constants). Scalars are stored as one-element vectors.
struct CheckDetail {
  std::string name;
  std::vector<double> values;
};

/// Outcome of one numerical check. `passed` holds iff max_violation ≤ tolerance;
/// `witness` is the point at which max_violation was attained.
struct CheckResult {
  std::string name;
  bool passed = false;
  double max_violation = 0.0;
  double tolerance = 0.0;
  std::optional<std::vector<double>> witness;
  std::uint64_t samples_used = 0;
  std::vector<CheckDetail> details;

  const CheckDetail* detail(const std::string& key) const;
};

struct CertifyConfig {
  int ellipse_grid = 1001;
  int transform_grid = 1001;
  int lemma_grid = 2001;
  int implication_grid = 201;
  int refinement_grid = 11;
  std::uint64_t seed = 0;
  // Extra uniformly random probes for the implication search; they can only
  // find violations the grid missed.
  int random_probes = 0;
  double bound = kDefaultFormBound;
};

struct CertificateReport {
  CertifyConfig config;
  std::vector<CheckResult> checks;
  bool all_passed = false;
};

/// Orthonormality within 1e-14, every 2×2 submatrix σ_min ≤ 1/2 + 1e-14 and
/// best σ_min = 1/2 within 1e-14. Accepts any 4×2 candidate (no validation).
CheckResult check_extremal_matrix(const DenseMatrix& candidate);
CheckResult check_extremal_matrix();

/// 4u² + (4/3)v² ≤ 1 and (4/3)u² + 4v² ≤ 1 with u = cos α cos β,
/// v = sin α sin β, over a grid of [0, π/6] × [π/3, π/2].
CheckResult check_ellipse_region(int grid_n);

/// Largest quadratic form a² ± ab + b² reachable through (p12, p34) = (±u, ±v)
/// on the same grid; must equal 3/4 and never exceed it.
CheckResult check_transform_bound(int grid_n);

/// sin²x + sin²y + sin²z ≤ 1 on the simplex x + y + z = π/2, checked on a
/// barycentric grid with a Lipschitz margin, and = 1 on its boundary.
CheckResult check_boundary_lemma(int grid_n);

/// Falsification search on [π/3, 2π/3]³:
///   s+ ≥ 1 ⇒ x + y + z ≤ 3π/2 and s− ≥ 1 ⇒ x + y + z ≥ 3π/2.
CheckResult check_implications(int grid_n, int refinement_grid = 11, int random_probes = 0,
                               std::uint64_t seed = 0);

/// Elliptic parameters of the contact point: X = Y = Z = 1,
/// (x, y, z) = (π/2, π/3, 2π/3).
EllipticParams contact_point();

/// Reconstructs Plücker coordinates from elliptic parameters and checks
/// Plücker relation, normalization, the quadratic-form bound (with equality in
/// each pair) and agreement with the extremal matrix up to its symmetries.
CheckResult check_feasible_point(const EllipticParams& params, double bound = kDefaultFormBound);
CheckResult check_feasible_point();

CertificateReport run_all(const CertifyConfig& config = {});

/// Distance from `p` to the closest Plücker vector of a matrix obtained from
/// the extremal one by row permutations and sign changes of rows and columns.
double extremal_orbit_distance(const PlueckerCoords& p);

}  // namespace sbound
