#include "sbound/certify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

namespace sbound {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Tracks the largest violation seen so far and where it happened. Ties keep
// the first point in traversal order.
class Worst {
 public:
  void offer(double violation, std::vector<double> at) {
    if (violation > value_) {
      value_ = violation;
      witness_ = std::move(at);
    }
  }
  double value() const { return value_; }
  std::vector<double>& witness() { return witness_; }

 private:
  double value_ = kNegInf;
  std::vector<double> witness_;
};

CheckResult make_result(std::string name, Worst& worst, double tolerance,
                        std::uint64_t samples) {
  CheckResult r;
  r.name = std::move(name);
  r.max_violation = worst.value();
  r.tolerance = tolerance;
  r.passed = r.max_violation <= tolerance;
  if (!worst.witness().empty()) r.witness = std::move(worst.witness());
  r.samples_used = samples;
  return r;
}

void require_grid(int grid_n, int minimum, const char* what) {
  if (grid_n < minimum) {
    throw std::invalid_argument(std::string(what) + " needs a grid of at least " +
                                std::to_string(minimum) + " points, got " +
                                std::to_string(grid_n));
  }
}

// Evenly spaced point t_i on [lo, hi] with exact endpoints.
double lattice(double lo, double hi, int i, int count) {
  if (i == count - 1) return hi;
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
}

std::array<double, 2> ellipse_lhs(double alpha, double beta) {
  const double u = std::cos(alpha) * std::cos(beta);
  const double v = std::sin(alpha) * std::sin(beta);
  return {4.0 * u * u + (4.0 / 3.0) * v * v, (4.0 / 3.0) * u * u + 4.0 * v * v};
}

// Largest a² ± ab + b² over the sign choices (p12, p34) = (±u, ±v).
double transform_max_form(double alpha, double beta) {
  const double u = std::cos(alpha) * std::cos(beta);
  const double v = std::sin(alpha) * std::sin(beta);
  double best = kNegInf;
  for (double su : {1.0, -1.0}) {
    for (double sv : {1.0, -1.0}) {
      const double a = su * u + sv * v;
      const double b = su * u - sv * v;
      best = std::max({best, a * a + a * b + b * b, a * a - a * b + b * b});
    }
  }
  return best;
}

double simplex_value(double x, double y, double z) {
  const double sx = std::sin(x);
  const double sy = std::sin(y);
  const double sz = std::sin(z);
  return sx * sx + sy * sy + sz * sz;
}

constexpr double kSumTarget = 1.5 * kPi;
constexpr double kSumTolerance = 1e-9;
constexpr double kLevelTolerance = 1e-12;

// Positive when (x, y, z) contradicts one of the implications; −∞ when
// neither premise holds.
double implication_violation(double x, double y, double z) {
  const Eq3Sums s = eq3_sums(x, y, z);
  const double sum = x + y + z;
  double v = kNegInf;
  if (s.s_plus >= 1.0 - kLevelTolerance) v = std::max(v, sum - kSumTarget);
  if (s.s_minus >= 1.0 - kLevelTolerance) v = std::max(v, kSumTarget - sum);
  return v;
}

bool near_violation(double x, double y, double z) {
  const Eq3Sums s = eq3_sums(x, y, z);
  const double sum = x + y + z;
  const double level = 1.0 - 10.0 * kLevelTolerance;
  return (s.s_plus >= level && sum - kSumTarget > -10.0 * kSumTolerance) ||
         (s.s_minus >= level && kSumTarget - sum > -10.0 * kSumTolerance);
}

const std::vector<PlueckerCoords>& extremal_orbit() {
  static const std::vector<PlueckerCoords> orbit = [] {
    std::vector<PlueckerCoords> out;
    const DenseMatrix base = extremal_matrix();
    std::array<int, 4> perm{0, 1, 2, 3};
    do {
      for (int signs = 0; signs < 16; ++signs) {
        DenseMatrix m(4, 2);
        for (int i = 0; i < 4; ++i) {
          const double s = (signs >> i) & 1 ? -1.0 : 1.0;
          m.row(i) = s * base.row(perm[i]);
        }
        out.push_back(pluecker4x2(m));
        // A column sign change or column swap negates every minor.
        const PlueckerCoords p = out.back();
        out.push_back({-p.p12, -p.p13, -p.p14, -p.p23, -p.p24, -p.p34});
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
  }();
  return orbit;
}

}  // namespace

const CheckDetail* CheckResult::detail(const std::string& key) const {
  for (const CheckDetail& d : details)
    if (d.name == key) return &d;
  return nullptr;
}

DenseMatrix extremal_matrix() {
  const double a = std::sqrt(0.5);
  const double b = std::sqrt(0.125);
  const double c = std::sqrt(0.375);
  DenseMatrix m(4, 2);
  m << a, b,  //
      -a, b,  //
      0.0, c,  //
      0.0, c;
  return m;
}

CheckResult check_extremal_matrix(const DenseMatrix& candidate) {
  constexpr double kTol = 1e-14;
  Worst worst;
  if (candidate.rows() != 4 || candidate.cols() != 2 || !candidate.allFinite()) {
    worst.offer(std::numeric_limits<double>::infinity(), {});
    return make_result("extremal_matrix", worst, kTol, 0);
  }

  // Witness layout: {0, i, j} for a Gram entry, {1, i, j} for a row pair.
  const DenseMatrix gram = candidate.transpose() * candidate;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      worst.offer(std::abs(gram(i, j) - (i == j ? 1.0 : 0.0)), {0.0, double(i), double(j)});
  const double orth = worst.value();

  const std::vector<SubsetValue> sigmas = all_subset_sigmas(candidate);
  const SubsetValue* best = &sigmas.front();
  for (const SubsetValue& v : sigmas)
    if (v.sigma_min > best->sigma_min) best = &v;
  worst.offer(std::abs(best->sigma_min - 0.5),
              {1.0, double(best->row_set[0]), double(best->row_set[1])});

  // (|p12|, |p34|) over all row orderings: the values the top/bottom split
  // actually takes on this matrix.
  std::vector<std::array<double, 2>> pairs;
  std::array<int, 4> perm{0, 1, 2, 3};
  do {
    const PlueckerCoords p = pluecker4x2(row_submatrix(candidate, {perm[0], perm[1], perm[2], perm[3]}));
    const std::array<double, 2> pair{std::abs(p.p12), std::abs(p.p34)};
    const bool seen = std::any_of(pairs.begin(), pairs.end(), [&](const auto& q) {
      return std::abs(q[0] - pair[0]) <= 1e-12 && std::abs(q[1] - pair[1]) <= 1e-12;
    });
    if (!seen) pairs.push_back(pair);
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(pairs.begin(), pairs.end());

  CheckResult r = make_result("extremal_matrix", worst, kTol, sigmas.size());
  r.details.push_back({"orthonormality_error", {orth}});
  r.details.push_back({"max_sigma_min", {best->sigma_min}});
  r.details.push_back({"best_row_set", {double(best->row_set[0]), double(best->row_set[1])}});
  std::vector<double> subset_values;
  for (const SubsetValue& v : sigmas) subset_values.push_back(v.sigma_min);
  r.details.push_back({"subset_sigma_min", subset_values});
  std::vector<double> flat;
  for (const auto& p : pairs) flat.insert(flat.end(), p.begin(), p.end());
  r.details.push_back({"achievable_minor_pairs", flat});
  return r;
}

CheckResult check_extremal_matrix() { return check_extremal_matrix(extremal_matrix()); }

CheckResult check_ellipse_region(int grid_n) {
  require_grid(grid_n, 2, "check_ellipse_region");
  Worst worst;
  for (int i = 0; i < grid_n; ++i) {
    const double alpha = lattice(0.0, kPi / 6.0, i, grid_n);
    for (int j = 0; j < grid_n; ++j) {
      const double beta = lattice(kPi / 3.0, kPi / 2.0, j, grid_n);
      const auto lhs = ellipse_lhs(alpha, beta);
      worst.offer(std::max(lhs[0], lhs[1]) - 1.0, {alpha, beta});
    }
  }
  const double max_lhs = worst.value() + 1.0;
  CheckResult r = make_result("ellipse_region", worst, 1e-12,
                              static_cast<std::uint64_t>(grid_n) * grid_n);
  r.details.push_back({"max_lhs", {max_lhs}});
  return r;
}

CheckResult check_transform_bound(int grid_n) {
  require_grid(grid_n, 2, "check_transform_bound");
  double max_form = kNegInf;
  std::vector<double> at;
  for (int i = 0; i < grid_n; ++i) {
    const double alpha = lattice(0.0, kPi / 6.0, i, grid_n);
    for (int j = 0; j < grid_n; ++j) {
      const double beta = lattice(kPi / 3.0, kPi / 2.0, j, grid_n);
      const double f = transform_max_form(alpha, beta);
      if (f > max_form) {
        max_form = f;
        at = {alpha, beta};
      }
    }
  }
  Worst worst;
  worst.offer(std::abs(max_form - 0.75), at);
  CheckResult r = make_result("transform_bound", worst, 1e-12,
                              static_cast<std::uint64_t>(grid_n) * grid_n);

  // Which candidate constant the sweep actually attains.
  double verified = std::numeric_limits<double>::quiet_NaN();
  for (double candidate : {0.75, 1.5})
    if (std::abs(max_form - candidate) <= 1e-9) verified = candidate;
  r.details.push_back({"max_form", {max_form}});
  r.details.push_back({"verified_constant", {verified}});
  r.details.push_back({"slack_to_1.5", {1.5 - max_form}});
  return r;
}

CheckResult check_boundary_lemma(int grid_n) {
  require_grid(grid_n, 3, "check_boundary_lemma");
  const int m = grid_n - 1;
  const double step = (kPi / 2.0) / m;
  const double mesh = std::sqrt(2.0) * step;
  constexpr double kLipschitz = 2.0;
  const double margin = kLipschitz * mesh;

  Worst worst;
  double interior_max = kNegInf;
  double boundary_dev = 0.0;
  std::uint64_t samples = 0;
  for (int i = 0; i <= m; ++i) {
    for (int j = 0; i + j <= m; ++j) {
      const int l = m - i - j;
      const double x = step * i;
      const double y = step * j;
      const double z = step * l;
      const double f = simplex_value(x, y, z);
      ++samples;
      if (i == 0 || j == 0 || l == 0) {
        boundary_dev = std::max(boundary_dev, std::abs(f - 1.0));
        worst.offer(std::abs(f - 1.0), {x, y, z});
      } else {
        interior_max = std::max(interior_max, f);
        worst.offer(f - 1.0 - margin, {x, y, z});
      }
    }
  }
  CheckResult r = make_result("boundary_lemma", worst, 1e-12, samples);
  r.details.push_back({"interior_max", {interior_max}});
  r.details.push_back({"boundary_max_deviation", {boundary_dev}});
  r.details.push_back({"mesh_diameter", {mesh}});
  r.details.push_back({"lipschitz_margin", {margin}});
  return r;
}

CheckResult check_implications(int grid_n, int refinement_grid, int random_probes,
                               std::uint64_t seed) {
  require_grid(grid_n, 3, "check_implications");
  require_grid(refinement_grid, 2, "refinement");
  const double lo = kPi / 3.0;
  const double hi = 2.0 * kPi / 3.0;
  const double step = (hi - lo) / (grid_n - 1);

  Worst worst;
  std::uint64_t samples = 0;
  std::vector<std::array<double, 3>> near;
  for (int i = 0; i < grid_n; ++i) {
    const double x = lattice(lo, hi, i, grid_n);
    for (int j = 0; j < grid_n; ++j) {
      const double y = lattice(lo, hi, j, grid_n);
      for (int l = 0; l < grid_n; ++l) {
        const double z = lattice(lo, hi, l, grid_n);
        worst.offer(implication_violation(x, y, z), {x, y, z});
        ++samples;
        if (near_violation(x, y, z)) near.push_back({x, y, z});
      }
    }
  }

  // One level of local refinement around near-violations.
  for (const auto& c : near) {
    std::array<double, 3> a{};
    std::array<double, 3> b{};
    for (int d = 0; d < 3; ++d) {
      a[d] = std::max(lo, c[d] - step);
      b[d] = std::min(hi, c[d] + step);
    }
    for (int i = 0; i < refinement_grid; ++i) {
      const double x = lattice(a[0], b[0], i, refinement_grid);
      for (int j = 0; j < refinement_grid; ++j) {
        const double y = lattice(a[1], b[1], j, refinement_grid);
        for (int l = 0; l < refinement_grid; ++l) {
          const double z = lattice(a[2], b[2], l, refinement_grid);
          worst.offer(implication_violation(x, y, z), {x, y, z});
          ++samples;
        }
      }
    }
  }

  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> uniform(lo, hi);
  for (int p = 0; p < random_probes; ++p) {
    const double x = uniform(gen);
    const double y = uniform(gen);
    const double z = uniform(gen);
    worst.offer(implication_violation(x, y, z), {x, y, z});
    ++samples;
  }

  CheckResult r = make_result("implications", worst, kSumTolerance, samples);
  r.details.push_back({"refined_points", {static_cast<double>(near.size())}});
  return r;
}

EllipticParams contact_point() { return {1.0, kPi / 2.0, 1.0, kPi / 3.0, 1.0, 2.0 * kPi / 3.0}; }

double extremal_orbit_distance(const PlueckerCoords& p) {
  // Sign flips of the transformed variables are quotiented out by comparing
  // absolute values.
  const auto target = nonnegative_representative(to_transformed(p)).values();
  double best = std::numeric_limits<double>::infinity();
  for (const PlueckerCoords& q : extremal_orbit()) {
    const auto cand = nonnegative_representative(to_transformed(q)).values();
    double d = 0.0;
    for (int i = 0; i < 6; ++i) d = std::max(d, std::abs(cand[i] - target[i]));
    best = std::min(best, d);
  }
  return best;
}

CheckResult check_feasible_point(const EllipticParams& params, double bound) {
  const TransformedVars v = from_elliptic(params);
  const PlueckerCoords p = from_transformed(v);
  const Residuals res = invariant_residuals(p);
  const SystemReport sys = eval_system(v, bound);
  const double orbit = extremal_orbit_distance(p);

  double excess = kNegInf;
  for (double q : sys.qform_values) excess = std::max(excess, q - bound);
  double equality_gap = 0.0;
  for (int pair = 0; pair < 3; ++pair) {
    const double top = std::max(sys.qform_values[2 * pair], sys.qform_values[2 * pair + 1]);
    equality_gap = std::max(equality_gap, std::abs(top - bound));
  }

  const auto values = p.values();
  Worst worst;
  worst.offer(std::max({res.relation, res.normalization, excess, equality_gap, orbit}),
              std::vector<double>(values.begin(), values.end()));
  CheckResult r = make_result("feasible_point", worst, 1e-12, 1);
  r.details.push_back({"elliptic_params", {params.X, params.x, params.Y, params.y, params.Z, params.z}});
  r.details.push_back({"relation_residual", {res.relation}});
  r.details.push_back({"normalization_residual", {res.normalization}});
  r.details.push_back({"sphere_residuals", {sys.sphere1_residual, sys.sphere2_residual}});
  r.details.push_back({"qform_values",
                       std::vector<double>(sys.qform_values.begin(), sys.qform_values.end())});
  r.details.push_back({"bound", {bound}});
  r.details.push_back({"form_equality_gap", {equality_gap}});
  r.details.push_back({"extremal_orbit_distance", {orbit}});
  return r;
}

CheckResult check_feasible_point() { return check_feasible_point(contact_point()); }

CertificateReport run_all(const CertifyConfig& config) {
  CertificateReport report;
  report.config = config;
  CertifyConfig& c = report.config;
  c.ellipse_grid = std::max(c.ellipse_grid, 2);
  c.transform_grid = std::max(c.transform_grid, 2);
  c.lemma_grid = std::max(c.lemma_grid, 3);
  c.implication_grid = std::max(c.implication_grid, 3);
  c.refinement_grid = std::max(c.refinement_grid, 2);
  c.random_probes = std::max(c.random_probes, 0);

  report.checks.push_back(check_extremal_matrix());
  report.checks.push_back(check_ellipse_region(c.ellipse_grid));
  report.checks.push_back(check_transform_bound(c.transform_grid));
  report.checks.push_back(check_boundary_lemma(c.lemma_grid));
  report.checks.push_back(
      check_implications(c.implication_grid, c.refinement_grid, c.random_probes, c.seed));
  report.checks.push_back(check_feasible_point(contact_point(), c.bound));
  report.all_passed = std::all_of(report.checks.begin(), report.checks.end(),
                                  [](const CheckResult& r) { return r.passed; });
  return report;
}

}  // namespace sbound
