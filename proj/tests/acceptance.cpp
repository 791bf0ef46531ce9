// Acceptance harness: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "sbound/certify.hpp"
#include "sbound/csdecomp.hpp"
#include "sbound/figure.hpp"
#include "sbound/pluecker.hpp"
#include "sbound/stiefel.hpp"
#include "sbound/worstcase.hpp"

using namespace sbound;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool ok = true;
  std::string note;
};

struct Criterion {
  const char* id;
  const char* title;
  double time_limit_s;
  std::function<Outcome()> body;
};

void require(Outcome& o, bool cond, const std::string& what) {
  if (!cond && o.ok) {
    o.ok = false;
    o.note = what;
  }
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

Outcome ac1() {
  Outcome o;
  const CheckResult r = check_extremal_matrix();
  const double best = r.detail("max_sigma_min")->values.at(0);
  require(o, r.passed, "extremal check failed, violation " + fmt("%.3e", r.max_violation));
  require(o, std::abs(best - 0.5) <= 1e-14, "max sigma_min " + fmt("%.17g", best));
  o.note = o.ok ? "max sigma_min " + fmt("%.17g", best) : o.note;
  return o;
}

Outcome ac2() {
  Outcome o;
  double worst = 1.0;
  for (std::uint64_t seed = 0; seed < 100000; ++seed) {
    worst = std::min(worst, best_sigma_min(haar_sample(4, 2, seed).matrix()));
  }
  require(o, worst >= 0.5 - 1e-9, "min best sigma_min " + fmt("%.17g", worst));
  if (o.ok) o.note = "min over 1e5 samples " + fmt("%.12f", worst);
  return o;
}

Outcome ac3() {
  Outcome o;
  SearchParams p;
  p.seed = 7;
  const double v = multistart_search(4, 2, p).best_value;
  require(o, v >= 0.5 - 1e-6 && v <= 0.5 + 1e-4, "best_value " + fmt("%.17g", v));
  if (o.ok) o.note = "best_value " + fmt("%.12f", v);
  return o;
}

Outcome ac4() {
  Outcome o;
  std::string values;
  for (int n = 2; n <= 5; ++n) {
    const double v = multistart_search(n, 1, SearchParams{}).best_value;
    const double target = 1.0 / std::sqrt(static_cast<double>(n));
    require(o, std::abs(v - target) <= 1e-4,
            "n=" + std::to_string(n) + " best_value " + fmt("%.17g", v));
    values += " n=" + std::to_string(n) + ":" + fmt("%.3e", std::abs(v - target));
  }
  if (o.ok) o.note = "deviation from 1/sqrt(n)" + values;
  return o;
}

Outcome ac5() {
  Outcome o;
  const CertificateReport rep = run_all();
  for (const CheckResult& c : rep.checks) {
    require(o, c.passed, c.name + " violation " + fmt("%.3e", c.max_violation));
  }
  require(o, rep.all_passed, "report not all_passed");
  const CheckResult* t = nullptr;
  for (const CheckResult& c : rep.checks) {
    if (c.name == "transform_bound") t = &c;
  }
  require(o, t != nullptr, "transform_bound check missing");
  if (t != nullptr) {
    const double constant = t->detail("verified_constant")->values.at(0);
    const double max_form = t->detail("max_form")->values.at(0);
    require(o, constant == 0.75, "verified constant " + fmt("%.17g", constant));
    require(o, max_form <= 0.75 + 1e-12, "max form " + fmt("%.17g", max_form));
    if (o.ok) o.note = "constant 3/4, max form " + fmt("%.17g", max_form);
  }
  return o;
}

Outcome ac6() {
  Outcome o;
  double rel = 0, norm = 0, sphere = 0, recon = 0, minor = 0, invariance = 0;
  for (std::uint64_t seed = 0; seed < 10000; ++seed) {
    const StiefelMatrix a = haar_sample(4, 2, seed);
    const PlueckerCoords p = pluecker4x2(a);
    const Residuals r = invariant_residuals(p);
    rel = std::max(rel, r.relation);
    norm = std::max(norm, r.normalization);
    const SystemReport s = eval_system(to_transformed(p));
    sphere = std::max({sphere, s.sphere1_residual, s.sphere2_residual});
    const CSFactors f = cs_decompose(a);
    recon = std::max(recon, (cs_reconstruct(f) - a.matrix()).cwiseAbs().maxCoeff());
    minor = std::max({minor, std::abs(std::abs(p.p12) - std::cos(f.alpha) * std::cos(f.beta)),
                      std::abs(std::abs(p.p34) - std::sin(f.alpha) * std::sin(f.beta))});
    const DenseMatrix q = haar_sample(2, 2, seed + 1'000'000).matrix();
    const StiefelMatrix aq(a.matrix() * q);
    invariance = std::max(invariance, std::abs(objective(a) - objective(aq)));
  }
  require(o, rel < 1e-12, "relation residual " + fmt("%.3e", rel));
  require(o, norm < 1e-12, "normalization residual " + fmt("%.3e", norm));
  require(o, sphere < 1e-12, "sphere residual " + fmt("%.3e", sphere));
  require(o, recon < 1e-10, "CS reconstruction " + fmt("%.3e", recon));
  require(o, minor < 1e-10, "minor identity " + fmt("%.3e", minor));
  require(o, invariance < 1e-10, "right invariance " + fmt("%.3e", invariance));
  if (o.ok) {
    o.note = "max residuals: relation " + fmt("%.1e", rel) + " normalization " + fmt("%.1e", norm) +
             " sphere " + fmt("%.1e", sphere) + " cs " + fmt("%.1e", recon) + " minors " +
             fmt("%.1e", minor) + " invariance " + fmt("%.1e", invariance);
  }
  return o;
}

Outcome ac7() {
  Outcome o;
  std::mt19937_64 gen(2024);
  std::uniform_real_distribution<double> radius(0.0, 1.0);
  std::uniform_real_distribution<double> angle(kPi / 3, 2 * kPi / 3);
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const double r = radius(gen);
    const auto ab = elliptic_point(r, angle(gen));
    const double lhs = ab[0] * ab[0] + ab[0] * ab[1] + ab[1] * ab[1];
    worst = std::max(worst, std::abs(lhs - 0.75 * r * r));
  }
  require(o, worst < 1e-12, "residual " + fmt("%.3e", worst));
  if (o.ok) o.note = "max residual " + fmt("%.2e", worst);
  return o;
}

Outcome ac8() {
  Outcome o;
  const std::vector<FigureRow> rows = figure_eq3_data(101);
  std::size_t plus = 0, minus = 0, contact = 0;
  double worst = 0.0;
  for (const FigureRow& row : rows) {
    const Eq3Sums s = eq3_sums(row.x, row.y, row.z);
    if (row.surface == "plus") {
      ++plus;
      worst = std::max(worst, std::abs(s.s_plus - 1.0));
    } else if (row.surface == "minus") {
      ++minus;
      worst = std::max(worst, std::abs(s.s_minus - 1.0));
    } else {
      ++contact;
      worst = std::max({worst, std::abs(s.s_plus - 1.0), std::abs(s.s_minus - 1.0)});
    }
  }
  require(o, plus > 0 && minus > 0, "missing surface rows");
  require(o, worst <= 1e-9, "eq3 deviation " + fmt("%.3e", worst));
  // (x, y) grid nodes are π/3 + i·(π/3)/100, so π/3, π/2 and 2π/3 are all on the grid.
  std::array<double, 3> target{kPi / 3, kPi / 2, 2 * kPi / 3};
  std::sort(target.begin(), target.end());
  int found = 0;
  do {
    const bool hit = std::any_of(rows.begin(), rows.end(), [&](const FigureRow& r) {
      return r.surface == "contact" && std::abs(r.x - target[0]) <= 1e-6 &&
             std::abs(r.y - target[1]) <= 1e-6 && std::abs(r.z - target[2]) <= 1e-6;
    });
    require(o, hit, "no contact row near (" + fmt("%.6f", target[0]) + ", " +
                        fmt("%.6f", target[1]) + ", " + fmt("%.6f", target[2]) + ")");
    found += hit ? 1 : 0;
  } while (std::next_permutation(target.begin(), target.end()));
  if (o.ok) {
    o.note = std::to_string(plus) + " plus, " + std::to_string(minus) + " minus, " +
             std::to_string(contact) + " contact rows; " + std::to_string(found) +
             "/6 contact permutations; max deviation " + fmt("%.1e", worst);
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", "extremal matrix sharpness", 1e-3, ac1},
      {"AC2", "n=4 k=2 bound over 1e5 Haar samples", 30, ac2},
      {"AC3", "worst-case search reaches 1/2", 60, ac3},
      {"AC4", "k=1 search reaches 1/sqrt(n)", 60, ac4},
      {"AC5", "grid certificate", 300, ac5},
      {"AC6", "algebraic identities over 1e4 samples", 30, ac6},
      {"AC7", "elliptic quadratic form identity", 1e9, ac7},
      {"AC8", "figure level sets and contact points", 1e9, ac8},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && secs > c.time_limit_s) {
      o = {false, "took " + fmt("%.3f", secs) + " s, limit " + fmt("%g", c.time_limit_s) + " s"};
    }
    failures += o.ok ? 0 : 1;
    std::printf("%s %s: %s [%.3f s] %s\n", o.ok ? "PASS" : "FAIL", c.id, c.title, secs,
                o.note.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
