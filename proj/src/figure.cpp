#include "sbound/figure.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "sbound/matrix_io.hpp"

namespace sbound {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLo = kPi / 3.0;
constexpr double kHi = 2.0 * kPi / 3.0;

double sin_sq(double t) {
  const double s = std::sin(t);
  return s * s;
}

double grid_point(int i, int resolution) {
  if (i == resolution - 1) return kHi;
  return kLo + (kHi - kLo) * static_cast<double>(i) / (resolution - 1);
}

}  // namespace

std::vector<double> eq3_roots(double x, double y, bool plus) {
  const double shift = plus ? kPi / 3.0 : -kPi / 3.0;
  const double base = sin_sq(x + shift) + sin_sq(y + shift);
  const auto h = [&](double z) { return base + sin_sq(z + shift) - 1.0; };

  // sin²(z + shift) is monotone between consecutive zeros of sin(2(z + shift)).
  std::vector<double> cuts{kLo};
  for (int m = -4; m <= 4; ++m) {
    const double c = m * kPi / 2.0 - shift;
    if (c > kLo && c < kHi) cuts.push_back(c);
  }
  cuts.push_back(kHi);
  std::sort(cuts.begin(), cuts.end());

  std::vector<double> roots;
  const auto add = [&](double z) {
    if (roots.empty() || std::abs(roots.back() - z) > kRootTolerance) roots.push_back(z);
  };
  for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
    double a = cuts[s];
    double b = cuts[s + 1];
    double ha = h(a);
    const double hb = h(b);
    if (std::abs(ha) <= kRootTolerance) {
      add(a);
      continue;
    }
    if (std::abs(hb) <= kRootTolerance) {
      add(b);
      continue;
    }
    if ((ha < 0.0) == (hb < 0.0)) continue;
    while (b - a > kRootTolerance) {
      const double mid = 0.5 * (a + b);
      const double hm = h(mid);
      if ((hm < 0.0) == (ha < 0.0)) {
        a = mid;
        ha = hm;
      } else {
        b = mid;
      }
    }
    add(0.5 * (a + b));
  }
  return roots;
}

std::vector<FigureRow> figure_eq3_data(int resolution) {
  if (resolution < 2) throw std::invalid_argument("figure resolution must be at least 2");
  std::vector<FigureRow> plus_rows;
  std::vector<FigureRow> minus_rows;
  std::vector<FigureRow> contact_rows;
  for (int i = 0; i < resolution; ++i) {
    const double x = grid_point(i, resolution);
    for (int j = 0; j < resolution; ++j) {
      const double y = grid_point(j, resolution);
      const std::vector<double> zp = eq3_roots(x, y, true);
      const std::vector<double> zm = eq3_roots(x, y, false);
      for (double z : zp) plus_rows.push_back({"plus", x, y, z});
      for (double z : zm) minus_rows.push_back({"minus", x, y, z});
      for (double a : zp) {
        for (double b : zm) {
          if (std::abs(a - b) <= kContactTolerance) contact_rows.push_back({"contact", x, y, 0.5 * (a + b)});
        }
      }
    }
  }
  std::vector<FigureRow> rows = std::move(plus_rows);
  rows.insert(rows.end(), minus_rows.begin(), minus_rows.end());
  rows.insert(rows.end(), contact_rows.begin(), contact_rows.end());
  return rows;
}

void write_figure_csv(std::ostream& out, const std::vector<FigureRow>& rows) {
  out << "surface,x,y,z\n";
  for (const FigureRow& r : rows) {
    out << r.surface << ',' << format_double(r.x) << ',' << format_double(r.y) << ','
        << format_double(r.z) << '\n';
  }
}

std::string figure_csv(const std::vector<FigureRow>& rows) {
  std::ostringstream out;
  write_figure_csv(out, rows);
  return out.str();
}

}  // namespace sbound
