#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sbound {

/// One CSV row: surface is "plus", "minus" or "contact".
struct FigureRow {
  std::string surface;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

inline constexpr double kRootTolerance = 1e-12;
inline constexpr double kContactTolerance = 1e-6;

/// Level sets s±(x, y, z) = 1 over (x, y) on a resolution × resolution grid of
/// [π/3, 2π/3]², solved for every z ∈ [π/3, 2π/3] by bisection on the
/// intervals where the z term is monotone. Rows are grouped: all "plus", then
/// all "minus", then "contact" rows where both surfaces meet within
/// kContactTolerance in z. Throws std::invalid_argument if resolution < 2.
std::vector<FigureRow> figure_eq3_data(int resolution);

/// All z ∈ [π/3, 2π/3] with sin²(x + s) + sin²(y + s) + sin²(z + s) = 1,
/// s = +π/3 for the plus surface and −π/3 for minus.
std::vector<double> eq3_roots(double x, double y, bool plus);

/// Header "surface,x,y,z", LF line endings, 17 significant digits.
void write_figure_csv(std::ostream& out, const std::vector<FigureRow>& rows);
std::string figure_csv(const std::vector<FigureRow>& rows);

}  // namespace sbound
