#pragma once

#include <span>
#include <vector>

namespace blowup {

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  std::vector<double> residuals;  // y_i - (intercept + slope x_i)
};

// Ordinary least-squares line. Throws RankError when fewer than two points
// or the abscissae are degenerate.
LineFit fit_line(std::span<const double> xs, std::span<const double> ys);

}  // namespace blowup
