#include "blowup/linefit.hpp"

#include <cmath>

#include "blowup/errors.hpp"

namespace blowup {

LineFit fit_line(std::span<const double> xs, std::span<const double> ys) {
  const std::size_t n = xs.size();
  if (n < 2 || ys.size() != n) {
    throw RankError("fit_line: need at least two matched points");
  }
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);

  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = xs[i] - mx;
    sxx += dx * dx;
    sxy += dx * (ys[i] - my);
  }
  const double scale = std::fmax(1.0, mx * mx);
  if (!(sxx > 1e-30 * scale * static_cast<double>(n))) {
    throw RankError("fit_line: degenerate abscissae");
  }

  LineFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.residuals.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    fit.residuals[i] = ys[i] - (fit.intercept + fit.slope * xs[i]);
  }
  return fit;
}

}  // namespace blowup
