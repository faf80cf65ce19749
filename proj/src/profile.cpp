#include "blowup/profile.hpp"

#include <cmath>

#include "blowup/cubic.hpp"
#include "blowup/errors.hpp"

namespace blowup {

namespace {

constexpr double kResidualTol = 1e-12;  // relative to max(1,|x|)
constexpr int kNewtonCap = 50;

}  // namespace

UniversalProfile::UniversalProfile(double c_coeff) : c(c_coeff) {
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw DomainError("UniversalProfile: cusp coefficient c must be > 0");
  }
}

double eval_w(const UniversalProfile& profile, double t, double x) {
  if (!(t <= 0.0)) {
    throw DomainError("eval_w: classical solution exists only for t <= 0");
  }
  if (!std::isfinite(t) || !std::isfinite(x)) {
    throw DomainError("eval_w: non-finite argument");
  }
  if (x == 0.0) return 0.0;  // odd in x; exact root

  const double c = profile.c;

  // x = wt - cw^3  <=>  w^3 + p w + q = 0 with p = -t/c >= 0, q = x/c.
  double w;
  const double cubic_scale = std::cbrt(c * std::fabs(x));
  if (std::fabs(t) < 1e-10 * cubic_scale * cubic_scale) {
    // |t|^3 < 1e-30 c^2 x^2: the linear term is below the cancellation
    // floor, seed from the t = 0 cusp branch.
    w = -std::cbrt(x / c);
  } else {
    w = depressed_cubic_root(-t / c, x / c);
  }

  // Newton polish on f(w) = wt - cw^3 - x, f'(w) = t - 3cw^2 < 0 for t < 0.
  const double tol = kResidualTol * std::fmax(1.0, std::fabs(x));
  double residual = (w * t - c * w * w * w) - x;
  for (int i = 0; i < kNewtonCap && std::fabs(residual) > tol; ++i) {
    const double deriv = t - 3.0 * c * w * w;
    if (deriv == 0.0) break;  // only at t = 0, w = 0, handled above
    w -= residual / deriv;
    residual = (w * t - c * w * w * w) - x;
  }
  if (std::fabs(residual) > tol) {
    throw ConvergenceError("eval_w: residual tolerance not met");
  }
  return w;
}

UniversalProfile rescale_profile(const UniversalProfile& profile,
                                 double c_new) {
  (void)profile;
  if (!(c_new > 0.0) || !std::isfinite(c_new)) {
    throw DomainError("rescale_profile: c_new must be > 0");
  }
  return UniversalProfile(c_new);
}

double w_slope_at_origin(const UniversalProfile& profile, double t) {
  (void)profile;
  if (!(t < 0.0)) {
    throw DomainError(
        "w_slope_at_origin: slope diverges at t = 0 (blow-up) and the "
        "profile is undefined for t > 0");
  }
  // Implicit differentiation of x = wt - cw^3 at w = 0: dx/dw = t.
  return 1.0 / t;
}

}  // namespace blowup
