#pragma once

namespace blowup {

// The universal pre-blow-up wave profile w(t,x), defined implicitly for
// t <= 0 as the unique real solution of
//
//   x = w t - c w^3,        c > 0.
//
// The map w -> wt - cw^3 is strictly decreasing for t < 0 (and for t = 0
// away from w = 0), so w(t,x) is globally single-valued and strictly
// decreasing in x. At t = 0 it degenerates to the cusp law
// w = -sign(x) (|x|/c)^{1/3}.
struct UniversalProfile {
  double c = 1.0;  // cusp coefficient, > 0

  explicit UniversalProfile(double c_coeff);
};

// Evaluate w(t,x). Requires t <= 0.
//
// The closed-form root of the depressed cubic is polished with Newton steps
// until |x - (wt - cw^3)| <= 1e-12 * max(1,|x|); throws ConvergenceError if
// 50 steps do not reach that, DomainError for t > 0.
double eval_w(const UniversalProfile& profile, double t, double x);

// Same profile family with a different cusp coefficient. The two members
// are related by the exact scaling identity
//   sqrt(kappa) * eval_w({c}, t, x / sqrt(kappa)) == eval_w({c/kappa}, t, x)
// with kappa = c / c_new.
UniversalProfile rescale_profile(const UniversalProfile& profile,
                                 double c_new);

// dw/dx at x = 0 for t < 0; equals 1/t by implicit differentiation.
// Throws DomainError at t = 0, where the slope diverges (the blow-up).
double w_slope_at_origin(const UniversalProfile& profile, double t);

}  // namespace blowup
