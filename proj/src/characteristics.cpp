#include "blowup/characteristics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "blowup/errors.hpp"

namespace blowup {

namespace {

constexpr double kResidualTol = 1e-12;  // characteristic equation, relative
constexpr double kBlowupGuard = 1e-14;  // pre-blow-up time guard
constexpr int kScanPoints = 4096;
constexpr double kFrameTol = 1e-9;
constexpr double kInf = std::numeric_limits<double>::infinity();

double clamp_to(double v, Interval w) { return std::clamp(v, w.lo, w.hi); }

// Root of F(x0) = x0 + u0(x0) dt - x inside `working`. F is strictly
// increasing for pre-blow-up dt, so a sign-changing bracket pins the root;
// bisection to 1e-13 bracket width, then Newton polish on the residual.
double invert_characteristic(const InitialData& u0, double dt, double x,
                             Interval working, double seed) {
  const double res_tol = kResidualTol * std::fmax(1.0, std::fabs(x));
  auto F = [&](double x0) { return (x0 - x) + u0.u0(x0) * dt; };

  double lo = clamp_to(seed, working);
  double hi = lo;
  double flo = F(lo);
  double fhi = flo;
  double step = 0.5;
  while (flo > 0.0) {  // root lies to the left
    if (lo <= working.lo) {
      throw BracketError("characteristic foot point below working interval");
    }
    hi = lo;
    fhi = flo;
    lo = std::fmax(working.lo, lo - step);
    flo = F(lo);
    step *= 2.0;
  }
  step = 0.5;
  while (fhi < 0.0) {  // root lies to the right
    if (hi >= working.hi) {
      throw BracketError("characteristic foot point above working interval");
    }
    lo = hi;
    flo = fhi;
    hi = std::fmin(working.hi, hi + step);
    fhi = F(hi);
    step *= 2.0;
  }

  double mid = 0.5 * (lo + hi);
  for (int i = 0; i < 120; ++i) {
    const double width_tol =
        1e-13 * std::fmax(1.0, std::fmax(std::fabs(lo), std::fabs(hi)));
    if (hi - lo <= width_tol) break;
    mid = 0.5 * (lo + hi);
    const double fmid = F(mid);
    if (fmid == 0.0) break;
    if (fmid < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }

  // polish to the rounding floor so grid consumers see a smooth map; the
  // contract tolerance below is the error threshold, not the stop rule
  const double floor_tol = 1e-15 * std::fmax(1.0, std::fabs(x));
  double x0 = mid;
  double residual = F(x0);
  for (int i = 0; i < 50 && std::fabs(residual) > floor_tol; ++i) {
    const double deriv = 1.0 + u0.d1(x0) * dt;
    if (!(deriv > 0.0)) break;
    const double step = residual / deriv;
    x0 -= step;
    residual = F(x0);
    if (std::fabs(step) <= 1e-16 * std::fmax(1.0, std::fabs(x0))) break;
  }
  if (std::fabs(residual) > res_tol) {
    throw ConvergenceError("characteristic inversion residual not met");
  }
  return x0;
}

struct SlopeMinimum {
  double x = 0.0;
  double slope = 0.0;
};

// Global minimum of u0' over the working interval: 4096-point scan, then
// Newton on u0'' = 0 with a golden-section fallback for flat or
// non-convex neighborhoods.
SlopeMinimum find_min_slope(const InitialData& u0, Interval working) {
  const int n = kScanPoints;
  const double span = working.hi - working.lo;
  double best_x = working.lo;
  double best_v = kInf;
  for (int i = 0; i < n; ++i) {
    const double x = working.lo + span * i / (n - 1);
    const double v = u0.d1(x);
    if (v < best_v) {
      best_v = v;
      best_x = x;
    }
  }
  const double h = span / (n - 1);
  const double a = std::fmax(working.lo, best_x - h);
  const double b = std::fmin(working.hi, best_x + h);

  double xc = best_x;
  bool converged = false;
  for (int i = 0; i < 60; ++i) {
    const double grad = u0.d2(xc);
    const double curv = u0.d3(xc);
    if (!std::isfinite(grad) || !(curv > 0.0)) break;
    const double step = grad / curv;
    const double next = xc - step;
    if (next < a || next > b) break;
    xc = next;
    if (std::fabs(step) <= 1e-12 * std::fmax(1.0, std::fabs(xc))) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    // golden-section on u0' over [a, b]
    const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double lo = a, hi = b;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = u0.d1(x1);
    double f2 = u0.d1(x2);
    for (int i = 0; i < 100 && hi - lo > 1e-13; ++i) {
      if (f1 <= f2) {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - inv_phi * (hi - lo);
        f1 = u0.d1(x1);
      } else {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + inv_phi * (hi - lo);
        f2 = u0.d1(x2);
      }
    }
    xc = 0.5 * (lo + hi);
  }
  const double refined = u0.d1(xc);
  if (refined <= best_v + 0.0) {
    return {xc, refined};
  }
  return {best_x, best_v};
}

double blowup_time_or_inf(const InitialData& u0, double t0, Interval working) {
  const SlopeMinimum m = find_min_slope(u0, working);
  if (m.slope >= 0.0) return kInf;
  return t0 - 1.0 / m.slope;
}

void require_pre_blowup(double t, double t0, double t_blowup) {
  if (t < t0) {
    throw DomainError("evaluation before the initial time");
  }
  if (std::isfinite(t_blowup) &&
      t >= t_blowup - kBlowupGuard * std::fmax(1.0, std::fabs(t_blowup))) {
    throw PostBlowupError("classical solution ends at the blow-up time");
  }
}

}  // namespace

double solve_burgers(const InitialData& ic, double t0, double t, double x,
                     Interval working) {
  require_pre_blowup(t, t0, blowup_time_or_inf(ic, t0, working));
  const double x0 = invert_characteristic(ic, t - t0, x, working, x);
  return ic.u0(x0);
}

double solve_general(const FluxModel& flux, const InitialData& ic, double t0,
                     double t, double x, Interval working) {
  const InitialData u0 = compose_speed_data(flux, ic);
  require_pre_blowup(t, t0, blowup_time_or_inf(u0, t0, working));
  const double x0 = invert_characteristic(u0, t - t0, x, working, x);
  return ic.u0(x0);
}

double spatial_derivative(const InitialData& ic, double t0, double t,
                          double x, Interval working) {
  require_pre_blowup(t, t0, blowup_time_or_inf(ic, t0, working));
  const double x0 = invert_characteristic(ic, t - t0, x, working, x);
  const double denom = 1.0 + ic.d1(x0) * (t - t0);
  if (!(denom > 0.0)) {
    throw PostBlowupError("characteristic denominator vanished");
  }
  return ic.d1(x0) / denom;
}

double blowup_time(const InitialData& ic, double t0, Interval working) {
  const double tb = blowup_time_or_inf(ic, t0, working);
  if (!std::isfinite(tb)) {
    throw NoBlowupError("u0' >= 0 on the working interval");
  }
  return tb;
}

BlowupFrame normalize_frame(const FluxModel& flux, const InitialData& ic_raw,
                            double t0_raw, Interval working) {
  (void)t0_raw;  // the frame constants do not depend on the raw clock
  const InitialData u0_raw = compose_speed_data(flux, ic_raw);
  const SlopeMinimum m = find_min_slope(u0_raw, working);
  if (m.slope >= 0.0) {
    throw NoBlowupError("u0' >= 0 on the working interval");
  }
  const double third = u0_raw.d3(m.x);
  if (third <= 1e-8) {
    throw DegenerateError(
        "u0''' <= 0 at the slope minimizer: higher-order catastrophe");
  }

  BlowupFrame frame;
  frame.x_shift = m.x;
  frame.u_shift = ic_raw.u0(m.x);
  frame.v_shift = u0_raw.u0(m.x);
  frame.t0 = 1.0 / m.slope;
  frame.c = third / (6.0 * m.slope * m.slope * m.slope * m.slope);

  // Blow-up conditions in the new coordinates.
  auto [flux_n, ic_n] = apply_frame(flux, ic_raw, frame);
  const InitialData u0_n = compose_speed_data(flux_n, ic_n);
  const double r_value = std::fabs(u0_n.u0(0.0));
  const double r_slope = std::fabs(u0_n.d1(0.0) * frame.t0 - 1.0);
  const double r_curv = std::fabs(u0_n.d2(0.0));
  if (r_value > kFrameTol || r_slope > kFrameTol || r_curv > kFrameTol ||
      !(u0_n.d3(0.0) > 0.0)) {
    throw ConvergenceError("blow-up frame residuals exceed tolerance");
  }
  return frame;
}

std::pair<FluxModel, InitialData> apply_frame(const FluxModel& flux,
                                              const InitialData& ic_raw,
                                              const BlowupFrame& frame) {
  const double x1 = frame.x_shift;
  const double r1 = frame.u_shift;
  const double v1 = frame.v_shift;
  const double f_at_r1 = flux.f(r1);

  auto f = flux.f, df = flux.df, d2f = flux.d2f, d3f = flux.d3f;
  auto g = flux.invert_df;
  FluxModel flux_n{
      [f, r1, v1, f_at_r1](double U) { return f(U + r1) - v1 * U - f_at_r1; },
      [df, r1, v1](double U) { return df(U + r1) - v1; },
      [d2f, r1](double U) { return d2f(U + r1); },
      [d3f, r1](double U) { return d3f(U + r1); },
      [g, r1, v1](double u) { return g(u + v1) - r1; },
  };

  auto s0 = ic_raw.u0, s1 = ic_raw.d1, s2 = ic_raw.d2, s3 = ic_raw.d3;
  InitialData ic_n{
      [s0, x1, r1](double x) { return s0(x + x1) - r1; },
      [s1, x1](double x) { return s1(x + x1); },
      [s2, x1](double x) { return s2(x + x1); },
      [s3, x1](double x) { return s3(x + x1); },
  };
  return {std::move(flux_n), std::move(ic_n)};
}

CharacteristicSolution::CharacteristicSolution(FluxModel flux,
                                               InitialData state_data,
                                               double t0, Interval working)
    : flux_(std::move(flux)),
      state0_(std::move(state_data)),
      speed0_(compose_speed_data(flux_, state0_)),
      t0_(t0),
      working_(working) {
  t_blowup_ = blowup_time_or_inf(speed0_, t0_, working_);
}

void CharacteristicSolution::check_time(double t) const {
  require_pre_blowup(t, t0_, t_blowup_);
}

double CharacteristicSolution::invert(double t, double x, double seed) const {
  return invert_characteristic(speed0_, t - t0_, x, working_, seed);
}

double CharacteristicSolution::state(double t, double x) const {
  check_time(t);
  return state0_.u0(invert(t, x, x));
}

double CharacteristicSolution::speed(double t, double x) const {
  check_time(t);
  return speed0_.u0(invert(t, x, x));
}

double CharacteristicSolution::state_derivative_at(double x0, double t,
                                                   int order) const {
  const double dt = t - t0_;
  switch (order) {
    case 0:
      return state0_.u0(x0);
    case 1: {
      const double denom = 1.0 + speed0_.d1(x0) * dt;
      return state0_.d1(x0) / denom;
    }
    case 2: {
      const double denom = 1.0 + speed0_.d1(x0) * dt;
      const double d2 = denom * denom;
      return state0_.d2(x0) / d2 -
             state0_.d1(x0) * speed0_.d2(x0) * dt / (d2 * denom);
    }
    default:
      throw DomainError("state_derivative: order must be 0, 1 or 2");
  }
}

double CharacteristicSolution::state_derivative(double t, double x,
                                                int order) const {
  check_time(t);
  return state_derivative_at(invert(t, x, x), t, order);
}

double CharacteristicSolution::speed_derivative(double t, double x,
                                                int order) const {
  check_time(t);
  const double x0 = invert(t, x, x);
  const double dt = t - t0_;
  switch (order) {
    case 0:
      return speed0_.u0(x0);
    case 1:
      return speed0_.d1(x0) / (1.0 + speed0_.d1(x0) * dt);
    case 2: {
      const double denom = 1.0 + speed0_.d1(x0) * dt;
      return speed0_.d2(x0) / (denom * denom * denom);
    }
    default:
      throw DomainError("speed_derivative: order must be 0, 1 or 2");
  }
}

void CharacteristicSolution::sample_derivative(double t,
                                               std::span<const double> xs,
                                               int order,
                                               std::span<double> out) const {
  check_time(t);
  if (order < 0 || order > 2) {
    throw DomainError("sample_derivative: order must be 0, 1 or 2");
  }
  const double dt = t - t0_;
  const double tol_scale = kResidualTol;
  bool have_seed = false;
  double seed = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double x = xs[i];
    double x0 = have_seed ? seed : x;
    // warm-started Newton; the previous foot point is an excellent seed on
    // an ascending grid
    const double res_tol = tol_scale * std::fmax(1.0, std::fabs(x));
    bool done = false;
    for (int it = 0; it < 16; ++it) {
      const double residual = (x0 - x) + speed0_.u0(x0) * dt;
      if (std::fabs(residual) <= res_tol) {
        done = true;
        break;
      }
      const double deriv = 1.0 + speed0_.d1(x0) * dt;
      if (!(deriv > 0.0)) break;
      const double next = x0 - residual / deriv;
      if (next < working_.lo || next > working_.hi) break;
      x0 = next;
    }
    if (!done) {
      x0 = invert(t, x, have_seed ? seed : x);
    }
    seed = x0;
    have_seed = true;
    out[i] = state_derivative_at(x0, t, order);
  }
}

CharacteristicSolution burgers_solution(InitialData ic, double t0,
                                        Interval working) {
  return CharacteristicSolution(quadratic_flux(), std::move(ic), t0, working);
}

}  // namespace blowup
