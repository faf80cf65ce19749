#pragma once

#include <utility>

#include "blowup/field.hpp"
#include "blowup/flux.hpp"
#include "blowup/initial_data.hpp"

namespace blowup {

// Search range for the characteristic foot point x0.
struct Interval {
  double lo = -50.0;
  double hi = 50.0;
};

// Coordinate, state and Galilean shifts that place the first singularity of
// a problem at t = x = 0 with state value 0, plus the cusp coefficient of
// the resulting local cubic.
struct BlowupFrame {
  double t0 = 0.0;      // initial time in blow-up coordinates, = 1/u0'(0) < 0
  double x_shift = 0.0;  // x1: foot point of the blow-up characteristic
  double u_shift = 0.0;  // rho1: state value carried by that characteristic
  double v_shift = 0.0;  // v1: Galilean speed, = f'(rho1)
  double c = 0.0;        // u0'''(0) / (6 u0'(0)^4) > 0
};

// ---------------------------------------------------------------------------
// Exact classical solutions by the method of characteristics.
//
// All of these are pure functions; they recompute the blow-up time on each
// call. Grid evaluation should go through CharacteristicSolution below,
// which caches it and warm-starts the inversion.
// ---------------------------------------------------------------------------

// u(t,x) for u_t + u u_x = 0 with u(t0,.) = ic. Solves
// x = x0 + u0(x0)(t - t0) for the foot point and returns u0(x0).
double solve_burgers(const InitialData& ic, double t0, double t, double x,
                     Interval working = {});

// U(t,x) for U_t + f(U)_x = 0; characteristic speed is f'(U0(x0)).
double solve_general(const FluxModel& flux, const InitialData& ic, double t0,
                     double t, double x, Interval working = {});

// du/dx along the solved branch: u0'(x0) / (1 + u0'(x0)(t - t0)).
double spatial_derivative(const InitialData& ic, double t0, double t,
                          double x, Interval working = {});

// First crossing time t0 - 1/min u0', minimized over the working interval.
// Throws NoBlowupError when u0' >= 0 everywhere.
double blowup_time(const InitialData& ic, double t0, Interval working = {});

// Shift a raw problem into the blow-up frame. The four constants are
// solved sequentially: the minimizer x* of (f' o U0)' gives x_shift, the
// state there gives u_shift, the speed f' at that state gives v_shift, and
// t0 = 1/u0'(0) in the new coordinates. The returned frame satisfies the
// blow-up conditions with residuals below 1e-9.
BlowupFrame normalize_frame(const FluxModel& flux, const InitialData& ic_raw,
                            double t0_raw, Interval working = {});

// The transformed problem: U0n(x) = U0(x + x_shift) - u_shift and
// fn(U) = f(U + u_shift) - v_shift*U - f(u_shift), so fn'(0) = 0.
std::pair<FluxModel, InitialData> apply_frame(const FluxModel& flux,
                                              const InitialData& ic_raw,
                                              const BlowupFrame& frame);

// ---------------------------------------------------------------------------
// Cached solution object for grid sweeps and spectra.
// ---------------------------------------------------------------------------

class CharacteristicSolution : public WaveField {
 public:
  // state_data is U0; the characteristic speed is f' o U0.
  CharacteristicSolution(FluxModel flux, InitialData state_data, double t0,
                         Interval working = {});

  double initial_time() const { return t0_; }
  double blowup_time() const { return t_blowup_; }
  const FluxModel& flux() const { return flux_; }
  const InitialData& state_data() const { return state0_; }

  double state(double t, double x) const;  // U(t,x)
  double speed(double t, double x) const;  // u = f'(U)

  // Exact t- and x-dependent derivatives, order <= 2.
  double state_derivative(double t, double x, int order) const;
  double speed_derivative(double t, double x, int order) const;

  // WaveField: the state field U.
  double value(double t, double x) const override { return state(t, x); }
  double derivative(double t, double x, int order) const override {
    return state_derivative(t, x, order);
  }
  void sample_derivative(double t, std::span<const double> xs, int order,
                         std::span<double> out) const override;

 private:
  double invert(double t, double x, double seed) const;
  void check_time(double t) const;
  double state_derivative_at(double x0, double t, int order) const;

  FluxModel flux_;
  InitialData state0_;  // U0
  InitialData speed0_;  // u0 = f' o U0
  double t0_;
  double t_blowup_;
  Interval working_;
};

// Convenience: Burgers solution (quadratic flux), state == speed.
CharacteristicSolution burgers_solution(InitialData ic, double t0,
                                        Interval working = {});

}  // namespace blowup
