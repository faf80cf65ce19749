#pragma once

#include <complex>
#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

#include "blowup/characteristics.hpp"
#include "blowup/flux.hpp"

namespace blowup {

using Evaluable = std::function<double(double t, double x)>;
using EvaluableK = std::function<std::complex<double>(double t, double k)>;

// Uniform-grid sampling of a wave profile at a fixed time.
struct SampledField {
  double t = 0.0;
  std::vector<double> xs;
  std::vector<double> values;

  // Validates: length >= 2, strictly increasing, spacing uniform to
  // 1e-12 relative to the grid magnitude.
  SampledField(double time, std::vector<double> grid,
               std::vector<double> vals);

  double spacing() const { return xs[1] - xs[0]; }
};

// Evenly spaced grid with n points covering [lo, hi].
std::vector<double> linspace(double lo, double hi, std::size_t n);

// G_lambda u (t,x) = lambda^{1/3} u(lambda^{-2/3} t, lambda^{-1} x).
// lambda > 0; sweeps restrict to lambda >= 1, fractional lambda is for
// group-law checks only.
double renorm_x(const Evaluable& u, double lambda, double t, double x);

// Curried form of renorm_x for composition.
Evaluable renorm_operator(Evaluable u, double lambda);

// Flux rescaling f_lambda(U) = lambda^{2/3} f(lambda^{-1/3} U). The
// quadratic flux U^2/2 is its fixed point.
FluxModel renorm_flux(const FluxModel& flux, double lambda);

// k-space operator: lambda^{4/3} uk(lambda^{-2/3} t, lambda k).
std::complex<double> renorm_k(const EvaluableK& uk, double lambda, double t,
                              double k);

struct SweepPoint {
  double lambda = 0.0;
  double sup_error = 0.0;
};

// G_lambda U(t_eval, .) sampled on xs for a cached solution.
std::vector<double> scaled_profile(const CharacteristicSolution& sol,
                                   double lambda, double t_eval,
                                   std::span<const double> xs);

// Limit profile w(t_eval, x) / f''(0) for the frame's cusp coefficient.
std::vector<double> target_profile(const BlowupFrame& frame, double f2_at_0,
                                   double t_eval, std::span<const double> xs);

// sup_x |G_lambda U(t_eval,x) - w(t_eval,x)/f''(0)| for each lambda.
// The problem (flux, ic) must already be in the blow-up frame. Throws
// DegenerateError when |f''(0)| < 1e-12 and DomainError for lambda < 1.
std::vector<SweepPoint> convergence_sweep(const FluxModel& flux,
                                          const InitialData& ic,
                                          const BlowupFrame& frame,
                                          std::span<const double> lambdas,
                                          double t_eval,
                                          std::span<const double> xs,
                                          Interval working = {});

// CSV rows "lambda,sup_error" with 17 significant digits.
void write_sweep_csv(std::ostream& out, std::span<const SweepPoint> sweep);

}  // namespace blowup
