#include "blowup/renorm.hpp"

#include <cmath>
#include <ostream>
#include <utility>

#include "blowup/csv.hpp"
#include "blowup/errors.hpp"
#include "blowup/profile.hpp"

namespace blowup {

SampledField::SampledField(double time, std::vector<double> grid,
                           std::vector<double> vals)
    : t(time), xs(std::move(grid)), values(std::move(vals)) {
  if (xs.size() < 2 || xs.size() != values.size()) {
    throw DomainError("SampledField: need matching grids of length >= 2");
  }
  const double dx = xs[1] - xs[0];
  const double tol =
      1e-12 * std::fmax(1.0, std::fmax(std::fabs(xs.front()),
                                       std::fabs(xs.back())));
  for (std::size_t i = 1; i < xs.size(); ++i) {
    const double step = xs[i] - xs[i - 1];
    if (!(step > 0.0) || std::fabs(step - dx) > tol) {
      throw DomainError("SampledField: grid not uniformly increasing");
    }
  }
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  std::vector<double> xs(n);
  const double dx = (hi - lo) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    xs[i] = lo + dx * static_cast<double>(i);
  }
  xs.back() = hi;
  return xs;
}

double renorm_x(const Evaluable& u, double lambda, double t, double x) {
  if (!(lambda > 0.0)) {
    throw DomainError("renorm_x: lambda must be positive");
  }
  const double s = std::cbrt(lambda);
  return s * u(t / (s * s), x / lambda);
}

Evaluable renorm_operator(Evaluable u, double lambda) {
  if (!(lambda > 0.0)) {
    throw DomainError("renorm_operator: lambda must be positive");
  }
  return [u = std::move(u), lambda](double t, double x) {
    return renorm_x(u, lambda, t, x);
  };
}

FluxModel renorm_flux(const FluxModel& flux, double lambda) {
  if (!(lambda > 0.0)) {
    throw DomainError("renorm_flux: lambda must be positive");
  }
  const double s = std::cbrt(lambda);  // lambda^{1/3}
  auto f = flux.f, df = flux.df, d2f = flux.d2f, d3f = flux.d3f;
  auto g = flux.invert_df;
  return FluxModel{
      [f, s](double u) { return s * s * f(u / s); },
      [df, s](double u) { return s * df(u / s); },
      [d2f, s](double u) { return d2f(u / s); },
      [d3f, s](double u) { return d3f(u / s) / s; },
      [g, s](double u) { return s * g(u / s); },
  };
}

std::complex<double> renorm_k(const EvaluableK& uk, double lambda, double t,
                              double k) {
  if (!(lambda > 0.0)) {
    throw DomainError("renorm_k: lambda must be positive");
  }
  const double s = std::cbrt(lambda);
  return (s * s * s * s) * uk(t / (s * s), lambda * k);
}

std::vector<double> scaled_profile(const CharacteristicSolution& sol,
                                   double lambda, double t_eval,
                                   std::span<const double> xs) {
  const double s = std::cbrt(lambda);
  const double t_inner = t_eval / (s * s);
  std::vector<double> inner(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) inner[i] = xs[i] / lambda;
  std::vector<double> vals(xs.size());
  sol.sample_derivative(t_inner, inner, 0, vals);
  for (double& v : vals) v *= s;
  return vals;
}

std::vector<double> target_profile(const BlowupFrame& frame, double f2_at_0,
                                   double t_eval, std::span<const double> xs) {
  const UniversalProfile prof(frame.c);
  std::vector<double> vals(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    vals[i] = eval_w(prof, t_eval, xs[i]) / f2_at_0;
  }
  return vals;
}

std::vector<SweepPoint> convergence_sweep(const FluxModel& flux,
                                          const InitialData& ic,
                                          const BlowupFrame& frame,
                                          std::span<const double> lambdas,
                                          double t_eval,
                                          std::span<const double> xs,
                                          Interval working) {
  const double f2 = flux.d2f(0.0);
  if (std::fabs(f2) < 1e-12) {
    throw DegenerateError("convergence_sweep: f''(0) vanishes");
  }
  if (!(t_eval >= frame.t0 && t_eval < 0.0)) {
    throw DomainError("convergence_sweep: t_eval must lie in [t0, 0)");
  }
  for (double lambda : lambdas) {
    if (!(lambda >= 1.0)) {
      throw DomainError("convergence_sweep: lambda must be >= 1");
    }
  }

  const CharacteristicSolution sol(flux, ic, frame.t0, working);
  const std::vector<double> target = target_profile(frame, f2, t_eval, xs);

  std::vector<SweepPoint> out;
  out.reserve(lambdas.size());
  for (double lambda : lambdas) {
    const std::vector<double> scaled =
        scaled_profile(sol, lambda, t_eval, xs);
    double sup = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      sup = std::fmax(sup, std::fabs(scaled[i] - target[i]));
    }
    if (!std::isfinite(sup)) {
      throw ConvergenceError("convergence_sweep: non-finite error");
    }
    out.push_back({lambda, sup});
  }
  return out;
}

void write_sweep_csv(std::ostream& out, std::span<const SweepPoint> sweep) {
  out << "lambda,sup_error\n";
  for (const SweepPoint& p : sweep) {
    out << format_double(p.lambda, 17) << ','
        << format_double(p.sup_error, 17) << '\n';
  }
}

}  // namespace blowup
