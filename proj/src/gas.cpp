#include "blowup/gas.hpp"

#include <cmath>

#include "blowup/errors.hpp"

namespace blowup {

namespace {

// Raw flux in density coordinates: f'(rho) = K rho^m with
// K = ((gamma+1)/(gamma-1)) sqrt(A gamma), m = (gamma-1)/2.
FluxModel raw_gas_flux(double gamma, double A) {
  if (!(gamma > 1.0)) throw DomainError("gas: gamma must exceed 1");
  if (!(A > 0.0)) throw DomainError("gas: entropy constant A must be > 0");
  const double K = (gamma + 1.0) / (gamma - 1.0) * std::sqrt(A * gamma);
  const double m = 0.5 * (gamma - 1.0);
  auto guard = [](double rho) {
    if (!(rho > 0.0)) throw DomainError("gas flux: density must be > 0");
  };
  return FluxModel{
      [K, m, guard](double r) {
        guard(r);
        return K / (m + 1.0) * std::pow(r, m + 1.0);
      },
      [K, m, guard](double r) {
        guard(r);
        return K * std::pow(r, m);
      },
      [K, m, guard](double r) {
        guard(r);
        return K * m * std::pow(r, m - 1.0);
      },
      [K, m, guard](double r) {
        guard(r);
        return K * m * (m - 1.0) * std::pow(r, m - 2.0);
      },
      [K, m](double u) { return std::pow(u / K, 1.0 / m); },
  };
}

}  // namespace

InitialData arctan_density() {
  return InitialData{
      [](double x) { return 2.0 - std::atan(x); },
      [](double x) { return -1.0 / (1.0 + x * x); },
      [](double x) {
        const double q = 1.0 + x * x;
        return 2.0 * x / (q * q);
      },
      [](double x) {
        const double q = 1.0 + x * x;
        return (2.0 - 6.0 * x * x) / (q * q * q);
      },
  };
}

GasParams::GasParams() : rho0(arctan_density()) {}

double gas_characteristic_speed(const GasParams& p, double rho) {
  if (!(rho > 0.0)) {
    throw DomainError("gas_characteristic_speed: density must be > 0");
  }
  return (p.gamma + 1.0) / (p.gamma - 1.0) * std::sqrt(p.A * p.gamma) *
         std::pow(rho, 0.5 * (p.gamma - 1.0));
}

GasProblem build_gas_problem(const GasParams& p, Interval working) {
  const FluxModel flux_raw = raw_gas_flux(p.gamma, p.A);
  // The raw clock is irrelevant: the frame pins t0 = 1/u0'(0).
  const BlowupFrame frame = normalize_frame(flux_raw, p.rho0, 0.0, working);
  auto [flux_n, ic_n] = apply_frame(flux_raw, p.rho0, frame);
  return GasProblem{std::move(flux_n), std::move(ic_n), frame};
}

std::vector<SweepPoint> gas_convergence(const GasParams& p,
                                        std::span<const double> lambdas,
                                        double t_eval,
                                        std::span<const double> xs,
                                        Interval working) {
  const GasProblem prob = build_gas_problem(p, working);
  return convergence_sweep(prob.flux, prob.ic, prob.frame, lambdas, t_eval,
                           xs, working);
}

}  // namespace blowup
