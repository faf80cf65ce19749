#pragma once

#include "blowup/characteristics.hpp"
#include "blowup/flux.hpp"
#include "blowup/initial_data.hpp"
#include "blowup/renorm.hpp"

namespace blowup {

// Simple-wave flow of an ideal polytropic gas: pressure A rho^gamma, sound
// speed sqrt(A gamma) rho^{(gamma-1)/2}. The density rides characteristics
// with speed ((gamma+1)/(gamma-1)) sqrt(A gamma) rho^{(gamma-1)/2}.
struct GasParams {
  double gamma = 5.0 / 3.0;
  double A = 3.0 / 5.0;
  InitialData rho0;  // initial density, > 0 on the working interval

  GasParams();
};

// rho0(x) = 2 - arctan x with analytic derivatives.
InitialData arctan_density();

// ((gamma+1)/(gamma-1)) sqrt(A gamma) rho^{(gamma-1)/2}; DomainError for
// rho <= 0. For gamma = 5/3, A = 3/5 this is 4 rho^{1/3}.
double gas_characteristic_speed(const GasParams& p, double rho);

struct GasProblem {
  FluxModel flux;      // moving-frame flux, f'(0) = 0
  InitialData ic;      // density variation U0(x) = rho0(x + x1) - rho1
  BlowupFrame frame;   // t0, x1, rho1 (u_shift), v1 (v_shift), c
};

// Construct the blow-up-frame problem from (gamma, A, rho0). The frame
// constants are recovered numerically, nothing is hardcoded.
GasProblem build_gas_problem(const GasParams& p = {},
                             Interval working = {-20.0, 20.0});

// Convergence sweep of the gas problem against w(t,x)/f''(0).
std::vector<SweepPoint> gas_convergence(const GasParams& p,
                                        std::span<const double> lambdas,
                                        double t_eval,
                                        std::span<const double> xs,
                                        Interval working = {-20.0, 20.0});

}  // namespace blowup
