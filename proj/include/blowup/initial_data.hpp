#pragma once

#include <functional>
#include <string>
#include <vector>

namespace blowup {

using RealFn = std::function<double(double)>;

// Smooth initial condition u0 (or U0) together with its first three
// derivatives. Evaluables must be thread-safe; the solvers call them from
// grid loops without synchronization.
struct InitialData {
  RealFn u0;
  RealFn d1;
  RealFn d2;
  RealFn d3;

  double operator()(double x) const { return u0(x); }
};

// u0(x) = -(sqrt(pi)/2) erf x. Odd, already in blow-up-frame form:
// u0(0) = 0, u0'(0) = -1, u0''(0) = 0, u0'''(0) = 2.
InitialData erf_initial_data();

// Odd polynomial u0(x) = c1 x + c3 x^3 + c5 x^5 + ...
// `odd_coeffs` lists c1, c3, c5, ... in order.
InitialData polynomial_initial_data(const std::vector<double>& odd_coeffs);

// u0(x) = slope * x.
InitialData linear_initial_data(double slope);

// Wrap a plain callable; derivatives by 4th-order central differences with
// steps 1e-5, 1e-4, 1e-3 for orders 1, 2, 3.
InitialData initial_data_from_function(RealFn u0);

// Finite-difference derivative of `f` at `x`, 4th-order central stencil.
// Used for the composition third derivative and as a test oracle.
double central_derivative(const RealFn& f, double x, double step);

}  // namespace blowup
