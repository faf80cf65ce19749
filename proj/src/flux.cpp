#include "blowup/flux.hpp"

#include <cmath>

#include "blowup/errors.hpp"

namespace blowup {

FluxModel quadratic_flux() {
  return FluxModel{
      [](double u) { return 0.5 * u * u; },
      [](double u) { return u; },
      [](double) { return 1.0; },
      [](double) { return 0.0; },
      [](double u) { return u; },
  };
}

FluxModel power_flux(int n) {
  if (n < 2) throw DomainError("power_flux: need n >= 2");
  const double nd = n;
  return FluxModel{
      [nd](double u) { return std::pow(u, nd) / nd; },
      [nd](double u) { return std::pow(u, nd - 1.0); },
      [nd](double u) { return (nd - 1.0) * std::pow(u, nd - 2.0); },
      [nd](double u) { return (nd - 1.0) * (nd - 2.0) * std::pow(u, nd - 3.0); },
      [nd](double u) {
        // branch through 0; for even n-1 take the principal branch u >= 0
        const double e = 1.0 / (nd - 1.0);
        return u < 0.0 ? -std::pow(-u, e) : std::pow(u, e);
      },
  };
}

InitialData compose_speed_data(const FluxModel& flux, const InitialData& u0) {
  auto f1 = flux.df, f2 = flux.d2f, f3 = flux.d3f;
  auto g0 = u0.u0, g1 = u0.d1, g2 = u0.d2, g3 = u0.d3;
  auto value = [f1, g0](double x) { return f1(g0(x)); };
  auto deriv1 = [f2, g0, g1](double x) { return f2(g0(x)) * g1(x); };
  auto deriv2 = [f2, f3, g0, g1, g2](double x) {
    const double U = g0(x), Up = g1(x);
    return f3(U) * Up * Up + f2(U) * g2(x);
  };
  auto deriv3 = [f2, f3, g0, g1, g2, g3](double x) {
    const double U = g0(x), Up = g1(x), Upp = g2(x);
    const double f4 = central_derivative(f3, U, 1e-5);
    return f4 * Up * Up * Up + 3.0 * f3(U) * Up * Upp + f2(U) * g3(x);
  };
  return InitialData{value, deriv1, deriv2, deriv3};
}

}  // namespace blowup
