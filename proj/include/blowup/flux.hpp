#pragma once

#include "blowup/initial_data.hpp"

namespace blowup {

// Flux of a scalar conservation law U_t + f(U)_x = 0, with derivatives and
// a local inverse g of f' (so g(f'(U)) = U on the branch around the working
// state). In blow-up-frame coordinates f'(0) = 0 and f''(0) != 0.
struct FluxModel {
  RealFn f;
  RealFn df;
  RealFn d2f;
  RealFn d3f;
  RealFn invert_df;  // g, local inverse of f'
};

// f(U) = U^2 / 2: the Burgers flux, the fixed point of flux rescaling.
FluxModel quadratic_flux();

// f(U) = U^n / n for integer n >= 2 (f' = U^{n-1}); used in rescaling tests.
// The inverse branch is the one through U = 0 with g(u) = u^{1/(n-1)}
// (odd n-1 only keeps it single-valued; callers stay near the origin).
FluxModel power_flux(int n);

// Speed data u0 = f' o U0 with derivatives by the chain rule. The third
// derivative needs f'''' which the model does not carry; it is recovered by
// a 4th-order central difference of f''' (exact for quadratic flux, where
// f''' is constant).
InitialData compose_speed_data(const FluxModel& flux, const InitialData& u0);

}  // namespace blowup
