#pragma once

namespace blowup {

// Real root of the depressed cubic  w^3 + p*w + q = 0  for p >= 0.
//
// For p >= 0 the polynomial is strictly increasing, so the real root is
// unique. Uses the hyperbolic (sinh) form of Cardano's solution, which is
// immune to the cancellation that plagues the naive u+v formula when
// |q| >> p^3. p < 0 is rejected with DomainError.
double depressed_cubic_root(double p, double q);

}  // namespace blowup
