#include "blowup/cubic.hpp"

#include <cmath>

#include "blowup/errors.hpp"

namespace blowup {

double depressed_cubic_root(double p, double q) {
  if (!(p >= 0.0)) {
    throw DomainError("depressed_cubic_root: p must be >= 0");
  }
  if (q == 0.0) return 0.0;
  if (p == 0.0) return -std::cbrt(q);

  // Single real root, hyperbolic form:
  //   w = -2 sqrt(p/3) sinh( asinh( (3q)/(2p) sqrt(3/p) ) / 3 ).
  // The intermediate argument can exceed the double range when p is tiny,
  // so the chain is evaluated in long double.
  const long double pl = p;
  const long double ql = q;
  const long double arg = 1.5L * ql / pl * std::sqrt(3.0L / pl);
  if (!std::isfinite(arg)) {
    // Cubic term dominates completely; the linear term is below rounding.
    return -std::cbrt(q);
  }
  const long double w =
      -2.0L * std::sqrt(pl / 3.0L) * std::sinh(std::asinh(arg) / 3.0L);
  return static_cast<double>(w);
}

}  // namespace blowup
