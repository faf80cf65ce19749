#include "blowup/initial_data.hpp"

#include <cmath>
#include <numbers>

namespace blowup {

namespace {

const double kSqrtPiHalf = 0.5 * std::sqrt(std::numbers::pi);

double poly_eval(const std::vector<double>& odd_coeffs, double x, int deriv) {
  // u0 = sum_j c_j x^n, n = 2j+1; differentiate termwise.
  double acc = 0.0;
  for (std::size_t j = odd_coeffs.size(); j-- > 0;) {
    const int n = static_cast<int>(2 * j + 1);
    if (n < deriv) continue;
    double factor = 1.0;
    for (int k = 0; k < deriv; ++k) factor *= static_cast<double>(n - k);
    acc += odd_coeffs[j] * factor * std::pow(x, n - deriv);
  }
  return acc;
}

}  // namespace

InitialData erf_initial_data() {
  // d/dx erf x = (2/sqrt(pi)) e^{-x^2}, so u0' = -e^{-x^2}.
  return InitialData{
      [](double x) { return -kSqrtPiHalf * std::erf(x); },
      [](double x) { return -std::exp(-x * x); },
      [](double x) { return 2.0 * x * std::exp(-x * x); },
      [](double x) { return (2.0 - 4.0 * x * x) * std::exp(-x * x); },
  };
}

InitialData polynomial_initial_data(const std::vector<double>& odd_coeffs) {
  auto make = [odd_coeffs](int deriv) {
    return [odd_coeffs, deriv](double x) {
      return poly_eval(odd_coeffs, x, deriv);
    };
  };
  return InitialData{make(0), make(1), make(2), make(3)};
}

InitialData linear_initial_data(double slope) {
  return InitialData{
      [slope](double x) { return slope * x; },
      [slope](double) { return slope; },
      [](double) { return 0.0; },
      [](double) { return 0.0; },
  };
}

double central_derivative(const RealFn& f, double x, double step) {
  // f'(x) = [f(x-2h) - 8 f(x-h) + 8 f(x+h) - f(x+2h)] / (12 h) + O(h^4)
  return (f(x - 2.0 * step) - 8.0 * f(x - step) + 8.0 * f(x + step) -
          f(x + 2.0 * step)) /
         (12.0 * step);
}

InitialData initial_data_from_function(RealFn u0) {
  const double h1 = 1e-5, h2 = 1e-4, h3 = 1e-3;
  auto d1 = [u0, h1](double x) { return central_derivative(u0, x, h1); };
  auto d2 = [d1, h2](double x) { return central_derivative(d1, x, h2); };
  auto d3 = [d2, h3](double x) { return central_derivative(d2, x, h3); };
  return InitialData{u0, d1, d2, d3};
}

}  // namespace blowup
