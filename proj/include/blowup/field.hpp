#pragma once

#include <span>

namespace blowup {

// A time-dependent wave profile with spatial derivatives. Implementations
// must be safe to evaluate from multiple threads.
class WaveField {
 public:
  virtual ~WaveField() = default;

  virtual double value(double t, double x) const = 0;

  // order in {0, 1, 2}; order 0 is value().
  virtual double derivative(double t, double x, int order) const = 0;

  // Bulk sampling on an ascending grid. The default loops over
  // derivative(); solvers override it with a warm-started fast path.
  virtual void sample_derivative(double t, std::span<const double> xs,
                                 int order, std::span<double> out) const {
    for (std::size_t i = 0; i < xs.size(); ++i) {
      out[i] = derivative(t, xs[i], order);
    }
  }
};

}  // namespace blowup
