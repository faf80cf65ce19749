#include "blowup/fft.hpp"

#include <fftw3.h>

#include <mutex>

#include "blowup/errors.hpp"

namespace blowup {

namespace {
// The FFTW planner is not thread-safe; execution of a plan is.
std::mutex planner_mutex;
}  // namespace

std::vector<std::complex<double>> real_forward_fft(
    std::span<const double> in) {
  const std::size_t n = in.size();
  if (n < 2 || (n & (n - 1)) != 0) {
    throw DomainError("real_forward_fft: length must be a power of two");
  }

  std::vector<double> buf(in.begin(), in.end());
  std::vector<std::complex<double>> out(n / 2 + 1);

  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(planner_mutex);
    plan = fftw_plan_dft_r2c_1d(
        static_cast<int>(n), buf.data(),
        reinterpret_cast<fftw_complex*>(out.data()),
        FFTW_ESTIMATE | FFTW_PRESERVE_INPUT);
  }
  if (plan == nullptr) {
    throw ConvergenceError("real_forward_fft: planner failed");
  }
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(planner_mutex);
    fftw_destroy_plan(plan);
  }
  return out;
}

}  // namespace blowup
