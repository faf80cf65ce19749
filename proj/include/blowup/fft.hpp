#pragma once

#include <complex>
#include <span>
#include <vector>

namespace blowup {

// Forward DFT of a real sequence (FFTW r2c, e^{-i k x} sign convention).
// Returns bins m = 0..N/2. N must be a power of two.
std::vector<std::complex<double>> real_forward_fft(std::span<const double> in);

}  // namespace blowup
