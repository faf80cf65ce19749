#pragma once

#include <span>
#include <vector>

#include "blowup/field.hpp"
#include "blowup/profile.hpp"

namespace blowup {

// Sampling window for the windowed Fourier pipeline: N = 2^log2_points
// samples on [-L, L), taper identically 1 on |x| <= taper_start * L and
// smoothly 0 at |x| = L.
struct SpectralGrid {
  double half_width = 50.0;
  int log2_points = 20;
  double taper_start = 0.8;
  // WindowError threshold: |field| at the window edge relative to its max.
  double edge_tolerance = 1e-4;

  std::size_t points() const { return std::size_t{1} << log2_points; }
  double spacing() const { return 2.0 * half_width / points(); }
  double k_min() const;  // first positive bin
  double k_max() const;  // last kept bin (below Nyquist)
};

// C-infinity window: 1 on |x| <= taper_start*L, 0 at |x| >= L.
double taper_weight(const SpectralGrid& grid, double x);

// Amplitudes |transform| on a log-wavenumber grid at one time slice.
struct LogFourierField {
  double tau = 0.0;            // -log(t/t0)
  int order = 0;               // derivative order n carried by amps
  std::vector<double> xis;     // log k, ascending
  std::vector<double> amps;    // >= 0
};

// Windowed transform of the n-th spatial derivative of a solution at time
// t in [t0, 0). Derivatives up to order 2 are sampled exactly via
// characteristics; higher orders multiply the order-2 spectrum by k^{n-2};
// the n = 0 spectrum transforms du/dx and divides by k, since u itself
// need not decay at the window edges.
LogFourierField sample_and_transform(const WaveField& solution, double t0,
                                     double t, int order,
                                     const SpectralGrid& grid = {});

// Transform of a directly sampled real field (test and fixture entry).
LogFourierField transform_samples(std::span<const double> values, double tau,
                                  int order, const SpectralGrid& grid,
                                  bool check_edges = true);

struct UniversalSpectrumOptions {
  SpectralGrid grid;
  // damping e^{-eps|x|} with eps = epsilon_factor * half_width
  double epsilon_factor = 1e-4;
  // override for the eps-halving stability check; 0 = use epsilon_factor
  double epsilon_override = 0.0;
};

// e^{n xi} |w(t, k = e^xi)|: regularized windowed transform of the
// universal profile at a fixed time t <= 0. At t = 0 this is the cusp
// spectrum (pure k^{-4/3} power law); at t < 0 the profile is analytic in
// a strip ~ |t|^{3/2} and the spectrum carries the matching exponential
// cutoff (the limiting solitary-wave shape lives at t = t0).
LogFourierField profile_spectrum_bins(const UniversalProfile& profile,
                                      double t, int order,
                                      const UniversalSpectrumOptions& opts =
                                          {});

// The t = 0 cusp spectrum on the pipeline's native bins.
LogFourierField universal_spectrum_bins(
    const UniversalProfile& profile, int order,
    const UniversalSpectrumOptions& opts = {});

// Log-log interpolation of a spectrum onto arbitrary xi positions.
std::vector<double> sample_spectrum(const LogFourierField& bins,
                                    std::span<const double> xis);

// Cusp spectrum, log-log interpolated onto caller-provided xi positions.
std::vector<double> universal_spectrum(const UniversalProfile& profile,
                                       int order, std::span<const double> xis,
                                       const UniversalSpectrumOptions& opts =
                                           {});

// Fit band [k_lo, 10 k_lo] for the small-k power law: above both the
// window-resolution floor and the regularization rounding.
struct FitBand {
  double xi_lo = 0.0;
  double xi_hi = 0.0;
};
FitBand smallk_fit_band(const UniversalSpectrumOptions& opts);

// Least-squares slope of log(amp) vs xi over [xi_lo, xi_hi].
double fit_loglog_slope(std::span<const double> xis,
                        std::span<const double> amps, double xi_lo,
                        double xi_hi);

// Fitted small-k slope of the regularized w spectrum (equals n - 4/3).
double universal_smallk_slope(const UniversalProfile& profile, int order,
                              const UniversalSpectrumOptions& opts = {});

struct TrackPoint {
  double tau = 0.0;
  double xi_peak = 0.0;
  double amp_peak = 0.0;  // compensated by e^{-decay_comp * tau}
};

struct Trajectory {
  std::vector<TrackPoint> points;
  double decay_comp = 0.0;
};

// Peak trajectory of compensated amplitudes e^{-decay_comp*tau} * amps.
// Sub-bin position by 3-point quadratic interpolation around the max bin;
// FlatFieldError if the max sits on the grid boundary.
Trajectory track_wave(std::span<const LogFourierField> fields,
                      double decay_comp);

// Compensated amplitude read off at reference peak positions (used for
// orders whose spectrum has no interior maximum, e.g. n = 0).
Trajectory track_at_positions(std::span<const LogFourierField> fields,
                              const Trajectory& reference, double decay_comp);

struct SpeedGrowthFit {
  double speed = 0.0;
  double growth_exponent = 0.0;  // of the raw, uncompensated peak amplitude
  std::vector<double> speed_residuals;
  std::vector<double> growth_residuals;
};

// Line fits of xi_peak vs tau and log(amp_peak) vs tau. The trajectory's
// compensation is added back so the growth exponent refers to raw
// amplitudes.
SpeedGrowthFit fit_speed_and_growth(const Trajectory& trajectory);

// Analytic solitary-wave fixture: a log-normal bump translating at `speed`
// with raw amplitude growth e^{growth * tau}.
LogFourierField synthetic_wave_field(double tau, double speed, double growth,
                                     int order, std::span<const double> xis,
                                     double center = 0.0, double width = 1.0);

}  // namespace blowup
