#include "blowup/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "blowup/errors.hpp"
#include "blowup/fft.hpp"
#include "blowup/linefit.hpp"

namespace blowup {

namespace {

constexpr double kPi = std::numbers::pi;

// Sub-bin peak by the parabola through three samples; works on the
// non-uniform xi grid. Falls back to the middle sample when the triple is
// not concave.
struct Vertex {
  double x;
  double y;
};

Vertex parabola_vertex(double x1, double y1, double x2, double y2, double x3,
                       double y3) {
  const double d1 = (y2 - y1) / (x2 - x1);
  const double d2 = (y3 - y2) / (x3 - x2);
  const double dd = (d2 - d1) / (x3 - x1);
  if (!(dd < 0.0)) return {x2, y2};
  double xv = 0.5 * (x1 + x2) - d1 / (2.0 * dd);
  xv = std::clamp(xv, x1, x3);
  const double yv = y1 + d1 * (xv - x1) + dd * (xv - x1) * (xv - x2);
  return {xv, yv};
}

double effective_epsilon(const UniversalSpectrumOptions& opts) {
  if (opts.epsilon_override > 0.0) return opts.epsilon_override;
  return opts.epsilon_factor * opts.grid.half_width;
}

}  // namespace

double SpectralGrid::k_min() const { return kPi / half_width; }

double SpectralGrid::k_max() const {
  return kPi * static_cast<double>(points() / 2 - 1) / half_width;
}

double taper_weight(const SpectralGrid& grid, double x) {
  const double a = grid.taper_start * grid.half_width;
  const double ax = std::fabs(x);
  if (ax <= a) return 1.0;
  const double L = grid.half_width;
  if (ax >= L) return 0.0;
  const double s = (ax - a) / (L - a);
  // h(u) = e^{-1/u} glue: C-infinity, exactly 1 and 0 at the ends
  const double h0 = std::exp(-1.0 / (1.0 - s));
  const double h1 = std::exp(-1.0 / s);
  return h0 / (h0 + h1);
}

LogFourierField transform_samples(std::span<const double> values, double tau,
                                  int order, const SpectralGrid& grid,
                                  bool check_edges) {
  const std::size_t n = grid.points();
  if (values.size() != n) {
    throw DomainError("transform_samples: sample count != grid points");
  }
  const double dx = grid.spacing();
  const double L = grid.half_width;

  if (check_edges) {
    double vmax = 0.0;
    for (double v : values) vmax = std::fmax(vmax, std::fabs(v));
    const double edge = std::fmax(std::fabs(values.front()),
                                  std::fabs(values.back()));
    if (vmax > 0.0 && edge > grid.edge_tolerance * vmax) {
      throw WindowError(
          "transform_samples: field at the window edge exceeds the "
          "taper-safe magnitude; enlarge the window");
    }
  }

  std::vector<double> tapered(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double x = -L + dx * static_cast<double>(j);
    tapered[j] = values[j] * taper_weight(grid, x);
  }

  const auto spectrum = real_forward_fft(tapered);

  LogFourierField field;
  field.tau = tau;
  field.order = order;
  const std::size_t kept = n / 2 - 1;  // positive k below Nyquist
  field.xis.resize(kept);
  field.amps.resize(kept);
  for (std::size_t m = 1; m <= kept; ++m) {
    const double k = kPi * static_cast<double>(m) / L;
    field.xis[m - 1] = std::log(k);
    field.amps[m - 1] = dx * std::abs(spectrum[m]);
  }
  return field;
}

LogFourierField sample_and_transform(const WaveField& solution, double t0,
                                     double t, int order,
                                     const SpectralGrid& grid) {
  if (order < 0) throw DomainError("sample_and_transform: order must be >= 0");
  if (!(t0 < 0.0) || t < t0) {
    throw DomainError("sample_and_transform: need t0 <= t with t0 < 0");
  }
  if (!(t < 0.0)) {
    throw PostBlowupError("sample_and_transform: t must precede the blow-up");
  }
  const double tau = -std::log(t / t0);

  // u itself does not decay at the window edges, so order 0 transforms
  // du/dx and divides by k afterwards.
  const int sampled = order == 0 ? 1 : std::min(order, 2);

  const std::size_t n = grid.points();
  const double dx = grid.spacing();
  std::vector<double> xs(n);
  for (std::size_t j = 0; j < n; ++j) {
    xs[j] = -grid.half_width + dx * static_cast<double>(j);
  }
  std::vector<double> samples(n);
  solution.sample_derivative(t, xs, sampled, samples);

  LogFourierField field = transform_samples(samples, tau, order, grid, true);

  const int shift = order - sampled;  // -1 for order 0, n-2 for order >= 3
  if (shift != 0) {
    for (std::size_t i = 0; i < field.amps.size(); ++i) {
      field.amps[i] *= std::pow(std::exp(field.xis[i]), shift);
    }
  }
  return field;
}

LogFourierField profile_spectrum_bins(const UniversalProfile& profile,
                                      double t, int order,
                                      const UniversalSpectrumOptions& opts) {
  if (order < 0) {
    throw DomainError("profile_spectrum: order must be >= 0");
  }
  const SpectralGrid& grid = opts.grid;
  const double eps = effective_epsilon(opts);
  const std::size_t n = grid.points();
  const double dx = grid.spacing();

  // w(t,x), damped by e^{-eps|x|}; at t = 0 this is the cusp
  // -sign(x)(|x|/c)^{1/3}, which eval_w reproduces exactly.
  std::vector<double> samples(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double x = -grid.half_width + dx * static_cast<double>(j);
    samples[j] = eval_w(profile, t, x) * std::exp(-eps * std::fabs(x));
  }

  LogFourierField field = transform_samples(samples, 0.0, order, grid, false);
  if (order != 0) {
    for (std::size_t i = 0; i < field.amps.size(); ++i) {
      field.amps[i] *= std::pow(std::exp(field.xis[i]), order);
    }
  }
  return field;
}

LogFourierField universal_spectrum_bins(const UniversalProfile& profile,
                                        int order,
                                        const UniversalSpectrumOptions& opts) {
  return profile_spectrum_bins(profile, 0.0, order, opts);
}

std::vector<double> sample_spectrum(const LogFourierField& bins,
                                    std::span<const double> xis) {
  std::vector<double> out(xis.size());
  for (std::size_t i = 0; i < xis.size(); ++i) {
    const double xi = xis[i];
    if (xi < bins.xis.front() || xi > bins.xis.back()) {
      throw DomainError("sample_spectrum: xi outside the resolved band");
    }
    const auto it = std::lower_bound(bins.xis.begin(), bins.xis.end(), xi);
    std::size_t hi = static_cast<std::size_t>(it - bins.xis.begin());
    if (hi == 0) hi = 1;
    const std::size_t lo = hi - 1;
    const double t = (xi - bins.xis[lo]) / (bins.xis[hi] - bins.xis[lo]);
    // log-log linear interpolation: exact on a pure power law
    out[i] = std::exp((1.0 - t) * std::log(bins.amps[lo]) +
                      t * std::log(bins.amps[hi]));
  }
  return out;
}

std::vector<double> universal_spectrum(const UniversalProfile& profile,
                                       int order, std::span<const double> xis,
                                       const UniversalSpectrumOptions& opts) {
  return sample_spectrum(universal_spectrum_bins(profile, order, opts), xis);
}

FitBand smallk_fit_band(const UniversalSpectrumOptions& opts) {
  const SpectralGrid& grid = opts.grid;
  // Band floor: window resolution (taper transition width) and the
  // regularization rounding footprint. The band stays pinned to the
  // nominal epsilon so an epsilon-halving rerun fits the same bins.
  const double eps_nominal = opts.epsilon_factor * grid.half_width;
  const double taper_width = (1.0 - grid.taper_start) * grid.half_width;
  const double k_window = 4.0 * 2.0 * kPi / taper_width;
  const double k_eps = 3000.0 * eps_nominal;
  const double k_lo =
      std::fmax(std::fmax(k_window, k_eps), 1.5 * grid.k_min());
  const double k_hi = 10.0 * k_lo;
  if (k_hi > 0.5 * grid.k_max()) {
    throw DomainError("smallk_fit_band: grid too coarse for a clean decade");
  }
  return {std::log(k_lo), std::log(k_hi)};
}

double fit_loglog_slope(std::span<const double> xis,
                        std::span<const double> amps, double xi_lo,
                        double xi_hi) {
  std::vector<double> fx, fy;
  for (std::size_t i = 0; i < xis.size(); ++i) {
    if (xis[i] < xi_lo || xis[i] > xi_hi) continue;
    if (!(amps[i] > 0.0)) continue;
    fx.push_back(xis[i]);
    fy.push_back(std::log(amps[i]));
  }
  if (fx.size() < 8) {
    throw RankError("fit_loglog_slope: too few bins in the fit band");
  }
  return fit_line(fx, fy).slope;
}

double universal_smallk_slope(const UniversalProfile& profile, int order,
                              const UniversalSpectrumOptions& opts) {
  const LogFourierField bins = universal_spectrum_bins(profile, order, opts);
  const FitBand band = smallk_fit_band(opts);
  return fit_loglog_slope(bins.xis, bins.amps, band.xi_lo, band.xi_hi);
}

Trajectory track_wave(std::span<const LogFourierField> fields,
                      double decay_comp) {
  if (fields.size() < 3) {
    throw DomainError("track_wave: need at least three time slices");
  }
  Trajectory traj;
  traj.decay_comp = decay_comp;
  traj.points.reserve(fields.size());
  for (const LogFourierField& f : fields) {
    if (f.order != fields.front().order) {
      throw DomainError("track_wave: mixed derivative orders");
    }
    const auto it = std::max_element(f.amps.begin(), f.amps.end());
    const std::size_t idx = static_cast<std::size_t>(it - f.amps.begin());
    if (idx == 0 || idx + 1 >= f.amps.size()) {
      throw FlatFieldError(
          "track_wave: spectral maximum on the grid boundary; enlarge the "
          "window");
    }
    const Vertex v =
        parabola_vertex(f.xis[idx - 1], f.amps[idx - 1], f.xis[idx],
                        f.amps[idx], f.xis[idx + 1], f.amps[idx + 1]);
    traj.points.push_back(
        {f.tau, v.x, std::exp(-decay_comp * f.tau) * v.y});
  }
  return traj;
}

Trajectory track_at_positions(std::span<const LogFourierField> fields,
                              const Trajectory& reference, double decay_comp) {
  if (fields.size() != reference.points.size()) {
    throw DomainError("track_at_positions: slice count mismatch");
  }
  Trajectory traj;
  traj.decay_comp = decay_comp;
  traj.points.reserve(fields.size());
  for (std::size_t i = 0; i < fields.size(); ++i) {
    const LogFourierField& f = fields[i];
    const TrackPoint& ref = reference.points[i];
    if (std::fabs(f.tau - ref.tau) > 1e-9) {
      throw DomainError("track_at_positions: tau mismatch with reference");
    }
    const double xi = ref.xi_peak;
    auto it = std::lower_bound(f.xis.begin(), f.xis.end(), xi);
    std::size_t j = static_cast<std::size_t>(it - f.xis.begin());
    j = std::clamp<std::size_t>(j, 1, f.xis.size() - 2);
    // quadratic (Lagrange) interpolation through the three nearest bins
    const double x1 = f.xis[j - 1], x2 = f.xis[j], x3 = f.xis[j + 1];
    const double y1 = f.amps[j - 1], y2 = f.amps[j], y3 = f.amps[j + 1];
    const double a =
        y1 * (xi - x2) * (xi - x3) / ((x1 - x2) * (x1 - x3)) +
        y2 * (xi - x1) * (xi - x3) / ((x2 - x1) * (x2 - x3)) +
        y3 * (xi - x1) * (xi - x2) / ((x3 - x1) * (x3 - x2));
    traj.points.push_back({f.tau, xi, std::exp(-decay_comp * f.tau) * a});
  }
  return traj;
}

SpeedGrowthFit fit_speed_and_growth(const Trajectory& trajectory) {
  const auto& pts = trajectory.points;
  if (pts.size() < 3) {
    throw DomainError("fit_speed_and_growth: need at least three points");
  }
  std::vector<double> taus, xis, logamps;
  taus.reserve(pts.size());
  xis.reserve(pts.size());
  logamps.reserve(pts.size());
  for (const TrackPoint& p : pts) {
    if (!(p.amp_peak > 0.0)) {
      throw DomainError("fit_speed_and_growth: non-positive peak amplitude");
    }
    taus.push_back(p.tau);
    xis.push_back(p.xi_peak);
    logamps.push_back(std::log(p.amp_peak));
  }
  const LineFit speed = fit_line(taus, xis);
  const LineFit growth = fit_line(taus, logamps);

  SpeedGrowthFit fit;
  fit.speed = speed.slope;
  // undo the compensation: raw amplitude growth
  fit.growth_exponent = growth.slope + trajectory.decay_comp;
  fit.speed_residuals = speed.residuals;
  fit.growth_residuals = growth.residuals;
  return fit;
}

LogFourierField synthetic_wave_field(double tau, double speed, double growth,
                                     int order, std::span<const double> xis,
                                     double center, double width) {
  LogFourierField field;
  field.tau = tau;
  field.order = order;
  field.xis.assign(xis.begin(), xis.end());
  field.amps.resize(xis.size());
  const double scale = std::exp(growth * tau);
  for (std::size_t i = 0; i < xis.size(); ++i) {
    const double u = (xis[i] - center - speed * tau) / width;
    field.amps[i] = scale * std::exp(-u * u);
  }
  return field;
}

}  // namespace blowup
