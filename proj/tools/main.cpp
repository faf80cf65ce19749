// Command-line front end: reproduces the convergence and solitary-wave
// experiments and dumps universal-profile data as CSV.
//
// Exit codes: 0 success, 2 configuration error, 3 numerical failure,
// 4 no blow-up / degenerate problem, 5 window too small.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "blowup/characteristics.hpp"
#include "blowup/csv.hpp"
#include "blowup/errors.hpp"
#include "blowup/gas.hpp"
#include "blowup/profile.hpp"
#include "blowup/renorm.hpp"
#include "blowup/spectral.hpp"

namespace {

using namespace blowup;

struct GridSpec {
  double lo = -1.0;
  double hi = 1.0;
  std::size_t n = 2001;
};

GridSpec parse_grid(const std::string& text) {
  GridSpec g;
  const auto p1 = text.find(':');
  const auto p2 = text.find(':', p1 == std::string::npos ? p1 : p1 + 1);
  if (p1 == std::string::npos || p2 == std::string::npos) {
    throw DomainError("grid spec must be XMIN:XMAX:N");
  }
  g.lo = parse_double(text.substr(0, p1));
  g.hi = parse_double(text.substr(p1 + 1, p2 - p1 - 1));
  const double n = parse_double(text.substr(p2 + 1));
  if (!(g.hi > g.lo) || !(n >= 2.0) || n != std::floor(n)) {
    throw DomainError("grid spec must satisfy XMIN < XMAX and integer N >= 2");
  }
  g.n = static_cast<std::size_t>(n);
  return g;
}

struct ResolvedProblem {
  FluxModel flux;
  InitialData ic;
  BlowupFrame frame;
  Interval working{-50.0, 50.0};
};

std::vector<double> parse_poly_coeffs(const std::string& id) {
  std::vector<double> coeffs;
  std::stringstream ss(id.substr(5));
  std::string tok;
  while (std::getline(ss, tok, ',')) coeffs.push_back(parse_double(tok));
  if (coeffs.empty()) {
    throw DomainError("poly initial data needs at least one coefficient");
  }
  return coeffs;
}

ResolvedProblem resolve_problem(const std::string& ic_name,
                                const std::string& flux_name, double gamma,
                                double A) {
  if (flux_name == "gas" || ic_name == "gas") {
    GasParams p;
    p.gamma = gamma;
    p.A = A;
    const Interval working{-20.0, 20.0};
    GasProblem gp = build_gas_problem(p, working);
    return {std::move(gp.flux), std::move(gp.ic), gp.frame, working};
  }
  if (flux_name != "burgers") {
    throw DomainError("unknown flux '" + flux_name + "'");
  }
  InitialData ic;
  if (ic_name == "erf") {
    ic = erf_initial_data();
  } else if (ic_name.rfind("poly:", 0) == 0) {
    ic = polynomial_initial_data(parse_poly_coeffs(ic_name));
  } else {
    throw DomainError("unknown initial condition '" + ic_name + "'");
  }
  ResolvedProblem rp;
  rp.working = Interval{-50.0, 50.0};
  rp.frame = normalize_frame(quadratic_flux(), ic, 0.0, rp.working);
  auto [flux_n, ic_n] = apply_frame(quadratic_flux(), ic, rp.frame);
  rp.flux = std::move(flux_n);
  rp.ic = std::move(ic_n);
  return rp;
}

// Options shared by the experiment subcommands.
struct CommonOpts {
  std::string out;
  int precision = 17;
  bool gnuplot = false;
  std::string ic_name = "erf";
  std::string flux_name = "burgers";
  std::string problem;
  double gamma = 5.0 / 3.0;
  double A = 3.0 / 5.0;

  void apply_problem_shorthand() {
    if (problem.empty()) return;
    if (problem == "burgers-erf") {
      ic_name = "erf";
      flux_name = "burgers";
    } else if (problem == "gas") {
      ic_name = "gas";
      flux_name = "gas";
    } else if (problem.rfind("poly:", 0) == 0) {
      ic_name = problem;
      flux_name = "burgers";
    } else if (problem == "synthetic") {
      ic_name = "synthetic";
      flux_name = "synthetic";
    } else {
      throw DomainError("unknown problem '" + problem + "'");
    }
  }
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_problem) {
  cmd->add_option("--out", o.out, "Output path (or prefix for multi-file)");
  cmd->add_option("--precision", o.precision,
                  "Significant digits in CSV output")
      ->check(CLI::Range(1, 17));
  cmd->add_flag("--gnuplot", o.gnuplot, "Emit a companion gnuplot script");
  cmd->set_config("--config", "",
                  "Plain key = value config file; flags take precedence");
  if (with_problem) {
    cmd->add_option("--problem", o.problem,
                    "Shorthand: burgers-erf | gas | poly:<c1,c3,...>");
    cmd->add_option("--ic", o.ic_name,
                    "Initial condition: erf | gas | poly:<c1,c3,...>");
    cmd->add_option("--flux", o.flux_name, "Flux: burgers | gas");
    cmd->add_option("--gamma", o.gamma, "Adiabatic exponent (gas)");
    cmd->add_option("--A", o.A, "Entropy constant (gas)");
  }
}

std::unique_ptr<std::ofstream> open_out(const std::string& path) {
  auto f = std::make_unique<std::ofstream>(path, std::ios::binary);
  if (!*f) {
    throw DomainError("output path '" + path + "' is not writable");
  }
  return f;
}

void write_gnuplot(const std::string& csv_path, const std::string& script,
                   const std::string& body) {
  auto f = open_out(script);
  *f << "# gnuplot script for " << csv_path << "\n"
     << "set datafile separator ','\n"
     << body;
}

// ---------------------------------------------------------------------- //

struct ProfileOpts {
  CommonOpts common;
  double c = 1.0;
  double t_eval = -1.0;
  std::string grid = "-2:2:401";
};

int run_profile(const ProfileOpts& o) {
  const GridSpec g = parse_grid(o.grid);
  const UniversalProfile prof(o.c);
  const std::vector<double> xs = linspace(g.lo, g.hi, g.n);

  std::unique_ptr<std::ofstream> file;
  std::ostream* out = &std::cout;
  if (!o.common.out.empty()) {
    file = open_out(o.common.out);
    out = file.get();
  }
  *out << "x,w\n";
  for (double x : xs) {
    *out << format_double(x, o.common.precision) << ','
         << format_double(eval_w(prof, o.t_eval, x), o.common.precision)
         << '\n';
  }
  if (o.common.gnuplot && !o.common.out.empty()) {
    write_gnuplot(o.common.out, o.common.out + ".gp",
                  "plot '" + o.common.out +
                      "' skip 1 using 1:2 with lines title 'w(t,x)'\n");
  }
  return 0;
}

// ---------------------------------------------------------------------- //

struct ConvergeOpts {
  CommonOpts common;
  std::vector<double> lambdas{1.0, 10.0, 100.0, 1000.0};
  std::optional<double> t_eval;
  std::string grid = "-1:1:2001";
  bool dump_profiles = false;
};

int run_converge(ConvergeOpts& o) {
  o.common.apply_problem_shorthand();
  if (o.lambdas.empty()) throw DomainError("need at least one lambda");
  for (std::size_t i = 0; i + 1 < o.lambdas.size(); ++i) {
    if (!(o.lambdas[i] < o.lambdas[i + 1])) {
      throw DomainError("lambda list must be strictly increasing");
    }
  }
  if (!(o.lambdas.front() >= 1.0)) {
    throw DomainError("lambda values must be >= 1");
  }
  const GridSpec g = parse_grid(o.grid);
  ResolvedProblem rp = resolve_problem(o.common.ic_name, o.common.flux_name,
                                       o.common.gamma, o.common.A);
  const double t_eval = o.t_eval.value_or(rp.frame.t0);
  const std::vector<double> xs = linspace(g.lo, g.hi, g.n);

  const std::vector<SweepPoint> sweep = convergence_sweep(
      rp.flux, rp.ic, rp.frame, o.lambdas, t_eval, xs, rp.working);

  std::unique_ptr<std::ofstream> file;
  std::ostream* out = &std::cout;
  if (!o.common.out.empty()) {
    file = open_out(o.common.out);
    out = file.get();
  }
  *out << "lambda,sup_error\n";
  for (const SweepPoint& p : sweep) {
    *out << format_double(p.lambda, o.common.precision) << ','
         << format_double(p.sup_error, o.common.precision) << '\n';
  }

  if (o.dump_profiles) {
    if (o.common.out.empty()) {
      throw DomainError("--dump-profiles requires --out");
    }
    const CharacteristicSolution sol(rp.flux, rp.ic, rp.frame.t0, rp.working);
    const double f2 = rp.flux.d2f(0.0);
    const std::vector<double> target = target_profile(rp.frame, f2, t_eval,
                                                      xs);
    auto pf = open_out(o.common.out + ".profiles.csv");
    *pf << "lambda,x,u_scaled,w_target\n";
    for (double lambda : o.lambdas) {
      const std::vector<double> scaled =
          scaled_profile(sol, lambda, t_eval, xs);
      for (std::size_t i = 0; i < xs.size(); ++i) {
        *pf << format_double(lambda, o.common.precision) << ','
            << format_double(xs[i], o.common.precision) << ','
            << format_double(scaled[i], o.common.precision) << ','
            << format_double(target[i], o.common.precision) << '\n';
      }
    }
  }
  if (o.common.gnuplot && !o.common.out.empty()) {
    write_gnuplot(o.common.out, o.common.out + ".gp",
                  "set logscale xy\nplot '" + o.common.out +
                      "' skip 1 using 1:2 with linespoints title "
                      "'sup error'\n");
  }
  return 0;
}

// ---------------------------------------------------------------------- //

struct SolitonOpts {
  CommonOpts common;
  std::vector<double> taus{2.0, 3.0, 4.0, 5.0, 6.0};
  int order = 2;
  std::string grid = "-50:50:1048576";
  double edge_tol = 1e-4;
};

SpectralGrid spectral_grid_from(const GridSpec& g, double edge_tol) {
  if (g.lo != -g.hi || !(g.hi > 0.0)) {
    throw DomainError("spectral grid must be symmetric: -L:L:N");
  }
  if ((g.n & (g.n - 1)) != 0) {
    throw DomainError("spectral grid size N must be a power of two");
  }
  SpectralGrid sg;
  sg.half_width = g.hi;
  sg.log2_points = 0;
  for (std::size_t n = g.n; n > 1; n >>= 1) ++sg.log2_points;
  sg.edge_tolerance = edge_tol;
  return sg;
}

int run_soliton(SolitonOpts& o) {
  o.common.apply_problem_shorthand();
  if (o.taus.size() < 3) throw DomainError("need at least three tau values");
  if (o.order < 0) throw DomainError("--order must be >= 0");
  if (o.common.out.empty()) {
    throw DomainError("soliton writes several files; --out PREFIX required");
  }
  const double decay_comp = 1.5 * o.order - 2.0;

  std::vector<LogFourierField> fields;
  std::vector<LogFourierField> ref_fields;  // n=2 reference when order==0

  if (o.common.ic_name == "synthetic") {
    // Analytic translating bump: speed 3/2, raw growth 3n/2 - 2.
    const std::vector<double> xis = linspace(-3.0, 12.0, 1501);
    for (double tau : o.taus) {
      fields.push_back(
          synthetic_wave_field(tau, 1.5, decay_comp, o.order, xis));
    }
  } else {
    ResolvedProblem rp = resolve_problem(o.common.ic_name, o.common.flux_name,
                                         o.common.gamma, o.common.A);
    const SpectralGrid sg = spectral_grid_from(parse_grid(o.grid), o.edge_tol);
    // pad the foot-point search range past the sampling window
    const Interval working{
        std::min(rp.working.lo, -sg.half_width - 5.0),
        std::max(rp.working.hi, sg.half_width + 5.0)};
    const CharacteristicSolution sol(rp.flux, rp.ic, rp.frame.t0, working);
    for (double tau : o.taus) {
      const double t = rp.frame.t0 * std::exp(-tau);
      fields.push_back(
          sample_and_transform(sol, rp.frame.t0, t, o.order, sg));
      if (o.order == 0) {
        ref_fields.push_back(
            sample_and_transform(sol, rp.frame.t0, t, 2, sg));
      }
    }
  }

  // The n = 0 spectrum has no interior maximum (it diverges at small k),
  // so its amplitude is read at the n = 2 peak position.
  Trajectory traj;
  if (o.order == 0 && !ref_fields.empty()) {
    const Trajectory ref = track_wave(ref_fields, 1.0);
    traj = track_at_positions(fields, ref, decay_comp);
  } else {
    traj = track_wave(fields, decay_comp);
  }
  const SpeedGrowthFit fit = fit_speed_and_growth(traj);

  const int prec = o.common.precision;
  {
    auto f = open_out(o.common.out + "_spectra.csv");
    *f << "tau,xi,amp\n";
    for (const LogFourierField& field : fields) {
      const double comp = std::exp(-decay_comp * field.tau);
      for (std::size_t i = 0; i < field.xis.size(); ++i) {
        *f << format_double(field.tau, prec) << ','
           << format_double(field.xis[i], prec) << ','
           << format_double(comp * field.amps[i], prec) << '\n';
      }
    }
  }
  {
    auto f = open_out(o.common.out + "_trajectory.csv");
    *f << "tau,xi_peak,amp_peak\n";
    for (const TrackPoint& p : traj.points) {
      *f << format_double(p.tau, prec) << ','
         << format_double(p.xi_peak, prec) << ','
         << format_double(p.amp_peak, prec) << '\n';
    }
  }
  {
    auto f = open_out(o.common.out + "_fit.txt");
    *f << "speed=" << format_double(fit.speed, prec) << '\n'
       << "growth_exponent=" << format_double(fit.growth_exponent, prec)
       << '\n'
       << "decay_comp=" << format_double(decay_comp, prec) << '\n';
    for (std::size_t i = 0; i < fit.speed_residuals.size(); ++i) {
      *f << "speed_residual_" << i << '='
         << format_double(fit.speed_residuals[i], prec) << '\n';
    }
    for (std::size_t i = 0; i < fit.growth_residuals.size(); ++i) {
      *f << "growth_residual_" << i << '='
         << format_double(fit.growth_residuals[i], prec) << '\n';
    }
  }
  std::cout << "speed=" << format_double(fit.speed, prec) << '\n'
            << "growth_exponent=" << format_double(fit.growth_exponent, prec)
            << '\n';

  if (o.common.gnuplot) {
    write_gnuplot(o.common.out + "_spectra.csv", o.common.out + ".gp",
                  "plot '" + o.common.out +
                      "_spectra.csv' skip 1 using 2:3 with dots title "
                      "'compensated spectra', '" +
                      o.common.out +
                      "_trajectory.csv' skip 1 using 2:3 with points pt 7 "
                      "title 'peaks'\n");
  }
  return 0;
}

// ---------------------------------------------------------------------- //

struct GasFrameOpts {
  CommonOpts common;
};

int run_gas_frame(GasFrameOpts& o) {
  GasParams p;
  p.gamma = o.common.gamma;
  p.A = o.common.A;
  const GasProblem gp = build_gas_problem(p);

  std::unique_ptr<std::ofstream> file;
  std::ostream* out = &std::cout;
  if (!o.common.out.empty()) {
    file = open_out(o.common.out);
    out = file.get();
  }
  *out << "t0=" << format_fixed(gp.frame.t0, 6) << '\n'
       << "x1=" << format_fixed(gp.frame.x_shift, 6) << '\n'
       << "rho1=" << format_fixed(gp.frame.u_shift, 6) << '\n'
       << "v1=" << format_fixed(gp.frame.v_shift, 6) << '\n'
       << "c=" << format_fixed(gp.frame.c, 6) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Blow-up structure of 1D scalar conservation laws"};
  app.require_subcommand(1);

  ProfileOpts po;
  CLI::App* profile = app.add_subcommand(
      "profile", "Sample the universal profile w(t,x) as CSV");
  add_common(profile, po.common, false);
  profile->add_option("--c", po.c, "Cusp coefficient c > 0");
  profile->add_option("--t-eval", po.t_eval, "Evaluation time t <= 0");
  profile->add_option("--grid", po.grid, "Sampling grid XMIN:XMAX:N");

  ConvergeOpts co;
  CLI::App* converge = app.add_subcommand(
      "converge", "Renormalization convergence sweep to the universal "
                  "profile");
  add_common(converge, co.common, true);
  converge->add_option("--lambdas", co.lambdas, "Scaling factors, >= 1")
      ->delimiter(',');
  converge->add_option("--t-eval", co.t_eval,
                       "Evaluation time (default: the frame's t0)");
  converge->add_option("--grid", co.grid, "Comparison grid XMIN:XMAX:N");
  converge->add_flag("--dump-profiles", co.dump_profiles,
                     "Also write per-lambda scaled profiles");

  SolitonOpts so;
  CLI::App* soliton = app.add_subcommand(
      "soliton", "Log-Fourier solitary wave: spectra, peak trajectory, "
                 "speed/growth fit");
  add_common(soliton, so.common, true);
  soliton->add_option("--taus", so.taus, "Slice times tau = -log(t/t0)")
      ->delimiter(',');
  soliton->add_option("--order", so.order, "Spatial derivative order n");
  soliton->add_option("--grid", so.grid,
                      "Sampling window -L:L:N, N a power of two");
  soliton->add_option("--edge-tol", so.edge_tol,
                      "Taper-safe relative magnitude at the window edge");

  GasFrameOpts go;
  CLI::App* gas_frame = app.add_subcommand(
      "gas-frame", "Recover the polytropic-gas blow-up frame constants");
  add_common(gas_frame, go.common, false);
  gas_frame->add_option("--gamma", go.common.gamma, "Adiabatic exponent > 1");
  gas_frame->add_option("--A", go.common.A, "Entropy constant > 0");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (profile->parsed()) return run_profile(po);
    if (converge->parsed()) return run_converge(co);
    if (soliton->parsed()) return run_soliton(so);
    if (gas_frame->parsed()) return run_gas_frame(go);
    std::cerr << "error: no subcommand\n";
    return 2;
  } catch (const WindowError& e) {
    std::cerr << "error: " << e.what()
              << "\nhint: enlarge the --grid window\n";
    return 5;
  } catch (const FlatFieldError& e) {
    std::cerr << "error: " << e.what()
              << "\nhint: enlarge the --grid window\n";
    return 5;
  } catch (const NoBlowupError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const DegenerateError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
}
