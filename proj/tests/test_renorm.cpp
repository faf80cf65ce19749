#include "blowup/renorm.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

#include <doctest.h>

#include "blowup/errors.hpp"
#include "blowup/profile.hpp"
#include "blowup/spectral.hpp"

using namespace blowup;

namespace {

// The universal profile packaged as initial data at t = -1, with implicit
// derivatives from x = wt - cw^3: w' = 1/J, w'' = 6cw/J^3,
// w''' = 6c/J^4 + 108 c^2 w^2 / J^5, J = t - 3cw^2.
InitialData profile_initial_data(double c) {
  const UniversalProfile prof(c);
  const double t = -1.0;
  auto w_at = [prof, t](double x) { return eval_w(prof, t, x); };
  return InitialData{
      w_at,
      [w_at, c, t](double x) {
        const double w = w_at(x);
        return 1.0 / (t - 3.0 * c * w * w);
      },
      [w_at, c, t](double x) {
        const double w = w_at(x);
        const double J = t - 3.0 * c * w * w;
        return 6.0 * c * w / (J * J * J);
      },
      [w_at, c, t](double x) {
        const double w = w_at(x);
        const double J = t - 3.0 * c * w * w;
        const double J4 = J * J * J * J;
        return 6.0 * c / J4 + 108.0 * c * c * w * w / (J4 * J);
      },
  };
}

Evaluable smooth_test_solution() {
  // any smooth function of (t,x); group-law checks do not need a PDE
  return [](double t, double x) {
    return std::sin(1.7 * x) * std::exp(0.4 * t) + 0.3 * x;
  };
}

}  // namespace

TEST_SUITE("renorm") {

TEST_CASE("lambda = 1 is the identity") {
  const Evaluable u = smooth_test_solution();
  for (double x : {-2.0, 0.0, 1.3}) {
    CHECK(renorm_x(u, 1.0, -0.7, x) == doctest::Approx(u(-0.7, x)));
  }
  CHECK_THROWS_AS(renorm_x(u, 0.0, -1.0, 0.0), DomainError);
}

TEST_CASE("multiplicative group law on sampled fields") {
  const Evaluable u = smooth_test_solution();
  const double l1 = 3.7, l2 = 0.45;  // fractional lambda allowed here
  const Evaluable once = renorm_operator(renorm_operator(u, l2), l1);
  const Evaluable both = renorm_operator(u, l1 * l2);
  const std::vector<double> xs = linspace(-2.0, 2.0, 801);
  std::vector<double> a(xs.size()), b(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    a[i] = once(-0.8, xs[i]);
    b[i] = both(-0.8, xs[i]);
  }
  const SampledField fa(-0.8, xs, a);
  const SampledField fb(-0.8, xs, b);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    REQUIRE(std::fabs(fa.values[i] - fb.values[i]) < 1e-12);
  }
}

TEST_CASE("scaled-power identity for n = 2, 3") {
  const Evaluable u = smooth_test_solution();
  const double lambda = 17.0;
  for (int n : {2, 3}) {
    const Evaluable u_pow = [u, n](double t, double x) {
      return std::pow(u(t, x), n);
    };
    for (double x : {-1.5, -0.2, 0.8}) {
      const double lhs = renorm_x(u_pow, lambda, -0.5, x);
      const double rhs = std::pow(lambda, (1.0 - n) / 3.0) *
                         std::pow(renorm_x(u, lambda, -0.5, x), n);
      REQUIRE(std::fabs(lhs - rhs) <=
              1e-12 * std::fmax(1.0, std::fabs(rhs)));
    }
  }
}

TEST_CASE("flux rescaling") {
  SUBCASE("quadratic flux is the fixed point") {
    const FluxModel fl = renorm_flux(quadratic_flux(), 37.0);
    for (double u : {-2.0, 0.0, 0.5, 3.0}) {
      CHECK(fl.f(u) == doctest::Approx(0.5 * u * u).epsilon(1e-14));
      CHECK(fl.df(u) == doctest::Approx(u).epsilon(1e-14));
      CHECK(fl.d2f(u) == doctest::Approx(1.0).epsilon(1e-14));
    }
  }
  SUBCASE("lambda = 1 is the identity") {
    const FluxModel fl = renorm_flux(power_flux(3), 1.0);
    CHECK(fl.f(2.0) == doctest::Approx(8.0 / 3.0));
  }
  SUBCASE("cubic flux at lambda = 8") {
    // f = U^3/3: f_8(U) = 8^{2/3} (U/2)^3 / 3 = U^3/6; with f = U^3 the
    // spec arithmetic gives f_8(2) = 4; power_flux(3) carries the 1/3
    const FluxModel raw = power_flux(3);
    const FluxModel fl = renorm_flux(raw, 8.0);
    CHECK(fl.f(2.0) == doctest::Approx(raw.f(2.0) / 2.0).epsilon(1e-14));
    // spot-check the derivative chain too
    CHECK(fl.df(2.0) == doctest::Approx(2.0).epsilon(1e-14));   // 2 (U/2)^2
    CHECK(fl.d2f(2.0) == doctest::Approx(2.0).epsilon(1e-14));  // 2 (U/2)
  }
  SUBCASE("inverse stays consistent") {
    const FluxModel fl = renorm_flux(power_flux(2), 5.0);
    for (double u : {-1.0, 0.2, 2.0}) {
      CHECK(fl.invert_df(fl.df(u)) == doctest::Approx(u).epsilon(1e-12));
    }
  }
}

TEST_CASE("k-space operator") {
  const EvaluableK uk = [](double t, double k) {
    return std::complex<double>(std::exp(t) / (1.0 + k * k),
                                k * std::exp(t));
  };
  SUBCASE("identity at lambda = 1") {
    const auto v = renorm_k(uk, 1.0, -0.5, 2.0);
    CHECK(v == uk(-0.5, 2.0));
  }
  SUBCASE("reality constraint is preserved") {
    const EvaluableK herm = [](double t, double k) {
      // u(t,-k) = conj(u(t,k))
      return std::complex<double>(std::exp(t) / (1.0 + k * k),
                                  k / (1.0 + k * k));
    };
    for (double k : {0.3, 1.0, 4.0}) {
      const auto plus = renorm_k(herm, 6.0, -0.4, k);
      const auto minus = renorm_k(herm, 6.0, -0.4, -k);
      CHECK(minus.real() == doctest::Approx(plus.real()).epsilon(1e-14));
      CHECK(minus.imag() == doctest::Approx(-plus.imag()).epsilon(1e-14));
    }
  }
}

TEST_CASE("x-space and k-space routes agree on band-limited data") {
  // gaussian packet with analytic transform:
  // u(t,x) = e^t e^{-x^2/2} cos(k0 x)
  // u(t,k) = e^t sqrt(2 pi)/2 [e^{-(k-k0)^2/2} + e^{-(k+k0)^2/2}]
  const double k0 = 3.0;
  const Evaluable u = [k0](double t, double x) {
    return std::exp(t) * std::exp(-0.5 * x * x) * std::cos(k0 * x);
  };
  const EvaluableK uk = [k0](double t, double k) {
    const double amp = std::sqrt(2.0 * std::numbers::pi) / 2.0;
    return std::complex<double>(
        std::exp(t) * amp *
            (std::exp(-0.5 * (k - k0) * (k - k0)) +
             std::exp(-0.5 * (k + k0) * (k + k0))),
        0.0);
  };
  const double lambda = 2.0, t = -0.5;

  SpectralGrid grid;
  grid.half_width = 32.0;
  grid.log2_points = 12;

  // route 1: sample G_lambda u in x, windowed transform
  const std::size_t n = grid.points();
  std::vector<double> samples(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double x = -grid.half_width + grid.spacing() * j;
    samples[j] = renorm_x(u, lambda, t, x);
  }
  const LogFourierField f1 = transform_samples(samples, 0.0, 0, grid, true);

  // route 2: the k-space operator applied to the analytic transform
  double worst = 0.0;
  for (std::size_t i = 0; i < f1.xis.size(); ++i) {
    const double k = std::exp(f1.xis[i]);
    const double expect = std::abs(renorm_k(uk, lambda, t, k));
    if (expect < 1e-3) continue;  // compare on the occupied band
    worst = std::fmax(worst,
                      std::fabs(f1.amps[i] - expect) / expect);
  }
  CHECK(worst < 1e-6);
}

TEST_CASE("sweep applied to the universal profile itself") {
  const double c = 1.0;
  const InitialData ic = profile_initial_data(c);
  BlowupFrame frame;
  frame.t0 = -1.0;
  frame.c = c;
  const std::vector<double> lambdas{1.0, 10.0, 100.0};
  const std::vector<double> xs = linspace(-1.0, 1.0, 501);
  const auto sweep = convergence_sweep(quadratic_flux(), ic, frame, lambdas,
                                       -1.0, xs);
  for (const SweepPoint& p : sweep) {
    CHECK(p.sup_error < 1e-9);
  }
}

TEST_CASE("erf sweep decreases") {
  const BlowupFrame frame =
      normalize_frame(quadratic_flux(), erf_initial_data(), -1.0);
  const std::vector<double> lambdas{1.0, 10.0, 100.0};
  const std::vector<double> xs = linspace(-1.0, 1.0, 401);
  const auto sweep = convergence_sweep(quadratic_flux(), erf_initial_data(),
                                       frame, lambdas, -1.0, xs);
  CHECK(sweep[1].sup_error < sweep[0].sup_error);
  CHECK(sweep[2].sup_error < sweep[1].sup_error);
}

TEST_CASE("sweep input validation") {
  const BlowupFrame frame =
      normalize_frame(quadratic_flux(), erf_initial_data(), -1.0);
  const std::vector<double> xs = linspace(-1.0, 1.0, 11);
  const std::vector<double> bad_lambda{0.5};
  CHECK_THROWS_AS(convergence_sweep(quadratic_flux(), erf_initial_data(),
                                    frame, bad_lambda, -1.0, xs),
                  DomainError);
  // vanishing f''(0)
  const FluxModel cubic_only{
      [](double u) { return u * u * u; },
      [](double u) { return 3.0 * u * u; },
      [](double u) { return 6.0 * u; },
      [](double) { return 6.0; },
      [](double u) { return u; },
  };
  const std::vector<double> ok_lambda{1.0};
  CHECK_THROWS_AS(convergence_sweep(cubic_only, erf_initial_data(), frame,
                                    ok_lambda, -1.0, xs),
                  DegenerateError);
}

TEST_CASE("sampled field validation") {
  CHECK_THROWS_AS(SampledField(0.0, {0.0}, {1.0}), DomainError);
  CHECK_THROWS_AS(SampledField(0.0, {0.0, 1.0, 1.5}, {1.0, 2.0, 3.0}),
                  DomainError);
  CHECK_THROWS_AS(SampledField(0.0, {0.0, 1.0, 0.5}, {1.0, 2.0, 3.0}),
                  DomainError);
  const SampledField ok(-1.0, linspace(-1.0, 1.0, 2001),
                        std::vector<double>(2001, 0.0));
  CHECK(ok.spacing() == doctest::Approx(0.001));
}

TEST_CASE("sweep CSV format") {
  std::ostringstream ss;
  const std::vector<SweepPoint> sweep{{1.0, 0.25}, {10.0, 0.03125}};
  write_sweep_csv(ss, sweep);
  CHECK(ss.str() == "lambda,sup_error\n1,0.25\n10,0.03125\n");
}

}  // TEST_SUITE
