#include <cmath>
#include <numbers>
#include <random>

#include "crown/heat.hpp"
#include "doctest.h"

using namespace crown::sl2;

namespace {
constexpr double kPi = std::numbers::pi;

// Hyperbolic plane heat kernel of curvature -1 from McKean's integral,
//   p_tau(d) = sqrt2 e^{-tau/4} (4 pi tau)^{-3/2} int_d^inf s e^{-s^2/4tau} / sqrt(cosh s - cosh d) ds,
// with s = d + v^2 and midpoint quadrature in v.
double mckean(double tau, double d) {
  const double V = std::sqrt(40 * std::sqrt(tau) + 40 * tau + 10);
  const int N = 20000;
  const double h = V / N;
  double acc = 0;
  for (int i = 0; i < N; ++i) {
    const double v = (i + 0.5) * h, s = d + v * v;
    const double den = std::sqrt(2 * std::sinh(d + v * v / 2) * std::sinh(v * v / 2));
    acc += 2 * v * s * std::exp(-s * s / (4 * tau)) / den;
  }
  return std::sqrt(2.0) * std::exp(-tau / 4) / std::pow(4 * kPi * tau, 1.5) * acc * h;
}

// The flat exp(rH) sits at hyperbolic distance 2r and dmu = (4 pi)^{-1} dA.
double oracle_kernel(double t, double r) { return 4 * kPi * mckean(t / 2, 2 * r); }
}  // namespace

TEST_CASE("calibrated constant") {
  CHECK(std::abs(heat_constant() - kHeatConstantTheory) <= 1e-6);
}

TEST_CASE("kernel against the closed hyperbolic integral") {
  const double c = heat_constant();
  for (double t : {0.1, 0.5, 1.0}) {
    HeatKernel<double> k(t, c);
    for (double r : {0.0, 0.3, 1.0, 2.0}) {
      CAPTURE(t);
      CAPTURE(r);
      const double want = oracle_kernel(t, r);
      if (r > k.max_radius()) continue;
      // the spectral integral carries an absolute roundoff floor near 1e-15
      CHECK(std::abs(k(r) - want) <= 1e-6 * want + 1e-14);
      CHECK(std::abs(k.direct(r) - want) <= 1e-6 * want + 1e-14);
    }
  }
}

TEST_CASE("kernel argument validation") {
  CHECK_THROWS_AS(HeatKernel<double>(0.0, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(HeatKernel<double>(-1.0, 2.0), std::invalid_argument);
  HeatKernel<double> k(0.5, 2.0);
  CHECK_THROWS_AS(k(k.max_radius() + 1), std::out_of_range);
  CHECK_THROWS_AS(k.crown(cplx(0.1, kPi / 4)), std::domain_error);
  CHECK_THROWS_AS(RadialGrid::make(10, 0.0), std::invalid_argument);
}

TEST_CASE("holomorphic extension restricts to the real kernel") {
  HeatKernel<double> k(0.5, heat_constant());
  for (double r : {0.0, 0.4, 1.1, 2.0}) CHECK(std::abs(k.crown(cplx(r, 0)) - k(r)) <= 1e-8 * k(0));
  const cplx w(0.6, 0.3);
  CHECK(std::abs(k.crown(w) - std::conj(k.crown(std::conj(w)))) <= 1e-12 * std::abs(k.crown(w)));
  HeatOptions fine;
  fine.crown_y_step = 0.002;
  HeatKernel<double> kf(0.5, heat_constant(), fine);
  for (double im : {0.6, 0.75, 0.78}) {
    const cplx z(0.5, im);
    CHECK(std::abs(k.crown(z) - kf.crown(z)) <= 1e-10 * std::abs(kf.crown(z)));
  }
}

TEST_CASE("mass and positivity") {
  for (double t : {0.1, 0.5, 1.0}) {
    CAPTURE(t);
    CHECK(heat_mass(t) == doctest::Approx(1.0).epsilon(1e-6));
    const auto p = heat_positivity(t);
    CHECK(p.positive);
    CHECK(p.min_value > 0);
  }
}

TEST_CASE("spherical transform of the kernel") {
  const auto f = heat_fourier_check(0.5);
  CHECK(f.max_rel_err <= 1e-6);
  CHECK(f.nu.size() == f.value.size());
  for (std::size_t i = 0; i < f.nu.size(); ++i)
    CHECK(f.target[i] == doctest::Approx(std::exp(-0.5 * casimir(f.nu[i]))).epsilon(1e-14));
}

TEST_CASE("transform of a Gaussian radial profile is a smooth positive function") {
  const auto g = RadialGrid::sample(400, 8.0, [](double r) { return std::exp(-r * r); });
  const double f0 = spherical_transform(g, 0.0);
  CHECK(f0 > 0);
  // at nu = i/2 the spherical function is 1, so the transform is the integral
  double integral = 0;
  for (std::size_t i = 0; i < g.r.size(); ++i) integral += g.weights[i] * g.values[i];
  CHECK(integral > f0);
  const auto grid = spherical_transform_grid(g, 0.5, 5);
  CHECK(grid[0] == doctest::Approx(f0).epsilon(1e-12));
  CHECK_THROWS_AS(spherical_transform(RadialGrid::sample(100, 2.0, [](double) { return 1.0; }), 0.0), TailError);
}

TEST_CASE("semigroup property") {
  const auto s = semigroup_check(0.3, 0.4);
  CHECK(s.points > 10);
  CHECK(s.max_rel_err <= 1e-6);
  CHECK_THROWS_AS(semigroup_check(0.0, 0.4), std::invalid_argument);
}

TEST_CASE("crown radial coordinate") {
  for (cplx w : {cplx(0.3, 0.2), cplx(1.2, -0.6), cplx(0.0, 0.5)}) {
    const SL2C x = rotation(0.7) * exp_h(w);
    const cplx got = crown_radial(x);
    CHECK(std::abs(std::cosh(2.0 * got) - std::cosh(2.0 * w)) <= 1e-12 * std::abs(std::cosh(2.0 * w)));
    CHECK(got.real() >= 0);
  }
  CHECK_THROWS_AS(crown_radial(exp_h(cplx(0, 0.8))), std::domain_error);
}

TEST_CASE("heat transform: direct against spectral and equivariance") {
  const double t = 0.5, width = 1.5;
  const auto prof = RadialGrid::sample(24, width, [&](double r) { return bump_profile(r, width); });
  const SL2C center = exp_h(0);
  const std::vector<SL2C> pts = {exp_h(cplx(0.2, 0.1)), rotation(0.4) * exp_h(cplx(0.8, -0.3)),
                                 exp_h(cplx(0.5, 0))};
  const auto direct = heat_transform(prof, center, t, pts);
  const auto spec = heat_transform_spectral(prof, center, t, pts);
  for (std::size_t i = 0; i < pts.size(); ++i) CHECK(std::abs(direct[i] - spec[i]) <= 1e-6 * (1 + std::abs(spec[i])));
  // real point gives a real value
  CHECK(std::abs(direct[2].imag()) <= 1e-12);
  // moving the profile center by g moves the transform
  const SL2C g = SL2C::real(1.2, 0.3, 0.5, (1 + 0.3 * 0.5) / 1.2);
  std::vector<SL2C> moved;
  for (const auto& p : pts) moved.push_back(g * p);
  const auto shifted = heat_transform(prof, g * center, t, moved);
  for (std::size_t i = 0; i < pts.size(); ++i)
    CHECK(std::abs(shifted[i] - direct[i]) <= 1e-6 * (1 + std::abs(direct[i])));
  CHECK_THROWS_AS(heat_transform(prof, center, t, {exp_h(cplx(0, 0.9))}), std::domain_error);
  CHECK(bump_profile(0, width) == doctest::Approx(1.0));
  CHECK(bump_profile(width, width) == 0);
}
