#include <cmath>
#include <numbers>
#include <random>

#include "crown/geom.hpp"
#include "doctest.h"

using namespace crown;
using namespace crown::geom;
using rootsys::build_from_name;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("jacobian block equals |sin 2a|") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> U(-10, 10);
  for (int i = 0; i < 10000; ++i) {
    const auto b = jacobian_block(U(rng));
    CHECK(std::abs(b.det_abs - b.sin2_abs) <= 1e-12);
  }
}

TEST_CASE("rank-one densities") {
  const auto a1 = build_from_name("A1");
  for (double x : {0.1, 0.35, -0.8}) {
    const auto d = measure_density(a1, {x / 2, -x / 2});
    CHECK(d.value == doctest::Approx(std::abs(std::sin(kPi * x))).epsilon(1e-14));
    CHECK(d.factors.size() == 1);
  }
  const auto bc1 = build_from_name("BC1");
  std::vector<int> m(bc1.roots.size());
  for (std::size_t i = 0; i < bc1.roots.size(); ++i) m[i] = abs(bc1.roots[i][0]) == Rational(2) ? 1 : 4;
  const double x = 0.3;
  const double want = std::pow(std::abs(std::sin(kPi * x)), 4) * std::abs(std::sin(2 * kPi * x));
  CHECK(measure_density(bc1, {x}, m).value == doctest::Approx(want).epsilon(1e-14));
}

TEST_CASE("density vanishes on walls and stays in [0, 1]") {
  const auto b2 = build_from_name("B2");
  CHECK(measure_density(b2, {0.4, 0.4}).value == doctest::Approx(0.0));
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> U(-0.45, 0.45);
  for (int i = 0; i < 100; ++i) {
    const double v = measure_density(b2, {U(rng), U(rng)}).value;
    CHECK(v >= 0);
    CHECK(v <= 1);
  }
}

TEST_CASE("exact cos^2 table") {
  // alpha(Y) = k/6 in units of pi/2, angle k pi/12
  CHECK(exact_cos_squared(Rational(0)) == QSqrt3{Rational(1), Rational(0)});
  CHECK(exact_cos_squared(Rational(1, 6)) == QSqrt3{Rational(1, 2), Rational(1, 4)});
  CHECK(exact_cos_squared(Rational(1, 3)) == QSqrt3{Rational(3, 4), Rational(0)});
  CHECK(exact_cos_squared(Rational(1, 2)) == QSqrt3{Rational(1, 2), Rational(0)});
  CHECK(exact_cos_squared(Rational(2, 3)) == QSqrt3{Rational(1, 4), Rational(0)});
  CHECK(exact_cos_squared(Rational(5, 6)) == QSqrt3{Rational(1, 2), Rational(-1, 4)});
  CHECK(exact_cos_squared(Rational(-1, 6)) == exact_cos_squared(Rational(1, 6)));
  CHECK_THROWS_AS(exact_cos_squared(Rational(1, 5)), std::domain_error);
}

TEST_CASE("exact density agrees with the floating evaluation") {
  for (const char* name : {"A2", "B2", "G2", "C3"}) {
    CAPTURE(name);
    const auto sys = build_from_name(name);
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<int> k(-1, 1);
    for (int i = 0; i < 30; ++i) {
      RatVec Y(sys.ambient_dim, sys.constraint);
      for (auto s : sys.simple) Y += Rational(k(rng), 6) * sys.roots[s];
      if (rootsys::classify_point(sys, Y).region != rootsys::Region::kInterior) continue;
      const double exact = exact_density(sys, Y).to_double();
      CHECK(exact == doctest::Approx(measure_density(sys, Y.to_double()).value).epsilon(1e-12));
    }
  }
  const auto b2 = build_from_name("B2");
  CHECK_THROWS_AS(exact_density(b2, RatVec{Rational(1, 7), Rational(0)}), std::domain_error);
}

TEST_CASE("QSqrt3 arithmetic") {
  const QSqrt3 x{Rational(1), Rational(1)}, y{Rational(2), Rational(-1)};
  // (1 + r)(2 - r) = 2 - 3 + r = -1 + r
  CHECK(x * y == QSqrt3{Rational(-1), Rational(1)});
  CHECK(x + y == QSqrt3{Rational(3), Rational(0)});
  CHECK(x.to_double() == doctest::Approx(1 + std::sqrt(3.0)));
}

TEST_CASE("crown metric on A1") {
  const auto a1 = build_from_name("A1");
  auto Y = zero_vector(a1);
  REQUIRE(Y.y.size() == 1);
  REQUIRE(Y.y[0].size() == 1);
  Y.y0[0] = {1, 0};
  Y.y0[1] = {-1, 0};
  Y.y[0][0] = {0.5, 2};
  const double x = 0.4;
  const double c = std::cos(kPi / 2 * x);
  CHECK(crown_metric_norm(a1, {x / 2, -x / 2}, Y) == doctest::Approx(2 + 2 * c * c * 4.25));
  CHECK_THROWS_AS(crown_metric_norm(a1, {0.5, -0.5}, Y), std::domain_error);
  auto bad = Y;
  bad.y[0].push_back({1, 0});
  CHECK_THROWS_AS(crown_metric_norm(a1, {0.1, -0.1}, bad), std::invalid_argument);
}

TEST_CASE("crown metric root part degenerates at the boundary") {
  const auto b2 = build_from_name("B2");
  auto Y = zero_vector(b2);
  for (auto& v : Y.y)
    for (auto& z : v) z = {1, 0};
  double prev = crown_metric_norm(b2, {0.0, 0.0}, Y);
  for (double s : {0.5, 0.9, 0.99, 0.999}) {
    const double n = crown_metric_norm(b2, {s, 0.0}, Y);
    CHECK(n < prev);
    prev = n;
  }
}

TEST_CASE("density is Weyl invariant") {
  const auto f4 = build_from_name("F4");
  const RatVec X{Rational(1, 10), Rational(1, 5), Rational(-3, 20), Rational(1, 40)};
  const double d0 = measure_density(f4, X.to_double()).value;
  for (const auto& Y : rootsys::weyl_orbit(f4, X)) {
    CHECK(measure_density(f4, Y.to_double()).value == doctest::Approx(d0).epsilon(1e-12));
  }
}
