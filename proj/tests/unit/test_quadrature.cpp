#include <cmath>
#include <complex>

#include "crown/quadrature.hpp"
#include "doctest.h"

using namespace crown::quad;

TEST_CASE("Gauss-Legendre integrates polynomials of degree 2n-1 exactly") {
  for (int n : {1, 2, 5, 16, 64}) {
    const Rule r = gauss_legendre(n, 0, 2);
    for (int k = 0; k <= 2 * n - 1; ++k) {
      long double acc = 0;
      for (std::size_t i = 0; i < r.x.size(); ++i) acc += r.w[i] * std::pow(r.x[i], k);
      const long double want = std::pow(2.0L, k + 1) / (k + 1);
      CAPTURE(n);
      CAPTURE(k);
      CHECK(std::abs(acc - want) <= 1e-15L * want);
    }
  }
}

TEST_CASE("Gauss-Legendre nodes are ordered and weights positive") {
  const Rule r = gauss_legendre(100);
  long double sum = 0;
  for (std::size_t i = 0; i < r.x.size(); ++i) {
    CHECK(r.w[i] > 0);
    if (i) CHECK(r.x[i] > r.x[i - 1]);
    sum += r.w[i];
  }
  CHECK(std::abs(sum - 2) <= 1e-16L);
}

TEST_CASE("Chebyshev table reproduces entire functions on and off the axis") {
  ChebyshevTable<double> t([](double x) { return std::cos(3 * x) * std::exp(-x / 4); }, 0.0, 6.0, 6, 24);
  for (double x = 0; x <= 6; x += 0.0137) CHECK(std::abs(t(x) - std::cos(3 * x) * std::exp(-x / 4)) <= 1e-13);
  for (double x = 0.2; x <= 5.8; x += 0.31) {
    const std::complex<double> z(x, 0.2);
    const auto want = std::cos(3.0 * z) * std::exp(-z / 4.0);
    CHECK(std::abs(t(z) - want) <= 1e-8);
  }
  CHECK(t.covers(6.0));
  CHECK_FALSE(t.covers(6.1));
}
