#include "crown/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace crown::quad {
namespace {

Rule legendre_unit(int n) {
  Rule r;
  r.x.resize(static_cast<std::size_t>(n));
  r.w.resize(static_cast<std::size_t>(n));
  const long double pi = std::numbers::pi_v<long double>;
  for (int i = 0; i < (n + 1) / 2; ++i) {
    long double x = std::cos(pi * (i + 0.75L) / (n + 0.5L));
    long double dp = 0;
    for (int it = 0; it < 100; ++it) {
      long double p0 = 1, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const long double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1;
      dp = n * (x * p1 - p0) / (x * x - 1);
      const long double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-21L) break;
    }
    {
      long double p0 = 1, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const long double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1;
      dp = n * (x * p1 - p0) / (x * x - 1);
    }
    const long double w = 2 / ((1 - x * x) * dp * dp);
    r.x[static_cast<std::size_t>(i)] = -x;
    r.x[static_cast<std::size_t>(n - 1 - i)] = x;
    r.w[static_cast<std::size_t>(i)] = w;
    r.w[static_cast<std::size_t>(n - 1 - i)] = w;
  }
  return r;
}

}  // namespace

Rule gauss_legendre(int n, long double a, long double b) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be positive");
  if (!(b > a)) throw std::invalid_argument("gauss_legendre: empty interval");
  static std::mutex mu;
  static std::map<int, Rule> cache;
  Rule unit;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, legendre_unit(n)).first;
    unit = it->second;
  }
  const long double half = (b - a) / 2, mid = (a + b) / 2;
  for (std::size_t i = 0; i < unit.x.size(); ++i) {
    unit.x[i] = mid + half * unit.x[i];
    unit.w[i] *= half;
  }
  return unit;
}

template <class T>
ChebyshevTable<T>::ChebyshevTable(const std::function<T(T)>& f, T a, T b, int panels, int degree)
    : a_(a), b_(b), panels_(panels), degree_(degree) {
  if (!(b > a) || panels < 1 || degree < 1) throw std::invalid_argument("ChebyshevTable: bad layout");
  width_ = (b - a) / panels;
  const T pi = std::numbers::pi_v<T>;
  const int m = degree + 1;
  std::vector<T> vals(static_cast<std::size_t>(m));
  coef_.assign(static_cast<std::size_t>(panels), std::vector<T>(static_cast<std::size_t>(m)));
  for (int p = 0; p < panels; ++p) {
    const T lo = a + p * width_, mid = lo + width_ / 2;
    for (int k = 0; k < m; ++k) vals[static_cast<std::size_t>(k)] = f(mid + width_ / 2 * std::cos(pi * (k + T(0.5)) / m));
    for (int j = 0; j < m; ++j) {
      T s = 0;
      for (int k = 0; k < m; ++k) s += vals[static_cast<std::size_t>(k)] * std::cos(pi * j * (k + T(0.5)) / m);
      coef_[static_cast<std::size_t>(p)][static_cast<std::size_t>(j)] = (j == 0 ? T(1) : T(2)) * s / m;
    }
  }
}

template <class T>
int ChebyshevTable<T>::panel_of(T x) const {
  int p = static_cast<int>(std::floor((x - a_) / width_));
  return std::clamp(p, 0, panels_ - 1);
}

template <class T>
T ChebyshevTable<T>::operator()(T x) const {
  const int p = panel_of(x);
  const T u = (x - (a_ + p * width_ + width_ / 2)) / (width_ / 2);
  const auto& c = coef_[static_cast<std::size_t>(p)];
  T b1 = 0, b2 = 0;
  for (int j = degree_; j >= 1; --j) {
    const T b0 = 2 * u * b1 - b2 + c[static_cast<std::size_t>(j)];
    b2 = b1;
    b1 = b0;
  }
  return u * b1 - b2 + c[0];
}

template <class T>
std::complex<T> ChebyshevTable<T>::operator()(std::complex<T> z) const {
  const int p = panel_of(z.real());
  const std::complex<T> u = (z - (a_ + p * width_ + width_ / 2)) / (width_ / 2);
  const auto& c = coef_[static_cast<std::size_t>(p)];
  std::complex<T> b1 = 0, b2 = 0;
  for (int j = degree_; j >= 1; --j) {
    const std::complex<T> b0 = T(2) * u * b1 - b2 + c[static_cast<std::size_t>(j)];
    b2 = b1;
    b1 = b0;
  }
  return u * b1 - b2 + c[0];
}

template class ChebyshevTable<double>;
template class ChebyshevTable<long double>;

}  // namespace crown::quad
