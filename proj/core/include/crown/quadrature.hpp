#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace crown::quad {

struct Rule {
  std::vector<long double> x;
  std::vector<long double> w;
};

/// n-point Gauss-Legendre rule on [a, b], nodes by Newton iteration in long
/// double.  Rules on [-1, 1] are cached per n.
Rule gauss_legendre(int n, long double a = -1, long double b = 1);

/// Piecewise Chebyshev interpolant of a real function on [a, b] with equal
/// panels.  Evaluation at complex points continues each panel polynomial,
/// which is accurate inside the Bernstein ellipse of the panel for entire
/// functions of moderate growth.
template <class T>
class ChebyshevTable {
 public:
  ChebyshevTable() = default;
  ChebyshevTable(const std::function<T(T)>& f, T a, T b, int panels, int degree);

  T lo() const { return a_; }
  T hi() const { return b_; }
  bool covers(T x) const { return x >= a_ && x <= b_; }
  T operator()(T x) const;
  std::complex<T> operator()(std::complex<T> z) const;

 private:
  int panel_of(T x) const;
  T a_ = 0, b_ = 0, width_ = 1;
  int panels_ = 0, degree_ = 0;
  std::vector<std::vector<T>> coef_;
};

extern template class ChebyshevTable<double>;
extern template class ChebyshevTable<long double>;

}  // namespace crown::quad
