#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "crown/quadrature.hpp"
#include "crown/sl2lab.hpp"

namespace crown::sl2 {

/// Heat kernel on SL(2,R)/SO(2) in the sl2lab normalization:
///   k_t(exp(r H)) = c int_0^Lmax exp(-t (nu^2/2 + 1/8)) phi_{i nu}(r) nu tanh(pi nu) d nu
/// with G/K measure dmu = sinh(2 r) dr dk (dk the probability measure on K).
struct HeatOptions {
  int nu_nodes = 256;         ///< Gauss-Legendre nodes on [0, Lmax]
  double lambda_scale = 8.0;  ///< Lmax = lambda_scale / sqrt(t)
  double y_step = 0.0;        ///< K rule step in y = log tan(theta); 0 selects min(0.1, 2.5 / Lmax)
  double y_margin = 40.0;
  int table_degree = 48;      ///< Chebyshev degree per unit panel of the nu integral
  double max_radius = 0.0;    ///< real radii covered by the table; 0 selects 2 + 6 sqrt(t)
  double crown_nu_step = 0.05;  ///< equispaced nu rule for complex arguments
  double crown_y_step = 0.0;   ///< 0 selects min(0.2, 2.5 / crown cutoff); capped at 0.3 (pi/4 - |Im w|)
  double crown_y_margin = 32.0;
};

/// Value of c for this normalization, 2 = 4 pi / (2 pi).
inline constexpr double kHeatConstantTheory = 2.0;

template <class T>
class HeatKernel {
 public:
  using complex_type = std::complex<T>;

  /// Throws std::invalid_argument for t <= 0.
  HeatKernel(T t, T c, const HeatOptions& opt = {});

  T t() const { return t_; }
  T c() const { return c_; }
  T lambda_max() const { return lmax_; }
  T y_step() const { return ystep_; }
  T max_radius() const { return radius_; }
  const HeatOptions& options() const { return opt_; }

  /// int_0^Lmax exp(-t casimir(nu)) nu tanh(pi nu) cos(nu L) d nu, direct sum.
  T nu_integral(T L) const;
  /// k_t at exp(r H) through the tabulated nu integral; |r| <= max_radius().
  T operator()(T r) const;
  /// Same value without the table.
  T direct(T r) const;
  /// Holomorphic extension to complex radial w with |Im w| < pi/4.
  complex_type crown(complex_type w) const;

 private:
  T t_, c_, lmax_, radius_, ystep_;
  HeatOptions opt_;
  quad::Rule nu_rule_;
  std::vector<T> nu_weight_;  ///< GL weight * exp(-t casimir) * nu tanh(pi nu)
  quad::ChebyshevTable<T> table_;
};

extern template class HeatKernel<double>;
extern template class HeatKernel<long double>;

/// Raised when a radial profile does not decay inside its grid.
struct TailError : std::runtime_error {
  double tail = 0;
  TailError(const std::string& what, double tail_mass) : std::runtime_error(what), tail(tail_mass) {}
};

/// A radial function on G/K sampled at Gauss-Legendre radii on [0, R];
/// weights carry the measure sinh(2 r) dr.
template <class T>
struct RadialGridT {
  std::vector<T> r;
  std::vector<T> values;
  std::vector<T> weights;

  /// n nodes on [0, radius]; values zero.
  static RadialGridT make(int n, T radius);
  /// Samples `f` on a fresh n-node grid.
  template <class F>
  static RadialGridT sample(int n, T radius, F&& f) {
    RadialGridT g = make(n, radius);
    for (std::size_t i = 0; i < g.r.size(); ++i) g.values[i] = f(g.r[i]);
    return g;
  }
  T radius() const { return r_max; }
  T r_max = 0;
};
using RadialGrid = RadialGridT<double>;

extern template struct RadialGridT<double>;
extern template struct RadialGridT<long double>;

/// phi_{i nu}(exp(r H)) for real r by the K rule in y with the given step and margin.
template <class T>
T spherical_real(T nu, T r, T y_step, T y_margin);

/// f^(nu) = int f phi_{-i nu} dmu.  Throws TailError if |f| sinh(2 r) at the
/// outermost node exceeds `tail_tol` times its maximum.
template <class T>
T spherical_transform(const RadialGridT<T>& f, T nu, T y_step = T(0.1), T y_margin = T(40), T tail_tol = T(1e-8));

/// Transform on the equispaced grid nu_k = k * nu_step, k = 0..count-1.
template <class T>
std::vector<T> spherical_transform_grid(const RadialGridT<T>& f, T nu_step, int count, T y_step = T(0.1),
                                        T y_margin = T(40), T tail_tol = T(1e-8));

struct CalibrationReport {
  double c = 0;
  std::vector<double> t;
  std::vector<double> value;  ///< (k_t * bump)(o) with c = 1
  double extrapolated = 0;
  double bump_width = 0;
};

/// Fits c so that (k_t * f)(o) -> f(o) as t -> 0 for f = exp(-r^2 / sigma^2),
/// by polynomial extrapolation of the c = 1 values at small t.
CalibrationReport calibrate_heat_constant(const HeatOptions& opt = {}, double sigma = 3.0,
                                          std::vector<double> t = {0.025, 0.05, 0.1, 0.2});
/// Calibrated constant with default options, computed once.
double heat_constant();

/// int k_t dmu by radial Gauss-Legendre quadrature.
double heat_mass(double t, int radial_nodes = 2000);

struct HeatPositivity {
  double min_value = 0;
  double at_radius = 0;
  bool positive = false;
};
/// Minimum of k_t over radii in [0, 3 sqrt(t)], where the kernel stays far
/// above the quadrature roundoff floor.
HeatPositivity heat_positivity(double t, int samples = 400);

struct FourierCheck {
  double t = 0;
  double max_rel_err = 0;
  double worst_nu = 0;
  double tail = 0;
  std::vector<double> nu, value, target;
};

/// Transform of k_t against exp(-t casimir(nu)) on nu = 0, step, ..., nu_max,
/// computed in extended precision.
FourierCheck heat_fourier_check(double t, double nu_max = 8.0, double nu_step = 0.25, int radial_nodes = 2000);

struct SemigroupCheck {
  double t = 0, s = 0;
  double max_rel_err = 0;
  double worst_radius = 0;
  int points = 0;
  std::vector<double> r, convolved, direct;
};

/// Inverse transform of k^_t k^_s compared with k_{t+s} where k_{t+s} exceeds
/// 1e-6 of its maximum.  The inverse uses the trapezoid rule in nu, which is
/// spectrally accurate for the even integrand.
SemigroupCheck semigroup_check(double t, double s, double nu_step = 0.05, int radial_nodes = 400);

/// Complex radial coordinate w of the crown point x K_C, cosh(2w) = tr(x x^t)/2,
/// Re w >= 0.  Throws std::domain_error unless |Im w| < pi/4.
cplx crown_radial(const SL2C& x);

struct HeatTransformOptions {
  int angular_nodes = 48;
  HeatOptions heat{};
};

/// H_t f at crown points for f(center k exp(r H) o) = profile(r), by quadrature
/// over the profile nodes times a trapezoid on K, with the holomorphically
/// extended kernel.  The profile must vanish at its grid radius.  Throws
/// std::domain_error for points outside the crown.
std::vector<cplx> heat_transform(const RadialGrid& profile, const SL2C& center, double t,
                                 const std::vector<SL2C>& points, const HeatTransformOptions& opt = {});

/// Same values through the transform of the profile:
///   c int f^(nu) exp(-t casimir(nu)) phi_{i nu}(w) nu tanh(pi nu) d nu.
std::vector<cplx> heat_transform_spectral(const RadialGrid& profile, const SL2C& center, double t,
                                          const std::vector<SL2C>& points, int nu_nodes = 200);

/// exp(-1 / (1 - (r/width)^2)) inside r < width, normalized to 1 at 0.
double bump_profile(double r, double width);

}  // namespace crown::sl2
