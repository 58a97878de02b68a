#include "crown/heat.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <sstream>

namespace crown::sl2 {
namespace {

template <class T>
T softplus(T u) {
  return u > 0 ? u + std::log1p(std::exp(-u)) : std::log1p(std::exp(u));
}

template <class T>
std::complex<T> softplus(std::complex<T> u) {
  if (u.real() > 0) return u + std::log(T(1) + std::exp(-u));
  return std::log(T(1) + std::exp(u));
}

template <class T>
T casimir_t(T nu) {
  return nu * nu / 2 + T(0.125);
}

// Calls g(L, weight) over the K rule for exp(w H), weight = (h/pi) sech(y) q^-1/2.
// The integrand changes near y = 0 and y = -2 Re w.
template <class T, class W, class G>
void k_rule(W w, T step, T margin, G&& g) {
  const T pi = std::numbers::pi_v<T>;
  const T re = std::real(w);
  const T center = -re;
  const int n = static_cast<int>(std::ceil((std::abs(re) + margin) / step));
  for (int i = -n; i <= n; ++i) {
    const T y = center + i * step;
    const W L = W(-2) * w + softplus(W(2 * y) + W(4) * w) - softplus(W(2 * y));
    g(L, step / pi / std::cosh(y) * std::exp(-L / W(2)));
  }
}

// |f| sinh(2 r) at the outermost node relative to its maximum over the grid.
template <class T>
T tail_fraction(const RadialGridT<T>& f) {
  T peak = 0;
  for (std::size_t i = 0; i < f.r.size(); ++i) peak = std::max(peak, std::abs(f.values[i]) * std::sinh(2 * f.r[i]));
  if (f.r.empty() || !(peak > 0)) return T(0);
  return std::abs(f.values.back()) * std::sinh(2 * f.r.back()) / peak;
}

template <class T>
void require_tail(const RadialGridT<T>& f, T tol) {
  const T tail = tail_fraction(f);
  if (tail > tol) {
    std::ostringstream os;
    os << "spherical_transform: edge value " << static_cast<double>(tail) << " of the peak exceeds " << static_cast<double>(tol);
    throw TailError(os.str(), static_cast<double>(tail));
  }
}

}  // namespace

template <class T>
HeatKernel<T>::HeatKernel(T t, T c, const HeatOptions& opt) : t_(t), c_(c), opt_(opt) {
  if (!(t > 0)) throw std::invalid_argument("HeatKernel: t must be positive");
  const T pi = std::numbers::pi_v<T>;
  lmax_ = T(opt.lambda_scale) / std::sqrt(t);
  ystep_ = opt.y_step > 0 ? T(opt.y_step) : std::min(T(0.1), T(2.5) / lmax_);
  radius_ = opt.max_radius > 0 ? T(opt.max_radius) : T(2) + 6 * std::sqrt(t);
  nu_rule_ = quad::gauss_legendre(opt.nu_nodes, 0, static_cast<long double>(lmax_));
  nu_weight_.resize(nu_rule_.x.size());
  for (std::size_t k = 0; k < nu_rule_.x.size(); ++k) {
    const T nu = static_cast<T>(nu_rule_.x[k]);
    nu_weight_[k] = static_cast<T>(nu_rule_.w[k]) * std::exp(-t * casimir_t(nu)) * nu * std::tanh(pi * nu);
  }
  const T span = 4 * radius_ + 2;
  const T width = std::min(T(1), T(2 * opt.table_degree) / (3 * lmax_));
  const int panels = static_cast<int>(std::ceil(span / width));
  table_ = quad::ChebyshevTable<T>([this](T L) { return nu_integral(L); }, -span / 2, span / 2, panels,
                                   opt.table_degree);
}

template <class T>
T HeatKernel<T>::nu_integral(T L) const {
  T s = 0;
  for (std::size_t k = 0; k < nu_weight_.size(); ++k) s += nu_weight_[k] * std::cos(static_cast<T>(nu_rule_.x[k]) * L);
  return s;
}

template <class T>
T HeatKernel<T>::operator()(T r) const {
  r = std::abs(r);
  if (r > radius_) throw std::out_of_range("HeatKernel: radius beyond the tabulated range");
  T s = 0;
  k_rule<T>(r, ystep_, T(opt_.y_margin), [&](T L, T wt) { s += wt * table_(L); });
  return c_ * s;
}

template <class T>
T HeatKernel<T>::direct(T r) const {
  r = std::abs(r);
  T s = 0;
  k_rule<T>(r, ystep_, T(opt_.y_margin), [&](T L, T wt) { s += wt * nu_integral(L); });
  return c_ * s;
}

template <class T>
typename HeatKernel<T>::complex_type HeatKernel<T>::crown(complex_type w) const {
  const T pi = std::numbers::pi_v<T>;
  if (!(std::abs(w.imag()) < pi / 4)) throw std::domain_error("HeatKernel::crown: |Im w| >= pi/4");
  if (w.real() < 0) w = -w;
  T b = 0;
  k_rule<T>(w, T(0.25), T(opt_.crown_y_margin), [&](complex_type L, complex_type) { b = std::max(b, std::abs(L.imag())); });
  // cos(nu L) grows like exp(nu |Im L|); the Gaussian peak moves to nu = |Im L| / t
  const T h = T(opt_.crown_nu_step);
  const T lmax = T(opt_.lambda_scale) / std::sqrt(t_) + b / t_;
  const T ystep = std::min(opt_.crown_y_step > 0 ? T(opt_.crown_y_step) : std::min(T(0.2), T(2.5) / lmax),
                           T(0.3) * (pi / 4 - std::abs(w.imag())));
  std::vector<complex_type> Ls, wts;
  k_rule<T>(w, ystep, T(opt_.crown_y_margin), [&](complex_type L, complex_type wt) {
    Ls.push_back(L);
    wts.push_back(wt);
  });
  const int m = static_cast<int>(std::ceil(lmax / h));
  std::vector<T> nw(static_cast<std::size_t>(m + 1));
  for (int k = 0; k <= m; ++k) {
    const T nu = k * h;
    nw[static_cast<std::size_t>(k)] = h * std::exp(-t_ * casimir_t(nu)) * nu * std::tanh(pi * nu);
  }
  complex_type total = 0;
  for (std::size_t i = 0; i < Ls.size(); ++i) {
    const complex_type c1 = std::cos(h * Ls[i]);
    complex_type prev = 1, cur = c1, g = 0;
    for (int k = 1; k <= m; ++k) {
      g += nw[static_cast<std::size_t>(k)] * cur;
      const complex_type next = T(2) * c1 * cur - prev;
      prev = cur;
      cur = next;
    }
    total += wts[i] * g;
  }
  return c_ * total;
}

template class HeatKernel<double>;
template class HeatKernel<long double>;

template <class T>
RadialGridT<T> RadialGridT<T>::make(int n, T radius) {
  if (!(radius > 0)) throw std::invalid_argument("RadialGrid: radius must be positive");
  const quad::Rule rule = quad::gauss_legendre(n, 0, static_cast<long double>(radius));
  RadialGridT g;
  g.r_max = radius;
  g.r.resize(rule.x.size());
  g.values.assign(rule.x.size(), T(0));
  g.weights.resize(rule.x.size());
  for (std::size_t i = 0; i < rule.x.size(); ++i) {
    g.r[i] = static_cast<T>(rule.x[i]);
    g.weights[i] = static_cast<T>(rule.w[i]) * std::sinh(2 * g.r[i]);
  }
  return g;
}

template struct RadialGridT<double>;
template struct RadialGridT<long double>;

template <class T>
T spherical_real(T nu, T r, T y_step, T y_margin) {
  T s = 0;
  k_rule<T>(r, y_step, y_margin, [&](T L, T wt) { s += wt * std::cos(nu * L); });
  return s;
}

template <class T>
T spherical_transform(const RadialGridT<T>& f, T nu, T y_step, T y_margin, T tail_tol) {
  require_tail(f, tail_tol);
  T s = 0;
  for (std::size_t i = 0; i < f.r.size(); ++i)
    if (f.values[i] != 0) s += f.weights[i] * f.values[i] * spherical_real(nu, f.r[i], y_step, y_margin);
  return s;
}

template <class T>
std::vector<T> spherical_transform_grid(const RadialGridT<T>& f, T nu_step, int count, T y_step, T y_margin,
                                        T tail_tol) {
  require_tail(f, tail_tol);
  std::vector<T> out(static_cast<std::size_t>(std::max(count, 0)), T(0));
  if (count <= 0) return out;
  for (std::size_t i = 0; i < f.r.size(); ++i) {
    if (f.values[i] == 0) continue;
    const T fw = f.weights[i] * f.values[i];
    k_rule<T>(f.r[i], y_step, y_margin, [&](T L, T wt) {
      const T base = fw * wt;
      const T c1 = std::cos(nu_step * L);
      T prev = 1, cur = c1;
      out[0] += base;
      for (int k = 1; k < count; ++k) {
        out[static_cast<std::size_t>(k)] += base * cur;
        const T next = 2 * c1 * cur - prev;
        prev = cur;
        cur = next;
      }
    });
  }
  return out;
}

template double spherical_real<double>(double, double, double, double);
template long double spherical_real<long double>(long double, long double, long double, long double);
template double spherical_transform<double>(const RadialGridT<double>&, double, double, double, double);
template long double spherical_transform<long double>(const RadialGridT<long double>&, long double, long double,
                                                      long double, long double);
template std::vector<double> spherical_transform_grid<double>(const RadialGridT<double>&, double, int, double, double,
                                                              double);
template std::vector<long double> spherical_transform_grid<long double>(const RadialGridT<long double>&, long double,
                                                                        int, long double, long double, long double);

CalibrationReport calibrate_heat_constant(const HeatOptions& opt, double sigma, std::vector<double> t) {
  if (t.size() < 2) throw std::invalid_argument("calibrate_heat_constant: need at least two times");
  CalibrationReport rep;
  rep.t = t;
  rep.bump_width = sigma;
  for (double ti : t) {
    const HeatKernel<double> k(ti, 1.0, opt);
    const RadialGrid g = RadialGrid::sample(600, 1 + 6 * std::sqrt(ti), k);
    double v = 0;
    for (std::size_t i = 0; i < g.r.size(); ++i) v += g.weights[i] * g.values[i] * std::exp(-g.r[i] * g.r[i] / (sigma * sigma));
    rep.value.push_back(v);
  }
  // Lagrange extrapolation to t = 0
  double v0 = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    double l = 1;
    for (std::size_t j = 0; j < t.size(); ++j)
      if (j != i) l *= (0 - t[j]) / (t[i] - t[j]);
    v0 += l * rep.value[i];
  }
  rep.extrapolated = v0;
  rep.c = 1.0 / v0;
  return rep;
}

double heat_constant() {
  static std::once_flag once;
  static double c = 0;
  std::call_once(once, [] { c = calibrate_heat_constant().c; });
  return c;
}

double heat_mass(double t, int radial_nodes) {
  const HeatKernel<double> k(t, heat_constant());
  const RadialGrid g = RadialGrid::sample(radial_nodes, 1 + 6 * std::sqrt(t), k);
  double m = 0;
  for (std::size_t i = 0; i < g.r.size(); ++i) m += g.weights[i] * g.values[i];
  return m;
}

HeatPositivity heat_positivity(double t, int samples) {
  const HeatKernel<double> k(t, heat_constant());
  const double R = 3 * std::sqrt(t);
  HeatPositivity p;
  p.min_value = k(0.0);
  for (int i = 0; i <= samples; ++i) {
    const double r = R * i / samples;
    const double v = k(r);
    if (v < p.min_value) {
      p.min_value = v;
      p.at_radius = r;
    }
  }
  p.positive = p.min_value > 0;
  return p;
}

FourierCheck heat_fourier_check(double t, double nu_max, double nu_step, int radial_nodes) {
  using LD = long double;
  HeatOptions opt;
  opt.lambda_scale = 12.0;
  opt.y_step = 0.05;
  opt.y_margin = 48.0;
  const HeatKernel<LD> k(t, heat_constant(), opt);
  const LD R = 1 + 6 * std::sqrt(LD(t));
  const RadialGridT<LD> g = RadialGridT<LD>::sample(radial_nodes, R, k);
  const int count = static_cast<int>(std::floor(nu_max / nu_step + 1e-9)) + 1;
  const std::vector<LD> fh = spherical_transform_grid<LD>(g, nu_step, count, LD(opt.y_step), LD(opt.y_margin));
  FourierCheck out;
  out.t = t;
  out.tail = static_cast<double>(tail_fraction(g));
  for (int j = 0; j < count; ++j) {
    const LD nu = LD(j) * LD(nu_step);
    const LD target = std::exp(-LD(t) * casimir_t(nu));
    const LD rel = std::abs(fh[static_cast<std::size_t>(j)] - target) / target;
    out.nu.push_back(static_cast<double>(nu));
    out.value.push_back(static_cast<double>(fh[static_cast<std::size_t>(j)]));
    out.target.push_back(static_cast<double>(target));
    if (static_cast<double>(rel) > out.max_rel_err) {
      out.max_rel_err = static_cast<double>(rel);
      out.worst_nu = static_cast<double>(nu);
    }
  }
  return out;
}

SemigroupCheck semigroup_check(double t, double s, double nu_step, int radial_nodes) {
  if (!(t > 0 && s > 0)) throw std::invalid_argument("semigroup_check: t and s must be positive");
  const double c = heat_constant();
  const double pi = std::numbers::pi;
  const HeatKernel<double> kt(t, c), ks(s, c), kts(t + s, c);
  const double lmax = 8.0 / std::sqrt(t + s);
  const int count = static_cast<int>(std::ceil(lmax / nu_step)) + 1;
  const RadialGrid gt = RadialGrid::sample(radial_nodes, 1 + 6 * std::sqrt(t), kt);
  const RadialGrid gs = RadialGrid::sample(radial_nodes, 1 + 6 * std::sqrt(s), ks);
  const std::vector<double> ft = spherical_transform_grid(gt, nu_step, count);
  const std::vector<double> fs = spherical_transform_grid(gs, nu_step, count);
  std::vector<double> amp(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) {
    const double nu = k * nu_step;
    amp[static_cast<std::size_t>(k)] = c * nu_step * ft[static_cast<std::size_t>(k)] * fs[static_cast<std::size_t>(k)] * nu * std::tanh(pi * nu);
  }
  SemigroupCheck out;
  out.t = t;
  out.s = s;
  const double R = 1 + 6 * std::sqrt(t + s);
  const double peak = kts(0.0);
  for (int j = 0; j < 40; ++j) {
    const double r = R * j / 40;
    const double ref = kts(r);
    if (!(ref > 1e-6 * peak)) continue;
    double u = 0;
    k_rule<double>(r, 0.1, 40.0, [&](double L, double wt) {
      const double c1 = std::cos(nu_step * L);
      double prev = 1, cur = c1, acc = 0;
      for (int k = 1; k < count; ++k) {
        acc += amp[static_cast<std::size_t>(k)] * cur;
        const double next = 2 * c1 * cur - prev;
        prev = cur;
        cur = next;
      }
      u += wt * acc;
    });
    const double rel = std::abs(u - ref) / ref;
    out.r.push_back(r);
    out.convolved.push_back(u);
    out.direct.push_back(ref);
    ++out.points;
    if (rel > out.max_rel_err) {
      out.max_rel_err = rel;
      out.worst_radius = r;
    }
  }
  return out;
}

cplx crown_radial(const SL2C& x) {
  const cplx Z = 0.5 * (x.m * x.m.transpose()).trace();
  cplx w = 0.5 * std::acosh(Z);
  if (w.real() < 0) w = -w;
  if (!(std::abs(w.imag()) < std::numbers::pi / 4)) {
    std::ostringstream os;
    os << "crown_radial: Im w = " << w.imag() << " outside (-pi/4, pi/4)";
    throw std::domain_error(os.str());
  }
  return w;
}

std::vector<cplx> heat_transform(const RadialGrid& profile, const SL2C& center, double t,
                                 const std::vector<SL2C>& points, const HeatTransformOptions& opt) {
  const HeatKernel<double> k(t, heat_constant(), opt.heat);
  const int na = opt.angular_nodes;
  const double pi = std::numbers::pi;
  std::vector<SL2C> pulls;  // (center k_phi exp(r H))^{-1}
  std::vector<double> mass;
  for (std::size_t i = 0; i < profile.r.size(); ++i) {
    if (profile.values[i] == 0) continue;
    for (int j = 0; j < na; ++j) {
      const SL2C g = center * rotation(pi * j / na) * exp_h(profile.r[i]);
      pulls.push_back(g.inverse());
      mass.push_back(profile.weights[i] * profile.values[i] / na);
    }
  }
  std::vector<cplx> out;
  out.reserve(points.size());
  for (const SL2C& z : points) {
    cplx s = 0;
    for (std::size_t q = 0; q < pulls.size(); ++q) s += mass[q] * k.crown(crown_radial(pulls[q] * z));
    out.push_back(s);
  }
  return out;
}

std::vector<cplx> heat_transform_spectral(const RadialGrid& profile, const SL2C& center, double t,
                                          const std::vector<SL2C>& points, int nu_nodes) {
  const double c = heat_constant();
  const double pi = std::numbers::pi;
  std::vector<cplx> out;
  out.reserve(points.size());
  for (const SL2C& z : points) {
    const cplx w = crown_radial(center.inverse() * z);
    const double lmax = 8.0 / std::sqrt(t) + 2 * std::abs(w.imag()) / t;
    const quad::Rule rule = quad::gauss_legendre(nu_nodes, 0, lmax);
    cplx s = 0;
    for (std::size_t k = 0; k < rule.x.size(); ++k) {
      const double nu = static_cast<double>(rule.x[k]);
      const double fh = spherical_transform(profile, nu);
      s += static_cast<double>(rule.w[k]) * fh * std::exp(-t * casimir(nu)) * nu * std::tanh(pi * nu) *
           spherical_radial(cplx(0, nu), w);
    }
    out.push_back(c * s);
  }
  return out;
}

double bump_profile(double r, double width) {
  const double u = r / width;
  if (!(std::abs(u) < 1)) return 0;
  return std::exp(1 - 1 / (1 - u * u));
}

}  // namespace crown::sl2
