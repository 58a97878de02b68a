#include "crown/sl2lab.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace crown::sl2 {
namespace {

constexpr double kPi = std::numbers::pi;

// log(1 + e^u) for |Im u| < pi, continuous in u.
cplx softplus(cplx u) {
  if (u.real() > 0) return u + std::log(1.0 + std::exp(-u));
  return std::log(1.0 + std::exp(u));
}

IwasawaTriple assemble(const Mat2& x, cplx sqrt_q, cplx log_a) {
  const cplx c = x(1, 0), d = x(1, 1);
  IwasawaTriple t;
  t.log_a = log_a;
  t.k << d / sqrt_q, -c / sqrt_q, c / sqrt_q, d / sqrt_q;
  t.a << std::exp(log_a), 0, 0, std::exp(-log_a);
  Mat2 kinv, ainv;
  kinv << t.k(1, 1), -t.k(0, 1), -t.k(1, 0), t.k(0, 0);
  ainv << std::exp(-log_a), 0, 0, std::exp(log_a);
  t.n = x * kinv * ainv;
  t.n(1, 0) = 0;
  t.n(0, 0) = t.n(1, 1) = 1;
  t.residual = (t.n * t.a * t.k - x).cwiseAbs().maxCoeff();
  return t;
}

}  // namespace

SL2C SL2C::make(const Mat2& m, double tol) {
  const cplx det = m.determinant();
  if (!(std::abs(det - 1.0) <= tol)) {
    std::ostringstream os;
    os << "SL2C: |det - 1| = " << std::abs(det - 1.0);
    throw std::invalid_argument(os.str());
  }
  return SL2C{m};
}

SL2C SL2C::real(double a, double b, double c, double d) {
  Mat2 m;
  m << a, b, c, d;
  return make(m);
}

SL2C SL2C::inverse() const {
  Mat2 r;
  r << m(1, 1), -m(0, 1), -m(1, 0), m(0, 0);
  return SL2C{r};
}

SL2C exp_h(cplx z) {
  Mat2 m;
  m << std::exp(z), 0, 0, std::exp(-z);
  return SL2C{m};
}

SL2C rotation(cplx phi) {
  Mat2 m;
  m << std::cos(phi), -std::sin(phi), std::sin(phi), std::cos(phi);
  return SL2C{m};
}

SL2C unipotent(cplx x) {
  Mat2 m;
  m << 1, x, 0, 1;
  return SL2C{m};
}

IwasawaTriple iwasawa_real(const SL2C& g) {
  if (g.m.imag().cwiseAbs().maxCoeff() > 0) throw std::invalid_argument("iwasawa_real: complex entries");
  const double c = g.m(1, 0).real(), d = g.m(1, 1).real();
  const double q = c * c + d * d;
  if (!(q > 0)) throw std::invalid_argument("iwasawa_real: zero bottom row");
  return assemble(g.m, std::sqrt(q), -0.5 * std::log(q));
}

IwasawaTriple iwasawa_holo(const SL2C& x, int steps) {
  if (steps < 1) throw std::invalid_argument("iwasawa_holo: steps must be positive");
  const Mat2 re = x.m.real().cast<cplx>();
  const Mat2 im = x.m.imag().cast<cplx>();
  auto q_at = [&](double s) {
    const cplx c = re(1, 0) + s * cplx(0, 1) * im(1, 0);
    const cplx d = re(1, 1) + s * cplx(0, 1) * im(1, 1);
    return c * c + d * d;
  };
  cplx q = q_at(0);
  if (!(std::abs(q) > 0)) throw BranchError("iwasawa_holo: real seed has zero bottom row");
  double arg = std::arg(q);
  for (int i = 1; i <= steps; ++i) {
    const cplx qn = q_at(static_cast<double>(i) / steps);
    if (!(std::abs(qn) > 0)) throw BranchError("iwasawa_holo: continuation hits q = 0");
    double da = std::arg(qn) - std::arg(q);
    if (da > kPi) da -= 2 * kPi;
    if (da < -kPi) da += 2 * kPi;
    arg += da;
    q = qn;
    if (std::abs(arg) >= kPi / 2) {
      std::ostringstream os;
      os << "iwasawa_holo: arg q = " << arg << " leaves (-pi/2, pi/2) at s = " << static_cast<double>(i) / steps;
      throw BranchError(os.str());
    }
  }
  const double mod = std::abs(q);
  const cplx log_q(std::log(mod), arg);
  return assemble(x.m, std::exp(0.5 * log_q), -0.5 * log_q);
}

cplx iwasawa_holo_a(const SL2C& x, int steps) { return iwasawa_holo(x, steps).log_a; }

cplx spherical(cplx lambda_c, const SL2C& x, int nodes) {
  if (nodes < 1) throw std::invalid_argument("spherical: nodes must be positive");
  cplx sum = 0;
  for (int j = 0; j < nodes; ++j) {
    const double phi = 2 * kPi * j / nodes;
    const cplx log_a = iwasawa_holo_a(rotation(phi) * x);
    sum += std::exp((1.0 - 2.0 * lambda_c) * log_a);
  }
  return sum / static_cast<double>(nodes);
}

cplx spherical_radial(cplx lambda_c, cplx w, const RadialRule& rule) {
  if (!(std::abs(w.imag()) < kPi / 4)) throw std::domain_error("spherical_radial: |Im w| >= pi/4");
  // the integrand changes near y = 0 and y = -2 Re w; its singularities sit at
  // distance 2 (pi/4 - |Im w|) from the real y axis
  const double h = std::min(rule.step, 0.3 * (kPi / 4 - std::abs(w.imag())));
  const int n = static_cast<int>(std::ceil((std::abs(w.real()) + rule.margin) / h));
  const cplx ex = lambda_c - 0.5;
  cplx sum = 0;
  for (int i = -n; i <= n; ++i) {
    const double y = -w.real() + i * h;
    const cplx L = -2.0 * w + softplus(2.0 * y + 4.0 * w) - softplus(cplx(2.0 * y, 0));
    sum += std::exp(ex * L) / std::cosh(y);
  }
  return sum * h / kPi;
}

double s_pi(double nu, double theta, const SProfileOptions& opt) {
  if (!(std::abs(theta) < kPi / 4)) throw std::domain_error("s_pi: |theta| >= pi/4");
  const double c2 = std::cos(2 * theta), s2 = std::sin(2 * theta);
  auto f = [&](double phi) {
    const double u = std::cos(2 * phi);
    const double mod2 = c2 * c2 + s2 * s2 * u * u;
    const double arg = std::atan2(-s2 * u, c2);
    return std::exp(-2 * nu * arg) / std::sqrt(mod2);
  };
  // period pi in phi; reuse previous nodes on each doubling
  int n = opt.initial_nodes;
  double sum = 0;
  for (int j = 0; j < n; ++j) sum += f(kPi * j / n);
  double est = sum / n;
  while (n < opt.max_nodes) {
    double add = 0;
    for (int j = 0; j < n; ++j) add += f(kPi * (j + 0.5) / n);
    sum += add;
    n *= 2;
    const double next = sum / n;
    const bool done = std::abs(next - est) <= opt.rel_tol * std::abs(next);
    est = next;
    if (done) return est;
  }
  std::ostringstream os;
  os << "s_pi: no convergence at theta = " << theta << " with " << n << " nodes";
  throw std::runtime_error(os.str());
}

std::vector<double> s_pi_profile(double nu, const std::vector<double>& theta, const SProfileOptions& opt) {
  for (double t : theta)
    if (!(std::abs(t) < kPi / 4)) throw std::domain_error("s_pi_profile: grid point outside ]-pi/4, pi/4[");
  std::vector<double> out;
  out.reserve(theta.size());
  for (double t : theta) out.push_back(s_pi(nu, t, opt));
  return out;
}

BlowupResult blowup_probe(double nu, const std::vector<double>& eps, const SProfileOptions& opt) {
  BlowupResult r;
  for (double e : eps) {
    if (!(e > 0 && e <= 1)) {
      r.failures.push_back("eps out of (0, 1]");
      continue;
    }
    try {
      r.s.push_back(s_pi(nu, (1 - e) * kPi / 4, opt));
      r.eps.push_back(e);
    } catch (const std::exception& ex) {
      r.failures.push_back(ex.what());
    }
  }
  const std::size_t m = r.eps.size();
  if (m < 2) return r;
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < m; ++i) {
    sx += -std::log(r.eps[i]);
    sy += r.s[i];
  }
  const double mx = sx / m, my = sy / m;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const double dx = -std::log(r.eps[i]) - mx, dy = r.s[i] - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx > 0) {
    r.slope = sxy / sxx;
    r.intercept = my - r.slope * mx;
    r.r2 = syy > 0 ? sxy * sxy / (sxx * syy) : 1.0;
  }
  return r;
}

}  // namespace crown::sl2
