#include "crown/geom.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace crown::geom {
namespace {

double root_value(const RatVec& alpha, const std::vector<double>& X) {
  double s = 0;
  for (std::size_t i = 0; i < X.size(); ++i) s += alpha[i].to_double() * X[i];
  return s;
}

void check_dim(const RootSystem& sys, const std::vector<double>& X) {
  if (X.size() != sys.ambient_dim) throw std::invalid_argument("geom: dimension mismatch");
  for (const auto& n : sys.flat_normals) {
    double s = 0, scale = 0;
    for (std::size_t i = 0; i < X.size(); ++i) {
      s += n[i].to_double() * X[i];
      scale += std::abs(X[i]);
    }
    if (std::abs(s) > 1e-12 * (1 + scale)) throw std::invalid_argument("geom: point outside the Cartan subspace");
  }
}

const std::vector<int>& mults(const RootSystem& sys, const std::vector<int>& m) {
  if (m.empty()) return sys.multiplicity;
  if (m.size() != sys.roots.size()) throw std::invalid_argument("geom: multiplicity table does not cover every root");
  return m;
}

// Integer k with alpha(Y) = k / 6, or throw.
int sixths(const Rational& v) {
  Rational k = v * Rational(6);
  if (!k.is_integer()) throw std::domain_error("exact mode needs alpha(Y) in (1/6)Z, got " + v.str());
  return static_cast<int>(((k.num() % 12) + 12) % 12);
}

// cos(k pi / 6), k mod 12.
QSqrt3 cos_sixth_pi(int k) {
  static const QSqrt3 table[12] = {
      {1, 0}, {0, Rational(1, 2)}, {Rational(1, 2), 0}, {0, 0}, {Rational(-1, 2), 0}, {0, Rational(-1, 2)},
      {-1, 0}, {0, Rational(-1, 2)}, {Rational(-1, 2), 0}, {0, 0}, {Rational(1, 2), 0}, {0, Rational(1, 2)}};
  return table[((k % 12) + 12) % 12];
}

}  // namespace

RootSpaceVector zero_vector(const RootSystem& sys) {
  RootSpaceVector v;
  v.y0.assign(sys.ambient_dim, 0.0);
  for (auto i : sys.positive) v.y.emplace_back(static_cast<std::size_t>(sys.multiplicity[i]), 0.0);
  return v;
}

double crown_metric_norm(const RootSystem& sys, const std::vector<double>& X, const RootSpaceVector& Y) {
  check_dim(sys, X);
  if (Y.y0.size() != sys.ambient_dim || Y.y.size() != sys.positive.size())
    throw std::invalid_argument("crown_metric_norm: tangent vector shape mismatch");
  double flat = 0;
  for (const auto& c : Y.y0) flat += std::norm(c);
  double roots = 0;
  for (std::size_t k = 0; k < sys.positive.size(); ++k) {
    const auto i = sys.positive[k];
    if (Y.y[k].size() != static_cast<std::size_t>(sys.multiplicity[i]))
      throw std::invalid_argument("crown_metric_norm: coefficient count differs from multiplicity");
    const double a = root_value(sys.roots[i], X);
    if (std::abs(a) >= 1) throw std::domain_error("crown_metric_norm: X is not in the interior of Omega");
    const double c = std::cos(std::numbers::pi / 2 * a);
    double s = 0;
    for (const auto& z : Y.y[k]) s += std::norm(z);
    roots += c * c * s;
  }
  return flat + 2 * roots;
}

DensityValue measure_density(const RootSystem& sys, const std::vector<double>& X, const std::vector<int>& multiplicity) {
  check_dim(sys, X);
  const auto& m = mults(sys, multiplicity);
  DensityValue d;
  d.x = X;
  d.value = 1;
  for (auto i : sys.positive) {
    const double a = std::numbers::pi / 2 * root_value(sys.roots[i], X);
    const double f = std::pow(std::abs(std::sin(2 * a)), m[i]);
    d.factors.push_back(f);
    d.value *= f;
  }
  return d;
}

JacobianBlock jacobian_block(double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  JacobianBlock j;
  j.det_abs = std::abs(c * (-s) - s * c);
  j.sin2_abs = std::abs(std::sin(2 * angle));
  if (std::abs(j.det_abs - j.sin2_abs) > 1e-12) throw std::logic_error("jacobian_block: identity violated");
  return j;
}

double QSqrt3::to_double() const { return a.to_double() + b.to_double() * std::sqrt(3.0); }

QSqrt3 operator*(const QSqrt3& x, const QSqrt3& y) {
  return {x.a * y.a + Rational(3) * x.b * y.b, x.a * y.b + x.b * y.a};
}

QSqrt3 operator+(const QSqrt3& x, const QSqrt3& y) { return {x.a + y.a, x.b + y.b}; }

QSqrt3 exact_cos_squared(const Rational& alpha_of_y) {
  // cos^2(pi v / 2) = (1 + cos(pi v)) / 2 with pi v = k pi / 6.
  QSqrt3 c = cos_sixth_pi(sixths(alpha_of_y));
  return {(Rational(1) + c.a) * Rational(1, 2), c.b * Rational(1, 2)};
}

QSqrt3 exact_density(const RootSystem& sys, const RatVec& Y, const std::vector<int>& multiplicity) {
  if (Y.size() != sys.ambient_dim || !sys.in_flat(Y)) throw std::invalid_argument("exact_density: bad point");
  const auto& m = mults(sys, multiplicity);
  QSqrt3 v{1, 0};
  for (auto i : sys.positive) {
    // |sin(pi alpha(Y))| = |cos(pi alpha(Y) - pi/2)|, with pi alpha(Y) = k pi / 6.
    QSqrt3 s = cos_sixth_pi(sixths(dot(sys.roots[i], Y)) - 3);
    if (s.a.sign() < 0 || (s.a.is_zero() && s.b.sign() < 0)) s = {-s.a, -s.b};
    for (int p = 0; p < m[i]; ++p) v = v * s;
  }
  return v;
}

}  // namespace crown::geom
