#pragma once

#include <complex>
#include <vector>

#include "crown/rootsys.hpp"

namespace crown::geom {

using rootsys::RootSystem;
using cplx = std::complex<double>;

/// Tangent vector at a base point of exp(i Omega): Y0 in the complexified
/// Cartan subspace plus, for each positive root (in sys.positive order),
/// m_alpha coefficients against unit root vectors.
struct RootSpaceVector {
  std::vector<cplx> y0;
  std::vector<std::vector<cplx>> y;
};

/// Zero vector with the right shape for sys.
RootSpaceVector zero_vector(const RootSystem& sys);

/// Crown metric at X (units of pi/2): |Y0|^2 + 2 sum cos^2(alpha(X)) |y_alpha|^2.
/// Throws std::domain_error unless max |alpha(X)| < 1.
double crown_metric_norm(const RootSystem& sys, const std::vector<double>& X, const RootSpaceVector& Y);

struct DensityValue {
  std::vector<double> x;
  double value = 0;
  std::vector<double> factors;  ///< |sin 2 alpha(X)|^{m_alpha}, sys.positive order
};

/// Measure density prod |sin 2 alpha(X)|^{m_alpha} (no global constant).
/// `multiplicity` is indexed like sys.roots; empty means sys.multiplicity.
DensityValue measure_density(const RootSystem& sys, const std::vector<double>& X,
                             const std::vector<int>& multiplicity = {});

struct JacobianBlock {
  double det_abs = 0;
  double sin2_abs = 0;
};

/// |det [[cos a, sin a], [cos a, -sin a]]| for angle a (radians).
/// Throws std::logic_error if it differs from |sin 2a| by more than 1e-12.
JacobianBlock jacobian_block(double angle);

/// Element a + b sqrt(3) of Q(sqrt 3).
struct QSqrt3 {
  Rational a, b;
  double to_double() const;
  friend QSqrt3 operator*(const QSqrt3& x, const QSqrt3& y);
  friend QSqrt3 operator+(const QSqrt3& x, const QSqrt3& y);
  friend bool operator==(const QSqrt3& x, const QSqrt3& y) { return x.a == y.a && x.b == y.b; }
};

/// Exact density for Y with every alpha(Y) in (1/6)Z.  Throws
/// std::domain_error otherwise.
QSqrt3 exact_density(const RootSystem& sys, const RatVec& Y, const std::vector<int>& multiplicity = {});
/// Exact cos^2(alpha(X)) for alpha(Y) in (1/6)Z.
QSqrt3 exact_cos_squared(const Rational& alpha_of_y);

}  // namespace crown::geom
