#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace crown::sl2 {

using cplx = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;

/// Conventions: H = diag(1, -1) with alpha(H) = 2, so Omega = {theta H : |theta| < pi/4}.
/// Spectral parameters are identified with C via lambda = lambda_c * alpha; rho = 1/2.
/// The invariant norm comes from the Killing form: |lambda|^2 + |rho|^2 =
/// (nu^2 + 1/4) / 2 for lambda_c = i nu.
inline constexpr double kRho = 0.5;
inline double casimir(double nu) { return 0.5 * nu * nu + 0.125; }

/// SL(2, C) element, |det - 1| <= 1e-12 checked on construction.
struct SL2C {
  Mat2 m;
  static SL2C make(const Mat2& m, double tol = 1e-12);
  static SL2C real(double a, double b, double c, double d);
  SL2C operator*(const SL2C& o) const { return SL2C{m * o.m}; }
  SL2C inverse() const;
};

/// exp(z H) = diag(e^z, e^-z).
SL2C exp_h(cplx z);
/// Rotation [[cos p, -sin p], [sin p, cos p]] (complex angle allowed).
SL2C rotation(cplx phi);
/// Upper unipotent [[1, x], [0, 1]].
SL2C unipotent(cplx x);

struct IwasawaTriple {
  Mat2 n, a, k;
  cplx log_a;  ///< a = exp(log_a H)
  double residual;  ///< max |nak - x|
};

/// Raised when the holomorphic Iwasawa projection would leave T_Omega.
struct BranchError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Real NAK factors from the bottom row (c, d): a = diag(q^-1/2, q^1/2), q = c^2 + d^2.
IwasawaTriple iwasawa_real(const SL2C& g);
/// Same formula continued along the segment from Re x; throws BranchError if
/// arg q reaches +-pi/2 on the way.
IwasawaTriple iwasawa_holo(const SL2C& x, int steps = 64);
/// log of the diagonal factor: a(x) = exp(z H) with |Im z| < pi/4.
cplx iwasawa_holo_a(const SL2C& x, int steps = 64);

/// phi_lambda(x) = int_K a(kx)^(rho - lambda) dk by the trapezoid rule on SO(2).
cplx spherical(cplx lambda_c, const SL2C& x, int nodes = 512);

struct RadialRule {
  double step = 0.1;     ///< largest step in y = log tan(theta)
  double margin = 40.0;  ///< tail cut in units of y
};

/// phi_lambda(exp(w H)) for complex w with |Im w| < pi/4 by the tangent
/// substitution on K; accurate to double precision for moderate |lambda|.
/// The step shrinks to 0.3 (pi/4 - |Im w|) near the edge of the strip.
cplx spherical_radial(cplx lambda_c, cplx w, const RadialRule& rule = {});

struct SProfileOptions {
  int initial_nodes = 256;
  int max_nodes = 1 << 22;
  double rel_tol = 1e-12;
};

/// s(theta) = |pi(exp(i theta H)) v_K|^2 = int_K |a(k exp(i theta H))^(rho - lambda)|^2 dk
/// for lambda = i nu, |theta| < pi/4, with adaptive node doubling.
double s_pi(double nu, double theta, const SProfileOptions& opt = {});
/// Throws std::domain_error if a grid point is not strictly inside |theta| < pi/4.
std::vector<double> s_pi_profile(double nu, const std::vector<double>& theta, const SProfileOptions& opt = {});

struct BlowupResult {
  std::vector<double> eps;       ///< surviving points
  std::vector<double> s;
  std::vector<std::string> failures;
  double slope = 0, intercept = 0, r2 = 0;
};

/// Least-squares fit of s(exp(i (1 - eps) (pi/4) H)) against |log eps|.
BlowupResult blowup_probe(double nu, const std::vector<double>& eps, const SProfileOptions& opt = {});

}  // namespace crown::sl2
