#pragma once

#include <complex>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace crown::jordan {

using cplx = std::complex<double>;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;
using RMat = Eigen::MatrixXd;

enum class Kind { kSymR, kHermC, kSpin };

/// Euclidean Jordan algebra with a basis orthonormal for (x|y) = tr(xy).
///   SYM_R(n):  real symmetric n x n matrices, rank n
///   HERM_C(n): complex Hermitian n x n matrices (realified), rank n
///   SPIN(n):   R x R^n with (s,u)(t,v) = (st + <u,v>, sv + tu), rank 2
class JordanAlgebra {
 public:
  static std::shared_ptr<const JordanAlgebra> make(Kind kind, int n);
  /// Parses "sym:3", "herm:2", "spin:5".
  static std::shared_ptr<const JordanAlgebra> parse(const std::string& spec);

  Kind kind() const { return kind_; }
  int n() const { return n_; }
  int dim() const { return dim_; }
  int rank() const { return rank_; }
  std::string name() const;

  const CVec& identity() const { return e_; }
  const std::vector<CVec>& frame() const { return frame_; }
  const RMat& gram() const { return gram_; }

  /// Coefficient of b_k in b_i b_j.
  double structure(int k, int i, int j) const { return mult_[static_cast<std::size_t>(k)](i, j); }

  CVec mul(const CVec& x, const CVec& y) const;
  CMat lop(const CVec& x) const;
  /// Bilinear trace tr(x) = (x|e) on V_C.
  cplx trace(const CVec& x) const;
  /// Jordan determinant on V_C (closed form per kind).
  cplx det(const CVec& x) const;
  /// Matrix realization for the matrix kinds (n x n); throws for SPIN.
  CMat to_matrix(const CVec& x) const;
  CVec from_matrix(const CMat& m) const;
  /// x = sum_j coeffs[j] c_j.
  CVec diagonal(const std::vector<cplx>& coeffs) const;

 private:
  JordanAlgebra() = default;
  Kind kind_ = Kind::kSymR;
  int n_ = 0, dim_ = 0, rank_ = 0;
  std::vector<CMat> basis_;  // matrix kinds only
  std::vector<RMat> mult_;
  CVec e_;
  std::vector<CVec> frame_;
  RMat gram_;
};

using AlgebraPtr = std::shared_ptr<const JordanAlgebra>;

/// Element of V_C: complex coordinates against the real orthonormal basis.
struct Element {
  AlgebraPtr alg;
  CVec v;
  Element conj() const { return {alg, v.conjugate()}; }
};

Element jmul(const Element& x, const Element& y);
CMat lop(const Element& x);
CMat quad_rep(const Element& z);
CMat quad_rep_polar(const Element& z, const Element& w);
/// P(z, conj z).
CMat quad_rep_hermitian(const Element& z);

/// Determinant via the generic minimal polynomial: z^l is expanded in
/// e, z, ..., z^{l-1}; det is the constant coefficient up to sign.
cplx det_minpoly(const Element& z);

struct PierceSplit {
  AlgebraPtr alg;
  /// (i, j) with i <= j (0-based) -> orthonormal real basis of V_ij as columns.
  std::map<std::pair<int, int>, RMat> blocks;
  int dim(int i, int j) const;
};

/// Joint eigenspace decomposition of the frame.  Throws if the frame is not
/// a complete system of orthogonal idempotents.
PierceSplit pierce(const AlgebraPtr& alg, const std::vector<CVec>& frame);
PierceSplit pierce(const AlgebraPtr& alg);

enum class Membership { kMember, kNonmember, kOutsideScope };
const char* to_string(Membership m);

struct MembershipOptions {
  int segment_steps = 256;
  double rel_tol = 1e-10;
};

Membership xi_half_member(const Element& z, const MembershipOptions& opt = {});

struct DiagInverse {
  cplx scalar;
  double dense_residual;  ///< max |P^{-1}v - scalar v| over a basis of V_ij
};

/// Scalar by which P(z, conj z)^{-1} acts on (V_ij)_C for diagonal z.
DiagInverse diag_inverse_action(const PierceSplit& split, const std::vector<cplx>& zdiag, int i, int j);

/// phi(z) = -log det P(z, conj z).  Throws unless P(z, conj z) is positive definite.
double phi(const Element& z);
/// d_{Z1} dbar_{Z2} phi at z by the closed trace formula.
cplx hessian(const Element& z, const Element& Z1, const Element& Z2);
/// Same quantity from central second differences of phi with Richardson extrapolation.
double hessian_fd(const Element& z, const Element& Z, double step = 1e-4);
/// Hermitian matrix H_ab = hessian(z, b_a, b_b) over the real basis.
CMat hessian_matrix(const Element& z);

/// Terms of dim V_ij |u_i z_j - u_j z_i|^2 / (z_i conj z_j + z_j conj z_i)^2 for i < j.
std::vector<double> diagonal_hessian_terms(const PierceSplit& split, const std::vector<cplx>& z,
                                           const std::vector<cplx>& u);

/// Lower bound for hessian(z, Z, Z) (Z in (V_ij)_C normalized to |Z|^2 = 2)
/// derived from the trace decomposition with Cauchy-Schwarz:
/// 2 dim(Z-perp and conj(Z)-perp in V_ij) / (z_i conj z_j + ..) + sum over the other indices.
std::vector<double> off_diagonal_bound_terms(const PierceSplit& split, const std::vector<cplx>& z, int i, int j,
                                             const CVec& Z);

enum class TangentModel { kFull, kTraceZero };

struct PshCertificate {
  double min_eigenvalue = 0;
  double max_eigenvalue = 0;
  int dimension = 0;
};

/// Extreme eigenvalues of the Levi form of phi at z (relative to the trace
/// inner product on the chosen tangent space).  Throws unless z is a member.
PshCertificate psh_certificate(const Element& z, TangentModel model);

cplx kahler_metric(const Element& z, const CVec& v, const CVec& w);
double cone_metric(const Element& x, const Eigen::VectorXd& v, const Eigen::VectorXd& w);
double stein_exhaustion(const Element& z);

/// Linear map of V (real d x d in the orthonormal basis).
struct StructureMap {
  AlgebraPtr alg;
  RMat g;
  Element apply(const Element& z) const { return {z.alg, g.cast<cplx>() * z.v}; }
};

StructureMap congruence(const AlgebraPtr& alg, const CMat& a);  ///< x -> a x a^*  (matrix kinds)
StructureMap lorentz(const AlgebraPtr& alg, double scale, const Eigen::VectorXd& boost,
                     const Eigen::MatrixXd& rotation_generator);  ///< SPIN: scale * exp(boost + rotation)
StructureMap scaling(const AlgebraPtr& alg, double t);
/// exp of a random structure-algebra element of size `spread`.
StructureMap random_structure_map(const AlgebraPtr& alg, std::mt19937_64& rng, double spread);

/// Operator-norm residual of P(gz, gw) - g P(z, w) g^t.
double transform_check(const StructureMap& g, const Element& z, const Element& w);

struct OrthogonalityReport {
  std::size_t tuples = 0;
  double max_abs_inner = 0;
};

/// Checks V_ij (V_kl V_rs) and (V_ij V_kl) V_rs are orthogonal to V_rs on all
/// admissible index tuples.
OrthogonalityReport pierce_orthogonality_check(const PierceSplit& split);

struct SampleOptions {
  double re_spread = 0.5;
  double im_spread = 0.6;  ///< |Im w_j| bound for z_j = exp(w_j)
  double group_spread = 0.25;
  int max_tries = 64;
};

/// Member point g(sum e^{w_j} c_j) with the diagonal part stored in `diag`.
Element sample_member(const AlgebraPtr& alg, std::mt19937_64& rng, const SampleOptions& opt = {},
                      std::vector<cplx>* diag = nullptr);

}  // namespace crown::jordan
