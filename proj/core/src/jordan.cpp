#include "crown/jordan.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>

namespace crown::jordan {
namespace {

const double kSqrt2 = std::numbers::sqrt2;

void same_algebra(const Element& a, const Element& b) {
  if (!a.alg || a.alg != b.alg) throw std::invalid_argument("jordan: elements of different algebras");
}

double op_norm(const CMat& m) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<CMat> svd(m);
  return svd.singularValues()(0);
}

Eigen::VectorXd hermitian_eigenvalues(const CMat& h) {
  Eigen::SelfAdjointEigenSolver<CMat> es(0.5 * (h + h.adjoint()), Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

}  // namespace

std::shared_ptr<const JordanAlgebra> JordanAlgebra::make(Kind kind, int n) {
  if (n < 1 || n > 8) throw std::invalid_argument("jordan: unsupported size " + std::to_string(n));
  std::shared_ptr<JordanAlgebra> a(new JordanAlgebra());
  a->kind_ = kind;
  a->n_ = n;
  if (kind == Kind::kSpin) {
    a->dim_ = n + 1;
    a->rank_ = 2;
    const int d = a->dim_;
    // Coordinates c <-> (s, u) = c / sqrt2.
    auto prod = [&](const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
      const double s = x(0) / kSqrt2, t = y(0) / kSqrt2;
      Eigen::VectorXd u = x.tail(n) / kSqrt2, v = y.tail(n) / kSqrt2;
      Eigen::VectorXd r(d);
      r(0) = s * t + u.dot(v);
      r.tail(n) = s * v + t * u;
      return Eigen::VectorXd(kSqrt2 * r);
    };
    a->mult_.assign(static_cast<std::size_t>(d), RMat::Zero(d, d));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        Eigen::VectorXd r = prod(Eigen::VectorXd::Unit(d, i), Eigen::VectorXd::Unit(d, j));
        for (int k = 0; k < d; ++k) a->mult_[static_cast<std::size_t>(k)](i, j) = r(k);
      }
    a->e_ = CVec::Zero(d);
    a->e_(0) = kSqrt2;
    CVec c1 = CVec::Zero(d), c2 = CVec::Zero(d);
    c1(0) = c2(0) = 1 / kSqrt2;
    c1(1) = 1 / kSqrt2;
    c2(1) = -1 / kSqrt2;
    a->frame_ = {c1, c2};
    a->gram_ = RMat::Identity(d, d);
    return a;
  }

  const bool herm = kind == Kind::kHermC;
  for (int i = 0; i < n; ++i) {
    CMat b = CMat::Zero(n, n);
    b(i, i) = 1;
    a->basis_.push_back(b);
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      CMat b = CMat::Zero(n, n);
      b(i, j) = b(j, i) = 1 / kSqrt2;
      a->basis_.push_back(b);
    }
  if (herm) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        CMat b = CMat::Zero(n, n);
        b(i, j) = cplx(0, 1 / kSqrt2);
        b(j, i) = cplx(0, -1 / kSqrt2);
        a->basis_.push_back(b);
      }
  }
  const int d = static_cast<int>(a->basis_.size());
  a->dim_ = d;
  a->rank_ = n;
  a->mult_.assign(static_cast<std::size_t>(d), RMat::Zero(d, d));
  a->gram_ = RMat::Zero(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      CMat p = 0.5 * (a->basis_[i] * a->basis_[j] + a->basis_[j] * a->basis_[i]);
      a->gram_(i, j) = (a->basis_[i] * a->basis_[j]).trace().real();
      for (int k = 0; k < d; ++k) a->mult_[static_cast<std::size_t>(k)](i, j) = (a->basis_[k] * p).trace().real();
    }
  a->e_ = CVec::Zero(d);
  for (int i = 0; i < n; ++i) {
    a->e_(i) = 1;
    CVec c = CVec::Zero(d);
    c(i) = 1;
    a->frame_.push_back(c);
  }
  return a;
}

std::shared_ptr<const JordanAlgebra> JordanAlgebra::parse(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("jordan: expected kind:n, got '" + spec + "'");
  std::string k = spec.substr(0, colon);
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(spec.substr(colon + 1), &used);
    if (used != spec.size() - colon - 1) throw std::invalid_argument(spec);
  } catch (const std::logic_error&) {
    throw std::invalid_argument("jordan: bad size in '" + spec + "'");
  }
  if (k == "sym") return make(Kind::kSymR, n);
  if (k == "herm") return make(Kind::kHermC, n);
  if (k == "spin") return make(Kind::kSpin, n);
  throw std::invalid_argument("jordan: unknown algebra kind '" + k + "'");
}

std::string JordanAlgebra::name() const {
  switch (kind_) {
    case Kind::kSymR: return "sym:" + std::to_string(n_);
    case Kind::kHermC: return "herm:" + std::to_string(n_);
    case Kind::kSpin: return "spin:" + std::to_string(n_);
  }
  return "?";
}

CVec JordanAlgebra::mul(const CVec& x, const CVec& y) const {
  CVec r(dim_);
  for (int k = 0; k < dim_; ++k) r(k) = x.transpose() * mult_[static_cast<std::size_t>(k)].cast<cplx>() * y;
  return r;
}

CMat JordanAlgebra::lop(const CVec& x) const {
  CMat l(dim_, dim_);
  for (int k = 0; k < dim_; ++k) l.row(k) = x.transpose() * mult_[static_cast<std::size_t>(k)].cast<cplx>();
  return l;
}

cplx JordanAlgebra::trace(const CVec& x) const { return (e_.transpose() * x)(0); }

CMat JordanAlgebra::to_matrix(const CVec& x) const {
  if (kind_ == Kind::kSpin) throw std::logic_error("jordan: SPIN has no matrix realization here");
  CMat m = CMat::Zero(n_, n_);
  for (int k = 0; k < dim_; ++k) m += x(k) * basis_[static_cast<std::size_t>(k)];
  return m;
}

CVec JordanAlgebra::from_matrix(const CMat& m) const {
  if (kind_ == Kind::kSpin) throw std::logic_error("jordan: SPIN has no matrix realization here");
  CVec x(dim_);
  // Complex-bilinear pairing with the (Hermitian) basis recovers complex coordinates.
  for (int k = 0; k < dim_; ++k) x(k) = (basis_[static_cast<std::size_t>(k)] * m).trace();
  return x;
}

cplx JordanAlgebra::det(const CVec& x) const {
  if (kind_ == Kind::kSpin) {
    const cplx s = x(0) / kSqrt2;
    cplx uu = 0;
    for (int k = 1; k < dim_; ++k) uu += (x(k) / kSqrt2) * (x(k) / kSqrt2);
    return s * s - uu;
  }
  return to_matrix(x).determinant();
}

CVec JordanAlgebra::diagonal(const std::vector<cplx>& coeffs) const {
  if (static_cast<int>(coeffs.size()) != rank_) throw std::invalid_argument("jordan: diagonal needs rank coefficients");
  CVec x = CVec::Zero(dim_);
  for (int j = 0; j < rank_; ++j) x += coeffs[static_cast<std::size_t>(j)] * frame_[static_cast<std::size_t>(j)];
  return x;
}

Element jmul(const Element& x, const Element& y) {
  same_algebra(x, y);
  return {x.alg, x.alg->mul(x.v, y.v)};
}

CMat lop(const Element& x) { return x.alg->lop(x.v); }

CMat quad_rep(const Element& z) { return quad_rep_polar(z, z); }

CMat quad_rep_polar(const Element& z, const Element& w) {
  same_algebra(z, w);
  const auto& a = *z.alg;
  CMat lz = a.lop(z.v), lw = a.lop(w.v);
  return lz * lw + lw * lz - a.lop(a.mul(z.v, w.v));
}

CMat quad_rep_hermitian(const Element& z) { return quad_rep_polar(z, z.conj()); }

cplx det_minpoly(const Element& z) {
  const auto& a = *z.alg;
  const int l = a.rank();
  CMat powers(a.dim(), l);
  CVec p = a.identity();
  for (int k = 0; k < l; ++k) {
    powers.col(k) = p;
    p = a.mul(p, z.v);
  }
  // z^l = sum_k c_k z^k; the characteristic polynomial is t^l - sum c_k t^k.
  CVec c = powers.colPivHouseholderQr().solve(p);
  if ((powers * c - p).norm() > 1e-8 * (1 + p.norm())) throw std::domain_error("det_minpoly: z is not generic");
  const cplx constant = -c(0);
  return (l % 2 == 0) ? constant : -constant;
}

int PierceSplit::dim(int i, int j) const {
  auto it = blocks.find({std::min(i, j), std::max(i, j)});
  return it == blocks.end() ? 0 : static_cast<int>(it->second.cols());
}

PierceSplit pierce(const AlgebraPtr& alg, const std::vector<CVec>& frame) {
  const auto& a = *alg;
  const int l = static_cast<int>(frame.size()), d = a.dim();
  CVec sum = CVec::Zero(d);
  for (int i = 0; i < l; ++i) {
    sum += frame[static_cast<std::size_t>(i)];
    for (int j = 0; j < l; ++j) {
      CVec p = a.mul(frame[static_cast<std::size_t>(i)], frame[static_cast<std::size_t>(j)]);
      CVec want = i == j ? frame[static_cast<std::size_t>(i)] : CVec::Zero(d);
      if ((p - want).norm() > 1e-10) throw std::invalid_argument("pierce: frame is not a system of orthogonal idempotents");
    }
  }
  if ((sum - a.identity()).norm() > 1e-10) throw std::invalid_argument("pierce: frame does not sum to the identity");

  std::vector<RMat> half(static_cast<std::size_t>(l));
  for (int i = 0; i < l; ++i) {
    RMat L = a.lop(frame[static_cast<std::size_t>(i)]).real();
    half[static_cast<std::size_t>(i)] = 4 * L * (RMat::Identity(d, d) - L);
  }
  PierceSplit s;
  s.alg = alg;
  auto basis_of = [&](const RMat& proj) {
    Eigen::SelfAdjointEigenSolver<RMat> es(0.5 * (proj + proj.transpose()));
    std::vector<int> keep;
    for (int k = 0; k < d; ++k)
      if (es.eigenvalues()(k) > 0.5) keep.push_back(k);
    RMat b(d, static_cast<int>(keep.size()));
    for (std::size_t k = 0; k < keep.size(); ++k) b.col(static_cast<int>(k)) = es.eigenvectors().col(keep[k]);
    return b;
  };
  for (int i = 0; i < l; ++i) {
    RMat c = frame[static_cast<std::size_t>(i)].real();
    s.blocks[{i, i}] = c / c.norm();
    for (int j = i + 1; j < l; ++j) s.blocks[{i, j}] = basis_of(half[static_cast<std::size_t>(i)] * half[static_cast<std::size_t>(j)]);
  }
  int total = 0;
  for (const auto& [k, b] : s.blocks) total += static_cast<int>(b.cols());
  if (total != d) throw std::logic_error("pierce: blocks do not exhaust the algebra");
  return s;
}

PierceSplit pierce(const AlgebraPtr& alg) { return pierce(alg, alg->frame()); }

const char* to_string(Membership m) {
  switch (m) {
    case Membership::kMember: return "member";
    case Membership::kNonmember: return "nonmember";
    case Membership::kOutsideScope: return "outside_scope";
  }
  return "?";
}

namespace {

bool positive_definite(const CMat& p, double rel_tol) {
  Eigen::VectorXd ev = hermitian_eigenvalues(p);
  const double scale = std::max(std::abs(ev.minCoeff()), std::abs(ev.maxCoeff()));
  return ev.minCoeff() > rel_tol * scale;
}

}  // namespace

Membership xi_half_member(const Element& z, const MembershipOptions& opt) {
  if (!positive_definite(quad_rep_hermitian(z), opt.rel_tol)) return Membership::kNonmember;
  const CVec& e = z.alg->identity();
  for (int k = 1; k < opt.segment_steps; ++k) {
    const double s = static_cast<double>(k) / opt.segment_steps;
    Element p{z.alg, (1 - s) * e + s * z.v};
    if (!positive_definite(quad_rep_hermitian(p), opt.rel_tol)) return Membership::kOutsideScope;
  }
  return Membership::kMember;
}

DiagInverse diag_inverse_action(const PierceSplit& split, const std::vector<cplx>& zdiag, int i, int j) {
  const auto& a = *split.alg;
  if (static_cast<int>(zdiag.size()) != a.rank()) throw std::invalid_argument("diag_inverse_action: coefficient count");
  if (i > j) std::swap(i, j);
  const cplx zi = zdiag[static_cast<std::size_t>(i)], zj = zdiag[static_cast<std::size_t>(j)];
  const double q = (zi * std::conj(zj) + std::conj(zi) * zj).real();
  if (std::abs(q) < 1e-300) throw std::domain_error("diag_inverse_action: P(z, conj z) is singular");
  DiagInverse r;
  r.scalar = i == j ? 1.0 / std::norm(zi) : 2.0 / q;
  Element z{split.alg, a.diagonal(zdiag)};
  CMat P = quad_rep_hermitian(z);
  Eigen::FullPivLU<CMat> lu(P);
  if (!lu.isInvertible()) throw std::domain_error("diag_inverse_action: P(z, conj z) is singular");
  const RMat& b = split.blocks.at({i, j});
  r.dense_residual = 0;
  for (int k = 0; k < b.cols(); ++k) {
    CVec v = b.col(k).cast<cplx>();
    r.dense_residual = std::max(r.dense_residual, (lu.solve(v) - r.scalar * v).norm());
  }
  return r;
}

double phi(const Element& z) {
  CMat P = quad_rep_hermitian(z);
  Eigen::LLT<CMat> llt(0.5 * (P + P.adjoint()));
  if (llt.info() != Eigen::Success) throw std::domain_error("phi: P(z, conj z) is not positive definite");
  double logdet = 0;
  for (int k = 0; k < P.rows(); ++k) logdet += 2 * std::log(llt.matrixLLT()(k, k).real());
  return -logdet;
}

namespace {

cplx hessian_unchecked(const Element& z, const CMat& Pinv, const Element& Z1, const Element& Z2) {
  const Element zb = z.conj(), Z2b = Z2.conj();
  CMat A = Pinv * quad_rep_polar(Z1, zb) * Pinv * quad_rep_polar(z, Z2b);
  CMat B = Pinv * quad_rep_polar(Z1, Z2b);
  return A.trace() - B.trace();
}

CMat inverse_checked(const Element& z) {
  if (xi_half_member(z) != Membership::kMember) throw std::domain_error("hessian: z is not a member point");
  return quad_rep_hermitian(z).inverse();
}

}  // namespace

cplx hessian(const Element& z, const Element& Z1, const Element& Z2) {
  same_algebra(z, Z1);
  same_algebra(z, Z2);
  return hessian_unchecked(z, inverse_checked(z), Z1, Z2);
}

namespace {

using LCplx = std::complex<long double>;
using LCVec = Eigen::Matrix<LCplx, Eigen::Dynamic, 1>;
using LCMat = Eigen::Matrix<LCplx, Eigen::Dynamic, Eigen::Dynamic>;

// phi in extended precision for the difference quotients.
long double phi_extended(const JordanAlgebra& a, const LCVec& z) {
  const int d = a.dim();
  auto lop_ld = [&](const LCVec& x) {
    LCMat l = LCMat::Zero(d, d);
    for (int k = 0; k < d; ++k)
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          const double m = a.structure(k, i, j);
          if (m != 0) l(k, j) += x(i) * static_cast<long double>(m);
        }
    return l;
  };
  auto mul_ld = [&](const LCVec& x, const LCVec& y) { return LCVec(lop_ld(x) * y); };
  LCVec zb = z.conjugate();
  LCMat lz = lop_ld(z), lzb = lop_ld(zb);
  LCMat P = lz * lzb + lzb * lz - lop_ld(mul_ld(z, zb));
  Eigen::LLT<LCMat> llt(0.5L * (P + P.adjoint()));
  if (llt.info() != Eigen::Success) throw std::domain_error("phi: P(z, conj z) is not positive definite");
  long double logdet = 0;
  for (int k = 0; k < d; ++k) logdet += 2 * std::log(llt.matrixLLT()(k, k).real());
  return -logdet;
}

}  // namespace

double hessian_fd(const Element& z, const Element& Z, double step) {
  same_algebra(z, Z);
  const auto& a = *z.alg;
  const LCVec z0 = z.v.cast<LCplx>();
  const long double f0 = phi_extended(a, z0);
  auto second = [&](const LCVec& dir, long double h) {
    return (phi_extended(a, z0 + h * dir) - 2 * f0 + phi_extended(a, z0 - h * dir)) / (h * h);
  };
  const LCVec dir = Z.v.cast<LCplx>();
  const LCVec idir = LCplx(0, 1) * dir;
  auto levi = [&](long double h) { return 0.25L * (second(dir, h) + second(idir, h)); };
  const long double coarse = levi(step), fine = levi(step / 2);
  return static_cast<double>((4 * fine - coarse) / 3);
}

CMat hessian_matrix(const Element& z) {
  const auto& a = *z.alg;
  CMat Pinv = inverse_checked(z);
  const int d = a.dim();
  CMat H(d, d);
  for (int p = 0; p < d; ++p)
    for (int q = 0; q < d; ++q) {
      Element bp{z.alg, CVec::Unit(d, p)}, bq{z.alg, CVec::Unit(d, q)};
      H(p, q) = hessian_unchecked(z, Pinv, bp, bq);
    }
  return H;
}

std::vector<double> diagonal_hessian_terms(const PierceSplit& split, const std::vector<cplx>& z,
                                           const std::vector<cplx>& u) {
  const int l = split.alg->rank();
  if (static_cast<int>(z.size()) != l || static_cast<int>(u.size()) != l)
    throw std::invalid_argument("diagonal_hessian_terms: coefficient count");
  std::vector<double> terms;
  for (int i = 0; i < l; ++i)
    for (int j = i + 1; j < l; ++j) {
      const cplx zi = z[static_cast<std::size_t>(i)], zj = z[static_cast<std::size_t>(j)];
      const cplx ui = u[static_cast<std::size_t>(i)], uj = u[static_cast<std::size_t>(j)];
      const double q = (zi * std::conj(zj) + zj * std::conj(zi)).real();
      terms.push_back(split.dim(i, j) * std::norm(ui * zj - uj * zi) / (q * q));
    }
  return terms;
}

std::vector<double> off_diagonal_bound_terms(const PierceSplit& split, const std::vector<cplx>& z, int i, int j,
                                             const CVec& Z) {
  const int l = split.alg->rank();
  if (i == j) throw std::invalid_argument("off_diagonal_bound_terms: need i != j");
  if (i > j) std::swap(i, j);
  const RMat& b = split.blocks.at({i, j});
  // Rank of {Z, conj Z} inside (V_ij)_C.
  CMat pair(b.rows(), 2);
  pair.col(0) = Z;
  pair.col(1) = Z.conjugate();
  Eigen::JacobiSVD<CMat> svd(pair);
  int r = 0;
  for (int k = 0; k < 2; ++k)
    if (svd.singularValues()(k) > 1e-10 * svd.singularValues()(0)) ++r;
  const int perp = static_cast<int>(b.cols()) - r;
  auto q = [&](int a, int c) {
    const cplx za = z[static_cast<std::size_t>(a)], zc = z[static_cast<std::size_t>(c)];
    return (za * std::conj(zc) + zc * std::conj(za)).real();
  };
  std::vector<double> terms{2.0 * perp / q(i, j)};
  for (int k = 0; k < l; ++k) {
    if (k == i || k == j) continue;
    const double zk2 = std::norm(z[static_cast<std::size_t>(k)]);
    terms.push_back(zk2 * split.dim(i, k) / (q(i, k) * q(j, k)));
    terms.push_back(zk2 * split.dim(j, k) / (q(i, k) * q(j, k)));
  }
  return terms;
}

PshCertificate psh_certificate(const Element& z, TangentModel model) {
  const auto& a = *z.alg;
  CMat H = hessian_matrix(z);
  const int d = a.dim();
  // q(Z) = sum_pq Z_p H_pq conj(Z_q) = u^* H^T u with u = conj(Z).
  CMat Ht = H.transpose();
  PshCertificate c;
  if (model == TangentModel::kFull) {
    Eigen::VectorXd ev = hermitian_eigenvalues(Ht);
    c.min_eigenvalue = ev.minCoeff();
    c.max_eigenvalue = ev.maxCoeff();
    c.dimension = d;
    return c;
  }
  // Tangent vectors T_k = z u_k with u_k spanning {tr u = 0}.
  Eigen::VectorXd e = a.identity().real();
  RMat proj = RMat::Identity(d, d) - e * e.transpose() / e.squaredNorm();
  Eigen::SelfAdjointEigenSolver<RMat> es(proj);
  CMat L = a.lop(z.v);
  CMat T(d, d - 1);
  for (int k = 0; k < d - 1; ++k) T.col(k) = L * es.eigenvectors().col(k + 1).cast<cplx>();
  // Coefficients c: Z = T c, u = conj(Z) = conj(T) conj(c).
  CMat Tc = T.conjugate();
  CMat G = Tc.adjoint() * Ht * Tc;
  CMat M = Tc.adjoint() * Tc;
  Eigen::GeneralizedSelfAdjointEigenSolver<CMat> ges(0.5 * (G + G.adjoint()), 0.5 * (M + M.adjoint()),
                                                     Eigen::EigenvaluesOnly);
  c.min_eigenvalue = ges.eigenvalues().minCoeff();
  c.max_eigenvalue = ges.eigenvalues().maxCoeff();
  c.dimension = d - 1;
  return c;
}

cplx kahler_metric(const Element& z, const CVec& v, const CVec& w) {
  CMat P = quad_rep_hermitian(z);
  Eigen::FullPivLU<CMat> lu(P);
  if (!lu.isInvertible()) throw std::domain_error("kahler_metric: P(z, conj z) is singular");
  CVec x = lu.solve(v);
  return w.dot(x);
}

double cone_metric(const Element& x, const Eigen::VectorXd& v, const Eigen::VectorXd& w) {
  if (x.v.imag().norm() > 0) throw std::invalid_argument("cone_metric: x must be real");
  // x lies in the open cone iff L(x) is positive definite
  const RMat L = lop(x).real();
  if (Eigen::LLT<RMat>(0.5 * (L + L.transpose())).info() != Eigen::Success)
    throw std::domain_error("cone_metric: x is not in the open cone");
  CMat P = quad_rep(x);
  Eigen::LLT<RMat> llt(P.real());
  if (llt.info() != Eigen::Success) throw std::domain_error("cone_metric: x is not in the open cone");
  return w.dot(llt.solve(v));
}

double stein_exhaustion(const Element& z) {
  if (xi_half_member(z) != Membership::kMember) throw std::domain_error("stein_exhaustion: z is not a member point");
  return z.v.squaredNorm() + std::exp(phi(z));
}

StructureMap congruence(const AlgebraPtr& alg, const CMat& a) {
  const auto& A = *alg;
  if (A.kind() == Kind::kSpin) throw std::invalid_argument("congruence: matrix kinds only");
  if (a.rows() != A.n() || a.cols() != A.n()) throw std::invalid_argument("congruence: size mismatch");
  if (A.kind() == Kind::kSymR && a.imag().norm() > 0) throw std::invalid_argument("congruence: SYM needs a real matrix");
  if (std::abs(a.determinant()) < 1e-12) throw std::domain_error("congruence: singular matrix");
  const int d = A.dim();
  StructureMap g{alg, RMat(d, d)};
  for (int i = 0; i < d; ++i) {
    CMat img = a * A.to_matrix(CVec::Unit(d, i)) * a.adjoint();
    g.g.col(i) = A.from_matrix(img).real();
  }
  return g;
}

StructureMap lorentz(const AlgebraPtr& alg, double scale, const Eigen::VectorXd& boost,
                     const Eigen::MatrixXd& rotation_generator) {
  const auto& A = *alg;
  if (A.kind() != Kind::kSpin) throw std::invalid_argument("lorentz: SPIN only");
  const int n = A.n();
  if (boost.size() != n || rotation_generator.rows() != n || rotation_generator.cols() != n)
    throw std::invalid_argument("lorentz: size mismatch");
  if ((rotation_generator + rotation_generator.transpose()).norm() > 1e-12)
    throw std::invalid_argument("lorentz: rotation generator must be antisymmetric");
  if (scale <= 0) throw std::domain_error("lorentz: scale must be positive");
  RMat K = RMat::Zero(n + 1, n + 1);
  K.block(0, 1, 1, n) = boost.transpose();
  K.block(1, 0, n, 1) = boost;
  K.block(1, 1, n, n) = rotation_generator;
  return {alg, scale * RMat(K.exp())};
}

StructureMap scaling(const AlgebraPtr& alg, double t) {
  if (t == 0) throw std::domain_error("scaling: t must be nonzero");
  return {alg, t * RMat::Identity(alg->dim(), alg->dim())};
}

StructureMap random_structure_map(const AlgebraPtr& alg, std::mt19937_64& rng, double spread) {
  std::normal_distribution<double> N(0, 1);
  const int n = alg->n();
  switch (alg->kind()) {
    // exp keeps the conditioning bounded by the spread
    case Kind::kSymR: {
      RMat x(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) x(i, j) = spread * N(rng);
      return congruence(alg, x.exp().cast<cplx>());
    }
    case Kind::kHermC: {
      CMat x(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) x(i, j) = spread * cplx(N(rng), N(rng));
      return congruence(alg, x.exp());
    }
    case Kind::kSpin: {
      Eigen::VectorXd b(n);
      for (int i = 0; i < n; ++i) b(i) = spread * N(rng);
      RMat w(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) w(i, j) = N(rng);
      RMat rot = spread * (w - w.transpose());
      return lorentz(alg, std::exp(spread * N(rng)), b, rot);
    }
  }
  throw std::logic_error("unreachable");
}

double transform_check(const StructureMap& g, const Element& z, const Element& w) {
  same_algebra(z, w);
  CMat gc = g.g.cast<cplx>();
  CMat lhs = quad_rep_polar(g.apply(z), g.apply(w));
  CMat rhs = gc * quad_rep_polar(z, w) * gc.transpose();
  return op_norm(lhs - rhs) / (1 + op_norm(rhs));
}

OrthogonalityReport pierce_orthogonality_check(const PierceSplit& split) {
  const auto& a = *split.alg;
  const int l = a.rank();
  OrthogonalityReport rep;
  std::vector<std::pair<int, int>> idx;
  for (int i = 0; i < l; ++i)
    for (int j = i; j < l; ++j) idx.emplace_back(i, j);
  for (auto [i, j] : idx)
    for (auto [k, m] : idx) {
      if (std::make_pair(i, j) == std::make_pair(k, m)) continue;
      if (i == j && k == m) continue;
      for (auto [r, s] : idx) {
        ++rep.tuples;
        const RMat &Bij = split.blocks.at({i, j}), &Bkl = split.blocks.at({k, m}), &Brs = split.blocks.at({r, s});
        for (int p = 0; p < Bij.cols(); ++p)
          for (int q = 0; q < Bkl.cols(); ++q)
            for (int t = 0; t < Brs.cols(); ++t) {
              CVec x = Bij.col(p).cast<cplx>(), y = Bkl.col(q).cast<cplx>(), w = Brs.col(t).cast<cplx>();
              CVec first = a.mul(x, a.mul(y, w));
              CVec second = a.mul(a.mul(x, y), w);
              for (int u = 0; u < Brs.cols(); ++u) {
                CVec v = Brs.col(u).cast<cplx>();
                rep.max_abs_inner = std::max({rep.max_abs_inner, std::abs(v.dot(first)), std::abs(v.dot(second))});
              }
            }
      }
    }
  return rep;
}

Element sample_member(const AlgebraPtr& alg, std::mt19937_64& rng, const SampleOptions& opt,
                      std::vector<cplx>* diag) {
  std::uniform_real_distribution<double> U(-1, 1);
  for (int attempt = 0; attempt < opt.max_tries; ++attempt) {
    std::vector<cplx> zd;
    for (int j = 0; j < alg->rank(); ++j) zd.push_back(std::exp(cplx(opt.re_spread * U(rng), opt.im_spread * U(rng))));
    Element z{alg, alg->diagonal(zd)};
    if (opt.group_spread > 0) z = random_structure_map(alg, rng, opt.group_spread).apply(z);
    if (xi_half_member(z) == Membership::kMember) {
      if (diag) *diag = zd;
      return z;
    }
  }
  throw std::runtime_error("sample_member: no member point found");
}

}  // namespace crown::jordan
