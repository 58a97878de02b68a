#include <cmath>
#include <random>

#include "crown/jordan.hpp"
#include "doctest.h"

using namespace crown::jordan;

namespace {

CVec random_cvec(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> N;
  CVec v(d);
  for (int i = 0; i < d; ++i) v(i) = cplx(N(rng), N(rng));
  return v;
}

// P(x, y) from the product alone: column k is x(y b_k) + y(x b_k) - (xy) b_k.
CMat oracle_polar(const JordanAlgebra& a, const CVec& x, const CVec& y) {
  const int d = a.dim();
  CMat P(d, d);
  const CVec xy = a.mul(x, y);
  for (int k = 0; k < d; ++k) {
    CVec b = CVec::Zero(d);
    b(k) = 1;
    P.col(k) = a.mul(x, a.mul(y, b)) + a.mul(y, a.mul(x, b)) - a.mul(xy, b);
  }
  return P;
}

double oracle_phi(const JordanAlgebra& a, const CVec& z) {
  const CMat P = oracle_polar(a, z, z.conjugate());
  return -std::log(P.determinant().real());
}

// Levi form 1/4 (f_ss + f_tt) on the complex line z + (s + i t) Z, Richardson extrapolated.
double oracle_levi(const JordanAlgebra& a, const CVec& z, const CVec& Z) {
  const double f0 = oracle_phi(a, z);
  auto second = [&](double h) {
    double acc = 0;
    for (cplx dir : {cplx(1, 0), cplx(0, 1)})
      acc += (oracle_phi(a, z + h * dir * Z) + oracle_phi(a, z - h * dir * Z) - 2 * f0) / (h * h);
    return acc / 4;
  };
  const double h = 2e-3;
  return (4 * second(h / 2) - second(h)) / 3;
}

const char* kAlgebras[] = {"sym:1", "sym:2", "sym:3", "herm:2", "herm:3", "spin:3", "spin:4"};

}  // namespace

TEST_CASE("dimensions and ranks") {
  for (int n = 1; n <= 4; ++n) {
    auto s = JordanAlgebra::make(Kind::kSymR, n);
    CHECK(s->dim() == n * (n + 1) / 2);
    CHECK(s->rank() == n);
    auto h = JordanAlgebra::make(Kind::kHermC, n);
    CHECK(h->dim() == n * n);
    CHECK(h->rank() == n);
  }
  for (int n = 2; n <= 6; ++n) {
    auto p = JordanAlgebra::make(Kind::kSpin, n);
    CHECK(p->dim() == n + 1);
    CHECK(p->rank() == 2);
  }
  CHECK(JordanAlgebra::parse("herm:3")->name() == JordanAlgebra::make(Kind::kHermC, 3)->name());
}

TEST_CASE("parse rejects malformed algebras") {
  for (const char* bad : {"", "sym", "sym:0", "sym:-2", "foo:3", "spin:x", "herm:2:1"})
    CHECK_THROWS_AS(JordanAlgebra::parse(bad), std::invalid_argument);
}

TEST_CASE("Jordan identity, commutativity and unit") {
  std::mt19937_64 rng(11);
  for (const char* label : kAlgebras) {
    CAPTURE(label);
    auto a = JordanAlgebra::parse(label);
    for (int it = 0; it < 20; ++it) {
      const CVec x = random_cvec(a->dim(), rng), y = random_cvec(a->dim(), rng);
      const CVec x2 = a->mul(x, x);
      const CVec lhs = a->mul(a->mul(x, y), x2), rhs = a->mul(x, a->mul(y, x2));
      CHECK((lhs - rhs).norm() <= 1e-10 * (1 + lhs.norm()));
      CHECK((a->mul(x, y) - a->mul(y, x)).norm() <= 1e-12 * (1 + x.norm() * y.norm()));
      CHECK((a->mul(a->identity(), x) - x).norm() <= 1e-12 * (1 + x.norm()));
    }
    CHECK(std::abs(a->det(a->identity()) - 1.0) <= 1e-12);
    CHECK(std::abs(a->trace(a->identity()) - double(a->rank())) <= 1e-12);
  }
}

TEST_CASE("closed determinant equals the minimal polynomial determinant") {
  std::mt19937_64 rng(5);
  for (const char* label : kAlgebras) {
    CAPTURE(label);
    auto a = JordanAlgebra::parse(label);
    for (int it = 0; it < 20; ++it) {
      Element z{a, random_cvec(a->dim(), rng)};
      const cplx d1 = a->det(z.v), d2 = det_minpoly(z);
      CHECK(std::abs(d1 - d2) <= 1e-9 * (1 + std::abs(d1)));
    }
  }
}

TEST_CASE("quadratic representation against the product oracle") {
  std::mt19937_64 rng(17);
  for (const char* label : kAlgebras) {
    CAPTURE(label);
    auto a = JordanAlgebra::parse(label);
    for (int it = 0; it < 10; ++it) {
      const CVec x = random_cvec(a->dim(), rng), y = random_cvec(a->dim(), rng);
      Element X{a, x}, Y{a, y};
      const CMat P = quad_rep(X);
      CHECK((P - oracle_polar(*a, x, x)).norm() <= 1e-10 * (1 + P.norm()));
      // P(x) y = 2 x(xy) - x^2 y
      const CVec want = 2.0 * a->mul(x, a->mul(x, y)) - a->mul(a->mul(x, x), y);
      CHECK((P * y - want).norm() <= 1e-10 * (1 + want.norm()));
      CHECK((quad_rep_polar(X, Y) - oracle_polar(*a, x, y)).norm() <= 1e-10 * (1 + P.norm()));
      if (a->kind() != Kind::kSpin) {
        const CMat xm = a->to_matrix(x), ym = a->to_matrix(y);
        CHECK((a->to_matrix(P * y) - xm * ym * xm).norm() <= 1e-10 * (1 + want.norm()));
        CHECK((a->from_matrix(xm) - x).norm() <= 1e-12 * (1 + x.norm()));
      }
    }
  }
}

TEST_CASE("P(z, conj z) splits over real and imaginary parts") {
  std::mt19937_64 rng(23);
  for (const char* label : kAlgebras) {
    CAPTURE(label);
    auto a = JordanAlgebra::parse(label);
    for (int it = 0; it < 10; ++it) {
      const CVec z = random_cvec(a->dim(), rng);
      Element Z{a, z}, X{a, z.real().cast<cplx>()}, Y{a, z.imag().cast<cplx>()};
      const CMat lhs = quad_rep_hermitian(Z), rhs = quad_rep(X) + quad_rep(Y);
      CHECK((lhs - rhs).norm() <= 1e-10 * (1 + lhs.norm()));
      CHECK((lhs - lhs.adjoint()).norm() <= 1e-10 * (1 + lhs.norm()));
    }
  }
}

TEST_CASE("transformation law under structure maps") {
  std::mt19937_64 rng(29);
  for (const char* label : kAlgebras) {
    CAPTURE(label);
    auto a = JordanAlgebra::parse(label);
    for (int it = 0; it < 10; ++it) {
      const auto g = random_structure_map(a, rng, 0.3);
      Element z{a, random_cvec(a->dim(), rng)}, w{a, random_cvec(a->dim(), rng)};
      CHECK(transform_check(g, z, w) <= 1e-9);
    }
  }
}

TEST_CASE("Pierce decomposition of the standard frame") {
  for (const char* label : kAlgebras) {
    CAPTURE(label);
    auto a = JordanAlgebra::parse(label);
    const auto split = pierce(a);
    const int r = a->rank();
    const int off = a->kind() == Kind::kSymR ? 1 : a->kind() == Kind::kHermC ? 2 : a->n() - 1;
    int total = 0;
    for (int i = 0; i < r; ++i)
      for (int j = i; j < r; ++j) {
        const int want = i == j ? 1 : off;
        CHECK(split.dim(i, j) == want);
        total += split.dim(i, j);
      }
    CHECK(total == a->dim());
    CHECK(pierce_orthogonality_check(split).max_abs_inner <= 1e-10);
  }
}

TEST_CASE("pierce rejects a non-frame") {
  auto a = JordanAlgebra::parse("sym:2");
  std::vector<CVec> bad = a->frame();
  bad[0] = 2.0 * bad[0];
  CHECK_THROWS(pierce(a, bad));
}

TEST_CASE("diagonal inverse acts by scalars") {
  auto a = JordanAlgebra::parse("herm:3");
  const auto split = pierce(a);
  const std::vector<cplx> z = {std::polar(1.3, 0.2), std::polar(0.7, -0.4), std::polar(2.0, 0.5)};
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      const auto d = diag_inverse_action(split, z, i, j);
      const double want = 1 / (z[i] * std::conj(z[j])).real();
      CAPTURE(i);
      CAPTURE(j);
      CHECK(d.dense_residual <= 1e-10);
      CHECK(std::abs(d.scalar - want) <= 1e-10 * want);
    }
}

TEST_CASE("closed Hessian matches the independent finite-difference Levi form") {
  std::mt19937_64 rng(31);
  for (const char* label : {"sym:2", "sym:3", "spin:4", "herm:2"}) {
    CAPTURE(label);
    auto a = JordanAlgebra::parse(label);
    for (int it = 0; it < 8; ++it) {
      const Element z = sample_member(a, rng);
      CVec Z = random_cvec(a->dim(), rng);
      Z /= Z.norm();
      const double exact = hessian(z, {a, Z}, {a, Z}).real();
      const double fd = oracle_levi(*a, z.v, Z);
      CHECK(std::abs(exact - fd) <= 1e-6 * std::max(std::abs(exact), 1e-3));
      CHECK(std::abs(phi(z) - oracle_phi(*a, z.v)) <= 1e-10 * (1 + std::abs(phi(z))));
    }
  }
}

TEST_CASE("rank one Hessian vanishes") {
  auto a = JordanAlgebra::parse("sym:1");
  std::mt19937_64 rng(2);
  for (int it = 0; it < 20; ++it) {
    const Element z = sample_member(a, rng);
    CHECK(std::abs(hessian(z, {a, CVec::Ones(1)}, {a, CVec::Ones(1)})) <= 1e-12);
  }
}

TEST_CASE("Hessian matrix is Hermitian and the certificates are consistent") {
  std::mt19937_64 rng(37);
  for (const char* label : {"sym:2", "herm:2", "spin:3"}) {
    CAPTURE(label);
    auto a = JordanAlgebra::parse(label);
    for (int it = 0; it < 5; ++it) {
      const Element z = sample_member(a, rng);
      const CMat H = hessian_matrix(z);
      CHECK((H - H.adjoint()).norm() <= 1e-10 * (1 + H.norm()));
      const auto full = psh_certificate(z, TangentModel::kFull);
      const auto tz = psh_certificate(z, TangentModel::kTraceZero);
      CHECK(full.min_eigenvalue >= -1e-8);
      CHECK(tz.min_eigenvalue > 0);
      CHECK(tz.dimension == full.dimension - 1);
      CHECK(full.max_eigenvalue >= tz.max_eigenvalue - 1e-10);
    }
  }
}

TEST_CASE("Hessian decompositions are nonnegative") {
  std::mt19937_64 rng(41);
  auto a = JordanAlgebra::parse("sym:3");
  const auto split = pierce(a);
  for (int it = 0; it < 10; ++it) {
    std::vector<cplx> zd, u;
    const Element z = sample_member(a, rng, {.group_spread = 0}, &zd);
    for (int k = 0; k < 3; ++k) u.push_back(random_cvec(1, rng)(0));
    for (double t : diagonal_hessian_terms(split, zd, u)) CHECK(t >= 0);
    CVec Z = split.blocks.at({0, 1}).col(0).cast<cplx>() * cplx(1, 0) * std::sqrt(2.0);
    for (double t : off_diagonal_bound_terms(split, zd, 0, 1, Z)) CHECK(t >= -1e-14);
    (void)z;
  }
}

TEST_CASE("membership of diagonal points") {
  auto a = JordanAlgebra::parse("sym:2");
  CHECK(xi_half_member({a, a->diagonal({1.0, std::polar(1.0, 1.2)})}) == Membership::kMember);
  CHECK(xi_half_member({a, a->diagonal({1.0, std::polar(1.0, 1.7)})}) == Membership::kNonmember);
  CHECK(xi_half_member({a, a->identity()}) == Membership::kMember);
  CHECK_THROWS_AS(phi({a, a->diagonal({1.0, std::polar(1.0, 1.7)})}), std::domain_error);
  CHECK_THROWS_AS(stein_exhaustion({a, a->diagonal({1.0, std::polar(1.0, 1.7)})}), std::domain_error);
}

TEST_CASE("sampling is deterministic and lands in the domain") {
  for (const char* label : kAlgebras) {
    CAPTURE(label);
    auto a = JordanAlgebra::parse(label);
    std::mt19937_64 r1(99), r2(99);
    for (int it = 0; it < 5; ++it) {
      const Element z1 = sample_member(a, r1), z2 = sample_member(a, r2);
      CHECK((z1.v - z2.v).norm() == 0);
      CHECK(xi_half_member(z1) == Membership::kMember);
      CHECK(stein_exhaustion(z1) > 0);
    }
  }
}

TEST_CASE("metrics at the identity") {
  std::mt19937_64 rng(43);
  for (const char* label : kAlgebras) {
    CAPTURE(label);
    auto a = JordanAlgebra::parse(label);
    const Element e{a, a->identity()};
    std::normal_distribution<double> N;
    Eigen::VectorXd v(a->dim()), w(a->dim());
    for (int i = 0; i < a->dim(); ++i) v(i) = N(rng), w(i) = N(rng);
    CHECK(cone_metric(e, v, w) == doctest::Approx(v.dot(w)).epsilon(1e-12));
    const cplx k = kahler_metric(e, v.cast<cplx>(), w.cast<cplx>());
    CHECK(std::abs(k - v.dot(w)) <= 1e-12 * (1 + std::abs(k)));
    CHECK_THROWS_AS(cone_metric({a, -a->identity()}, v, w), std::domain_error);
    CHECK_THROWS_AS(cone_metric({a, cplx(0, 1) * a->identity()}, v, w), std::invalid_argument);
  }
}
