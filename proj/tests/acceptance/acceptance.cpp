// Acceptance criteria runner.  `crown_acceptance` runs all criteria,
// `crown_acceptance K` runs criterion K.  One PASS/FAIL line per criterion;
// exit status 1 if any selected criterion fails.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "crown/crownverify.hpp"
#include "crown/geom.hpp"
#include "crown/hermitian.hpp"
#include "crown/rootsys.hpp"
#include "crown_cli/suites.hpp"

using namespace crown;
using crown::cli::Report;
using crown::cli::Status;

namespace {

// Pinned tolerances and budgets.
constexpr double kRuntime1 = 60.0;
constexpr double kJacobianTol = 1e-12;
constexpr double kDensityInvarianceTol = 1e-12;
constexpr double kHessianFdTol = 1e-6;
constexpr double kRuntime6 = 120.0;
constexpr double kPshFullTol = -1e-8;
constexpr double kVRealTol = 1e-12;
constexpr double kIdentityTol = 1e-10;
constexpr double kAppendixTol = 1e-10;
constexpr double kMobiusTol = 1e-10;
constexpr double kRoundTripTol = 1e-12;
constexpr double kPhiETol = 1e-10;
constexpr double kWeylTol = 1e-8;
constexpr double kConvexTol = -1e-6;
constexpr double kR2Min = 0.98;
constexpr double kFourierTol = 1e-3;
constexpr double kSemigroupTol = 1e-3;
constexpr double kRuntime10 = 300.0;

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back(what);
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

const cli::Item* find(const Report& r, const std::string& name) {
  for (const auto& it : r.items)
    if (it.name == name) return &it;
  return nullptr;
}

// residual of a named item, NaN when missing
double residual(const Report& r, const std::string& name, Outcome& o) {
  const auto* it = find(r, name);
  if (!it) {
    o.require(false, r.suite + ": missing item '" + name + "'");
    return std::nan("");
  }
  return it->residual;
}

std::string num(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

std::vector<rootsys::RootSystem> criterion1_systems() {
  std::vector<rootsys::RootSystem> v;
  for (int n = 2; n <= 4; ++n) v.push_back(rootsys::build("A", n));
  for (int n = 2; n <= 4; ++n) v.push_back(rootsys::build("B", n));
  for (int n = 2; n <= 4; ++n) v.push_back(rootsys::build("C", n));
  for (int n = 3; n <= 4; ++n) v.push_back(rootsys::build("D", n));
  for (int n = 1; n <= 3; ++n) v.push_back(rootsys::build("BC", n));
  for (const char* s : {"E6", "E7", "E8", "F4", "G2"}) v.push_back(rootsys::build_from_name(s));
  return v;
}

const rootsys::CorootConvention kConventions[] = {rootsys::CorootConvention::kCanonical,
                                                  rootsys::CorootConvention::kDual};

// beta is a valid witness at X: beta(X) = 1 and H_beta / 2 on the boundary under some convention.
bool valid_witness(const rootsys::RootSystem& sys, const RatVec& X, const RatVec& beta) {
  if (dot(beta, X) != Rational(1)) return false;
  const auto idx = sys.index_of(beta);
  if (!idx) return false;
  for (auto conv : kConventions) {
    const RatVec h = Rational(1, 2) * rootsys::coroot(sys, *idx, conv);
    if (rootsys::classify_point(sys, h).region == rootsys::Region::kBoundary) return true;
  }
  return false;
}

// Face of the simple root alpha_i (1-based) is the single point e_k, witnessed by -alpha_j.
void single_point_face(const rootsys::RootSystem& sys, int i, std::size_t k, int j, Outcome& o) {
  const auto face = rootsys::omega_face(sys, sys.simple[static_cast<std::size_t>(i - 1)]);
  RatVec e(sys.ambient_dim, sys.constraint);
  e.c[k] = Rational(1);
  const std::string tag = sys.name() + " a" + std::to_string(i);
  o.require(face.vertices.size() == 1 && face.vertices[0] == e, tag + " face is not {e" + std::to_string(k + 1) + "}");
  const RatVec w = -sys.roots[sys.simple[static_cast<std::size_t>(j - 1)]];
  o.require(valid_witness(sys, e, w), tag + " witness -a" + std::to_string(j) + " rejected");
}

Outcome criterion1() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  for (const auto& sys : criterion1_systems()) {
    bool any = false;
    for (auto conv : kConventions) any = any || crownverify::certify_boundary_witnesses(sys, conv).passed();
    o.require(any, sys.name() + " has a face without witness under both conventions");
  }
  for (int n = 2; n <= 4; ++n) single_point_face(rootsys::build("B", n), n, static_cast<std::size_t>(n - 1), n - 1, o);
  single_point_face(rootsys::build_from_name("F4"), 2, 3, 3, o);
  const auto g2 = rootsys::build_from_name("G2");
  o.require(rootsys::omega_face(g2, g2.simple[0]).empty(), "G2 a1 face is not empty");
  const double dt = seconds_since(t0);
  o.require(dt <= kRuntime1, "runtime " + num(dt) + " s");
  o.notes.insert(o.notes.begin(), "19 systems, " + num(dt) + " s");
  return o;
}

Outcome criterion2() {
  Outcome o;
  const auto canon = rootsys::CorootConvention::kCanonical;
  const auto e8 = crownverify::certify_half_coroots(rootsys::build_from_name("E8"), canon);
  o.require(e8.roots_total == 240 && e8.roots_on_boundary == 240,
            "E8 " + std::to_string(e8.roots_on_boundary) + " of " + std::to_string(e8.roots_total));
  std::vector<rootsys::RootSystem> acd;
  for (int n = 2; n <= 4; ++n) acd.push_back(rootsys::build("A", n));
  for (int n = 2; n <= 4; ++n) acd.push_back(rootsys::build("C", n));
  for (int n = 3; n <= 4; ++n) acd.push_back(rootsys::build("D", n));
  for (const auto& sys : acd) {
    const auto c = crownverify::certify_half_coroots(sys, canon);
    o.require(c.roots_on_boundary == c.roots_total, sys.name() + " not all on boundary");
  }
  for (const auto& sys : {rootsys::build("B", 3), rootsys::build("B", 4), rootsys::build_from_name("F4")}) {
    const auto a = crownverify::certify_half_coroots(sys, canon);
    const auto b = crownverify::certify_half_coroots(sys, canon);
    o.require(!a.agrees(), sys.name() + " canonical report not flagged");
    o.require(a.to_json() == b.to_json(), sys.name() + " report not deterministic");
    const auto r1 = cli::verify_roots(sys.name(), 0, "canonical").report.to_json(false);
    const auto r2 = cli::verify_roots(sys.name(), 0, "canonical").report.to_json(false);
    o.require(r1 == r2 && r1.find("\"flagged\"") != std::string::npos, sys.name() + " CLI report");
  }
  return o;
}

Outcome criterion3() {
  using crownverify::Relation;
  Outcome o;
  auto expect = [&](const rootsys::RootSystem& a, const rootsys::RootSystem& b, Relation want) {
    const auto r = crownverify::compare_crown_polytopes(a, b).relation;
    o.require(r == want, a.name() + " vs " + b.name() + ": " + crownverify::to_string(r));
  };
  for (int n = 1; n <= 3; ++n) expect(rootsys::build("C", n), rootsys::build("BC", n), Relation::kEqual);
  for (int n = 3; n <= 4; ++n) expect(rootsys::build("B", n), rootsys::build("D", n), Relation::kEqual);
  for (int n = 2; n <= 3; ++n) expect(rootsys::build("C", n), rootsys::build_type_a_in(n), Relation::kStrictSubset);
  for (int n = 3; n <= 4; ++n) expect(rootsys::build("C", n), rootsys::build("B", n), Relation::kStrictSubset);
  return o;
}

Outcome criterion4() {
  Outcome o;
  const auto pairs = hermitian::enumerate_pairs(6);
  std::size_t mismatches = 0;
  std::vector<std::string> seen;
  for (const auto& p : pairs) {
    if (hermitian::classify_xi0(p) == p.published) continue;
    ++mismatches;
    const std::string label = p.g + "/" + p.s;
    bool dup = false;
    for (const auto& s : seen) dup = dup || s == label;
    if (!dup) seen.push_back(label);
  }
  o.notes.push_back(std::to_string(pairs.size()) + " instances, " + std::to_string(mismatches) + " mismatches");
  o.ok = mismatches == 0;
  for (const auto& s : seen) o.notes.push_back("mismatch " + s);
  return o;
}

Outcome criterion5() {
  Outcome o;
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> A(-std::numbers::pi, std::numbers::pi);
  double jac = 0;
  for (int i = 0; i < 10000; ++i) {
    const double a = A(rng);
    const double det = std::abs(std::cos(a) * (-std::sin(a)) - std::sin(a) * std::cos(a));
    jac = std::max(jac, std::abs(det - std::abs(std::sin(2 * a))));
    const auto b = geom::jacobian_block(a);
    jac = std::max(jac, std::abs(b.det_abs - std::abs(std::sin(2 * a))));
  }
  o.require(jac <= kJacobianTol, "jacobian " + num(jac));
  double worst = 0;
  for (const auto& sys : criterion1_systems()) {
    const auto r = cli::geom_density(sys.name(), 0, 200, 1).report;
    const double inv = residual(r, "density is W-invariant", o);
    worst = std::max(worst, inv);
    o.require(inv <= kDensityInvarianceTol, sys.name() + " invariance " + num(inv));
  }
  o.notes.insert(o.notes.begin(), "jacobian " + num(jac) + ", invariance " + num(worst));
  return o;
}

Outcome criterion6() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  for (const char* a : {"sym:2", "sym:3", "spin:4"}) {
    cli::JordanRun run;
    run.algebra = a;
    run.samples = 100;
    run.tol = kHessianFdTol;
    const auto r = cli::jordan_hessian(run).report;
    const double e = residual(r, "hessian vs finite differences", o);
    o.require(e <= kHessianFdTol, std::string(a) + " rel err " + num(e));
    o.notes.push_back(std::string(a) + " " + num(e));
  }
  const double dt = seconds_since(t0);
  o.require(dt <= kRuntime6, "runtime " + num(dt) + " s");
  return o;
}

const char* kAlgebras[] = {"sym:2", "sym:3", "herm:2", "herm:3", "spin:3", "spin:4"};

Outcome criterion7() {
  Outcome o;
  for (const char* a : kAlgebras) {
    cli::JordanRun run;
    run.algebra = a;
    run.samples = 100;
    run.identity_samples = 1;
    const auto r = cli::verify_jordan(run).report;
    const double full = residual(r, "psh full tangent", o);
    const double tz = residual(r, "psh trace-zero tangent", o);
    const double dg = residual(r, "diagonal terms nonnegative", o);
    const double od = residual(r, "off-diagonal terms nonnegative", o);
    o.require(full >= kPshFullTol, std::string(a) + " full min " + num(full));
    o.require(tz > 0, std::string(a) + " trace-zero min " + num(tz));
    o.require(dg >= 0 && od >= 0, std::string(a) + " negative term");
  }
  cli::JordanRun one;
  one.algebra = "sym:1";
  one.samples = 100;
  one.identity_samples = 1;
  const auto r = cli::verify_jordan(one).report;
  const double h = residual(r, "hessian vanishes for V = R", o);
  o.require(h <= kVRealTol, "V = R hessian " + num(h));
  return o;
}

Outcome criterion8() {
  Outcome o;
  double worst = 0;
  for (const char* a : kAlgebras) {
    cli::JordanRun run;
    run.algebra = a;
    run.samples = 1;
    run.identity_samples = 1000;
    const auto r = cli::verify_jordan(run).report;
    for (const char* name : {"P(z,conj z) = P(x) + P(y)", "P(gz,gw) = g P(z,w) g^t", "det = minimal polynomial constant"}) {
      const double e = residual(r, name, o);
      worst = std::max(worst, e);
      o.require(e <= kIdentityTol, std::string(a) + " " + name + " " + num(e));
    }
  }
  // action of P(z, conj z)^-1 on the Pierce blocks over 1000 diagonal points
  for (const char* a : kAlgebras) {
    cli::JordanRun run;
    run.algebra = a;
    run.samples = 1000;
    run.identity_samples = 1;
    const double e = residual(cli::verify_jordan(run).report, "inverse on Pierce blocks", o);
    worst = std::max(worst, e);
    o.require(e <= kIdentityTol, std::string(a) + " inverse on Pierce blocks " + num(e));
  }
  o.notes.insert(o.notes.begin(), "max residual " + num(worst));
  return o;
}

Outcome criterion9() {
  Outcome o;
  cli::AppendixRun pq;
  pq.which = "so_pq";
  pq.p = 2;
  pq.q = 3;
  pq.samples = 100;
  cli::AppendixRun nc;
  nc.which = "so_nc";
  nc.n = 4;
  nc.samples = 100;
  for (const auto& run : {pq, nc}) {
    const auto r = cli::appendix(run).report;
    const double e = residual(r, "orbit closed form", o);
    o.require(e <= kAppendixTol, run.which + " residual " + num(e));
    o.require(residual(r, "gram diagonal", o) <= kAppendixTol, run.which + " gram");
    o.notes.push_back(run.which + " " + num(e));
  }
  const auto h = cli::verify_hermitian(1, 100).report;
  for (const char* name : {"mobius composition SU(2,3)", "mobius composition SO*(8)"}) {
    const double e = residual(h, name, o);
    o.require(e <= kMobiusTol, std::string(name) + " " + num(e));
  }
  const double rt = residual(h, "tanh/artanh round trip", o);
  o.require(rt <= kRoundTripTol, "round trip " + num(rt));
  return o;
}

Outcome criterion10() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const auto sph = cli::sl2_spherical({0, 1}, 0.5, 512, 1).report;
  o.require(residual(sph, "phi(e) = 1", o) <= kPhiETol, "phi(e)");
  o.require(residual(sph, "phi_lambda = phi_-lambda", o) <= kWeylTol, "Weyl symmetry");
  const double convex = residual(sph, "log s_pi convex", o);
  o.require(convex >= kConvexTol, "log s_pi second difference " + num(convex));
  for (const char* name : {"s_pi minimum 1 at 0", "s_pi >= 1"}) {
    const auto* it = find(sph, name);
    o.require(it && it->status == Status::kPass, name);
  }
  const auto blow = cli::sl2_blowup({0, 1}, std::ldexp(1.0, -10)).report;
  const double slope = residual(blow, "slope > 0", o);
  const double r2 = residual(blow, "log-linear fit", o);
  o.require(slope > 0, "slope " + num(slope));
  o.require(r2 >= kR2Min, "r2 " + num(r2));
  o.notes.push_back("slope " + num(slope) + ", r2 " + num(r2));
  for (double t : {0.1, 0.5, 1.0}) {
    const auto r = cli::sl2_heat(t, "fourier", 0).report;
    const double e = residual(r, "transform of k_t = exp(-t(|lambda|^2+|rho|^2))", o);
    o.require(e <= kFourierTol, "fourier t=" + num(t) + " " + num(e));
    o.notes.push_back("fourier t=" + num(t) + " " + num(e));
  }
  const auto sg = cli::sl2_heat(0.5, "semigroup", 0.5).report;
  const double e = residual(sg, "k_t * k_s = k_(t+s)", o);
  o.require(e <= kSemigroupTol, "semigroup " + num(e));
  const double dt = seconds_since(t0);
  o.require(dt <= kRuntime10, "runtime " + num(dt) + " s");
  o.notes.push_back(num(dt) + " s");
  return o;
}

const std::vector<std::pair<std::string, std::function<Outcome()>>>& criteria() {
  static const std::vector<std::pair<std::string, std::function<Outcome()>>> c = {
      {"boundary faces carry witnesses", criterion1},
      {"half coroots on the boundary", criterion2},
      {"exact polytope relations", criterion3},
      {"rank criterion reproduces the equal-crown list", criterion4},
      {"jacobian identity and density invariance", criterion5},
      {"Hessian against finite differences", criterion6},
      {"plurisubharmonicity certificates", criterion7},
      {"quadratic representation identities", criterion8},
      {"bounded realization orbit formulas", criterion9},
      {"SL(2,R) spherical and heat suite", criterion10},
  };
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  const auto& all = criteria();
  std::vector<int> which;
  if (argc > 1) {
    const int k = std::atoi(argv[1]);
    if (k < 1 || k > static_cast<int>(all.size())) {
      std::cerr << "usage: crown_acceptance [1-" << all.size() << "]\n";
      return 2;
    }
    which.push_back(k);
  } else {
    for (int k = 1; k <= static_cast<int>(all.size()); ++k) which.push_back(k);
  }
  bool ok = true;
  for (int k : which) {
    Outcome o;
    try {
      o = all[static_cast<std::size_t>(k - 1)].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.notes.push_back(std::string("exception: ") + e.what());
    }
    std::cout << "criterion " << k << " " << (o.ok ? "PASS" : "FAIL") << ": " << all[static_cast<std::size_t>(k - 1)].first;
    for (const auto& n : o.notes) std::cout << "; " << n;
    std::cout << std::endl;
    ok = ok && o.ok;
  }
  return ok ? 0 : 1;
}
