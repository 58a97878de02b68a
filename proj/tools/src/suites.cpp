#include "crown_cli/suites.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <future>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <thread>

#include "crown/crownverify.hpp"
#include "crown/geom.hpp"
#include "crown/heat.hpp"
#include "crown/hermitian.hpp"
#include "crown/jordan.hpp"
#include "crown/rootsys.hpp"
#include "crown/sl2lab.hpp"
#include "json.hpp"

namespace crown::cli {
namespace {

using json = nlohmann::ordered_json;
using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

// Runs f(0..n-1) on a few threads; results come back in index order.
template <class F>
auto parallel_map(int n, F&& f) -> std::vector<decltype(f(0))> {
  using R = decltype(f(0));
  std::vector<R> out(static_cast<std::size_t>(std::max(n, 0)));
  const int workers = std::max(1, std::min<int>(n, static_cast<int>(std::thread::hardware_concurrency())));
  std::vector<std::future<void>> tasks;
  for (int w = 0; w < workers; ++w)
    tasks.push_back(std::async(std::launch::async, [&, w] {
      for (int i = w; i < n; i += workers) out[static_cast<std::size_t>(i)] = f(i);
    }));
  for (auto& t : tasks) t.get();
  return out;
}

// Independent stream per sample index.
std::mt19937_64 stream(std::uint64_t seed, std::uint64_t index, std::uint64_t salt = 0) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(salt)};
  return std::mt19937_64(seq);
}

rootsys::RootSystem build_system(const std::string& type, int rank) {
  if (type.size() > 5 && type.ends_with(".json")) {
    std::ifstream in(type);
    if (!in) throw TargetError("cannot read root system file: " + type);
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      return rootsys::from_json(buf.str());
    } catch (const std::exception& e) {
      throw TargetError(std::string("invalid root system document: ") + e.what());
    }
  }
  try {
    if (rank > 0) return rootsys::build(type, rank);
    return rootsys::build_from_name(type);
  } catch (const std::exception& e) {
    throw TargetError(std::string("invalid root system: ") + e.what());
  }
}

std::vector<rootsys::CorootConvention> conventions(const std::string& s) {
  if (s == "both") return {rootsys::CorootConvention::kCanonical, rootsys::CorootConvention::kDual};
  try {
    return {rootsys::parse_convention(s)};
  } catch (const std::exception& e) {
    throw TargetError(std::string("invalid convention: ") + e.what());
  }
}

jordan::AlgebraPtr parse_algebra(const std::string& spec) {
  try {
    return jordan::JordanAlgebra::parse(spec);
  } catch (const std::exception& e) {
    throw TargetError(std::string("invalid algebra: ") + e.what());
  }
}

double opnorm(const Eigen::MatrixXcd& m) {
  if (m.size() == 0) return 0;
  return Eigen::JacobiSVD<Eigen::MatrixXcd>(m).singularValues()(0);
}

jordan::CVec random_cvec(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> N(0, 1);
  jordan::CVec v(d);
  for (int i = 0; i < d; ++i) v(i) = cplx(N(rng), N(rng));
  return v;
}

// Random point of Omega (units of pi/2) in ambient coordinates with max |alpha| = u < 1.
std::vector<double> random_flat_point(const rootsys::RootSystem& sys, std::mt19937_64& rng,
                                      std::vector<double>* coords = nullptr) {
  std::normal_distribution<double> N(0, 1);
  std::uniform_real_distribution<double> U(0.05, 0.95);
  std::vector<double> x(sys.ambient_dim, 0.0);
  std::vector<double> cs;
  for (const auto& row : sys.flat_basis) {
    const double c = N(rng);
    cs.push_back(c);
    const auto r = row.to_double();
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += c * r[i];
  }
  double m = 0;
  for (const auto& a : sys.roots) {
    const auto ad = a.to_double();
    double s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += ad[i] * x[i];
    m = std::max(m, std::abs(s));
  }
  const double scale = m > 0 ? U(rng) / m : 0.0;
  for (auto& v : x) v *= scale;
  if (coords) {
    for (auto& c : cs) c *= scale;
    *coords = std::move(cs);
  }
  return x;
}

std::string region_name(rootsys::Region r) { return rootsys::to_string(r); }

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = {
      {"verify-roots-classical", "crownverify", "certify_boundary_witnesses",
       "boundary faces of Omega: witness half coroots, classical types", "verify roots --type B --rank 3"},
      {"verify-roots-exceptional", "crownverify", "certify_boundary_witnesses",
       "boundary faces of Omega: witness half coroots, exceptional types", "verify roots --type E8"},
      {"verify-half-coroots", "crownverify", "certify_half_coroots",
       "half coroots on the boundary of Omega, case analysis by type", "verify roots --type F4 --convention both"},
      {"verify-omega", "crownverify", "compare_crown_polytopes",
       "equality of crowns for compactly causal pairs: polytope facts", "verify omega"},
      {"verify-jordan", "jordan", "pierce/quad_rep/transform_check",
       "square-root crown in a Jordan algebra: quadratic representation identities", "verify jordan --algebra sym:3"},
      {"jordan-hessian", "jordan", "hessian",
       "trace formula for the complex Hessian of -log det P(z, conj z)", "jordan hessian --algebra sym:3"},
      {"jordan-psh", "jordan", "psh_certificate",
       "plurisubharmonicity and strict plurisubharmonicity of the potential", "verify jordan --algebra spin:4"},
      {"verify-hermitian", "hermitian", "classify_xi0",
       "classification of compactly causal pairs with equal crowns", "verify hermitian"},
      {"classify", "hermitian", "match_pair", "rank criterion for Xi = Xi_0", "classify --pair so(1,5)"},
      {"appendix", "hermitian", "appendix_orbit_check",
       "tube and ball realizations: orbit of the flat through 0", "appendix --case so_pq --p 2 --q 3"},
      {"sl2-spherical", "sl2lab", "spherical/s_pi_profile",
       "spherical functions and log-convexity of s_pi on the crown of SL(2,R)", "sl2 spherical --lambda 1.0i --theta 0.5"},
      {"sl2-blowup", "sl2lab", "blowup_probe",
       "logarithmic blow-up of s_pi at the boundary of the crown", "sl2 blowup --lambda 1.0i --eps-min 1e-3"},
      {"sl2-heat", "sl2lab", "heat_kernel/spherical_transform",
       "heat kernel and its spherical transform", "sl2 heat --t 0.5 --probe fourier"},
      {"sl2-transform", "sl2lab", "heat_transform",
       "heat kernel transform into holomorphic functions on the crown", "sl2 transform --t 0.3"},
      {"geom-density", "geom", "measure_density",
       "invariant measure on exp(i Omega) in polar coordinates", "geom density --type E8"},
      {"geom-metric", "geom", "crown_metric_norm",
       "Riemannian metric on the crown along exp(i Omega)", "geom metric --type C --rank 3"},
  };
  return entries;
}

SuiteResult list_suites() {
  SuiteResult out;
  out.report.suite = "list";
  json arr = json::array();
  for (const auto& e : catalog()) {
    out.report.add_check(e.suite, !e.paper_anchor.empty(), 0.0, e.paper_anchor, e.module + "::" + e.operation);
    arr.push_back({{"suite", e.suite},
                   {"module", e.module},
                   {"operation", e.operation},
                   {"paper_anchor", e.paper_anchor},
                   {"command", e.command}});
  }
  out.report.data_json = json{{"catalog", arr}}.dump();
  return out;
}

SuiteResult verify_roots(const std::string& type, int rank, const std::string& convention) {
  const auto sys = build_system(type, rank);
  const auto convs = conventions(convention);
  SuiteResult out;
  Report& rep = out.report;
  rep.suite = "verify roots " + sys.name();
  rep.add_check("closure", rootsys::is_closed(sys), 0.0, "root system axioms",
                std::to_string(sys.size()) + " roots");
  json data{{"system", sys.name()}, {"roots", sys.size()}};
  json per = json::array();
  for (const auto conv : convs) {
    const std::string cname = rootsys::to_string(conv);
    const auto half = crownverify::certify_half_coroots(sys, conv);
    for (const auto& c : half.claims) {
      std::string detail = "computed " + region_name(c.computed) + ", expected " + crownverify::to_string(c.expected);
      rep.add("half_coroot[a" + std::to_string(c.simple_index) + "]/" + cname,
              c.agrees ? Status::kPass : Status::kFlagged, c.agrees ? 0.0 : 1.0,
              c.anchor.empty() ? "half coroots of simple roots" : c.anchor, detail);
    }
    rep.add("roots_on_boundary/" + cname, Status::kPass, 0.0, "half coroots of all roots",
            std::to_string(half.roots_on_boundary) + " of " + std::to_string(half.roots_total));
    const auto wit = crownverify::certify_boundary_witnesses(sys, conv);
    json faces = json::array();
    for (const auto& f : wit.faces) {
      std::size_t found = 0;
      for (const auto& v : f.vertices) found += v.witness.has_value();
      const bool ok = f.status != crownverify::FaceStatus::kFailed;
      std::string detail = std::string(crownverify::to_string(f.status)) + ", " + std::to_string(f.vertices.size()) +
                           " vertices, " + std::to_string(found) + " witnessed";
      if (f.vertices.size() == 1 && f.vertices[0].witness)
        detail += ", vertex " + f.vertices[0].vertex.str() + " witness " + sys.roots[*f.vertices[0].witness].str();
      rep.add_check("face[a" + std::to_string(f.simple_index) + "]/" + cname, ok,
                    static_cast<double>(f.vertices.size() - found), "boundary faces of Omega: witness half coroots",
                    detail);
      faces.push_back({{"simple_index", f.simple_index},
                       {"status", crownverify::to_string(f.status)},
                       {"vertices", f.vertices.size()}});
    }
    per.push_back({{"convention", cname},
                   {"roots_on_boundary", half.roots_on_boundary},
                   {"half_coroots_agree", half.agrees()},
                   {"faces", faces}});
  }
  data["conventions"] = per;
  rep.data_json = data.dump();
  return out;
}

SuiteResult verify_omega() {
  using crownverify::Relation;
  SuiteResult out;
  Report& rep = out.report;
  rep.suite = "verify omega";
  auto compare = [&](const rootsys::RootSystem& a, const rootsys::RootSystem& b, Relation want,
                     const std::string& rel) {
    const auto cmp = crownverify::compare_crown_polytopes(a, b);
    std::string detail = crownverify::to_string(cmp.relation);
    if (cmp.separating_point) detail += ", separating point " + cmp.separating_point->str();
    rep.add_check("Omega(" + a.name() + ") " + rel + " Omega(" + b.name() + ")", cmp.relation == want,
                  cmp.relation == want ? 0.0 : 1.0, "crowns of the restricted root systems of a causal pair", detail);
  };
  for (int n = 1; n <= 3; ++n) compare(rootsys::build("C", n), rootsys::build("BC", n), Relation::kEqual, "=");
  for (int n = 3; n <= 4; ++n) compare(rootsys::build("B", n), rootsys::build("D", n), Relation::kEqual, "=");
  for (int n = 2; n <= 3; ++n) compare(rootsys::build("C", n), rootsys::build_type_a_in(n), Relation::kStrictSubset, "<");
  for (int n = 3; n <= 4; ++n) compare(rootsys::build("C", n), rootsys::build("B", n), Relation::kStrictSubset, "<");
  for (int n = 1; n <= 3; ++n) {
    const auto r = crownverify::certify_bc_reduction(n);
    rep.add_check("bc_reduction[" + std::to_string(n) + "]", r.ok(), static_cast<double>(r.violations),
                  "active roots on vertices of Omega(BC_n) lie in C_n", std::to_string(r.vertices) + " vertices");
  }
  for (int s = 1; s <= 3; ++s)
    for (const char* label : {"C", "BC"}) {
      const bool ok = hermitian::omega0_box_matches(s, label);
      rep.add_check(std::string("omega0_box[") + label + std::to_string(s) + "]", ok, ok ? 0.0 : 1.0,
                    "Omega_0 as the cube |x_j| < pi/4");
    }
  return out;
}

namespace {

struct JordanSample {
  double fd_rel = 0;
  double fd_abs = 0;
  double psh_full = 0;
  double psh_trace_zero = 0;
  double diag_terms_min = 0;
  double offdiag_terms_min = 0;
  double diag_inverse_rel = 0;
  double v_real_hessian = 0;
};

JordanSample run_member_sample(const jordan::AlgebraPtr& alg, const jordan::PierceSplit& split, std::uint64_t seed,
                               int index) {
  auto rng = stream(seed, static_cast<std::uint64_t>(index), 1);
  JordanSample s;
  std::vector<cplx> diag;
  const jordan::Element z = jordan::sample_member(alg, rng, {}, &diag);
  jordan::CVec dir = random_cvec(alg->dim(), rng);
  dir /= dir.norm();
  const jordan::Element Z{alg, dir};
  const double exact = jordan::hessian(z, Z, Z).real();
  const double fd = jordan::hessian_fd(z, Z);
  s.fd_abs = std::abs(exact - fd);
  s.fd_rel = s.fd_abs / std::max(std::abs(exact), 1e-3);
  s.psh_full = jordan::psh_certificate(z, jordan::TangentModel::kFull).min_eigenvalue;
  s.psh_trace_zero = alg->rank() > 1 ? jordan::psh_certificate(z, jordan::TangentModel::kTraceZero).min_eigenvalue : 1.0;
  if (alg->dim() == 1) s.v_real_hessian = std::abs(exact);

  // diagonal point terms
  const int l = alg->rank();
  std::vector<cplx> u(static_cast<std::size_t>(l));
  std::normal_distribution<double> N(0, 1);
  for (auto& x : u) x = cplx(N(rng), N(rng));
  const auto dt = jordan::diagonal_hessian_terms(split, diag, u);
  s.diag_terms_min = dt.empty() ? 0.0 : *std::min_element(dt.begin(), dt.end());
  double off_min = 0;
  bool any = false;
  for (int i = 0; i < l; ++i)
    for (int j = i + 1; j < l; ++j) {
      const auto& B = split.blocks.at({i, j});
      if (B.cols() == 0) continue;
      jordan::CVec c = random_cvec(static_cast<int>(B.cols()), rng);
      jordan::CVec Zij = B.cast<cplx>() * c;
      Zij *= std::sqrt(2.0) / Zij.norm();
      for (double t : jordan::off_diagonal_bound_terms(split, diag, i, j, Zij)) {
        off_min = any ? std::min(off_min, t) : t;
        any = true;
      }
    }
  s.offdiag_terms_min = off_min;
  for (int i = 0; i < l; ++i)
    for (int j = i; j < l; ++j) {
      if (split.dim(i, j) == 0) continue;
      const auto d = jordan::diag_inverse_action(split, diag, i, j);
      s.diag_inverse_rel = std::max(s.diag_inverse_rel, d.dense_residual / std::abs(d.scalar));
    }
  return s;
}

struct IdentitySample {
  double real_imag = 0;
  double transform = 0;
  double det = 0;
};

IdentitySample run_identity_sample(const jordan::AlgebraPtr& alg, std::uint64_t seed, int index) {
  auto rng = stream(seed, static_cast<std::uint64_t>(index), 2);
  IdentitySample s;
  const jordan::CVec v = random_cvec(alg->dim(), rng);
  const jordan::Element z{alg, v};
  const jordan::Element x{alg, v.real().cast<cplx>()};
  const jordan::Element y{alg, v.imag().cast<cplx>()};
  const jordan::CMat P = jordan::quad_rep_hermitian(z);
  s.real_imag = opnorm(P - jordan::quad_rep(x) - jordan::quad_rep(y)) / std::max(opnorm(P), 1e-300);
  const auto g = jordan::random_structure_map(alg, rng, 0.5);
  const jordan::Element w{alg, random_cvec(alg->dim(), rng)};
  s.transform = jordan::transform_check(g, z, w);
  const cplx d0 = alg->det(v), d1 = jordan::det_minpoly(z);
  s.det = std::abs(d0 - d1) / std::max(std::abs(d0), 1e-300);
  return s;
}

int expected_offdiag_dim(const jordan::JordanAlgebra& a) {
  switch (a.kind()) {
    case jordan::Kind::kSymR: return 1;
    case jordan::Kind::kHermC: return 2;
    case jordan::Kind::kSpin: return a.n() - 1;
  }
  return 0;
}

}  // namespace

SuiteResult verify_jordan(const JordanRun& run) {
  const auto alg = parse_algebra(run.algebra);
  if (run.samples < 1 || run.identity_samples < 1) throw TargetError("sample counts must be positive");
  SuiteResult out;
  Report& rep = out.report;
  rep.suite = "verify jordan " + alg->name();
  const auto split = jordan::pierce(alg);

  // Pierce dimensions
  int total = 0, bad = 0;
  for (int i = 0; i < alg->rank(); ++i)
    for (int j = i; j < alg->rank(); ++j) {
      const int d = split.dim(i, j);
      total += d;
      if (d != (i == j ? 1 : expected_offdiag_dim(*alg))) ++bad;
    }
  rep.add_check("pierce_dimensions", bad == 0 && total == alg->dim(), static_cast<double>(bad),
                "Pierce decomposition of a Jordan frame", "sum " + std::to_string(total) + " of " + std::to_string(alg->dim()));
  const auto orth = jordan::pierce_orthogonality_check(split);
  rep.add_check("pierce_orthogonality", orth.max_abs_inner <= 1e-10, orth.max_abs_inner,
                "multiplication rules of the Pierce spaces", std::to_string(orth.tuples) + " tuples");

  const auto ids = parallel_map(run.identity_samples, [&](int i) { return run_identity_sample(alg, run.seed, i); });
  double ri = 0, tr = 0, dt = 0;
  for (const auto& s : ids) {
    ri = std::max(ri, s.real_imag);
    tr = std::max(tr, s.transform);
    dt = std::max(dt, s.det);
  }
  const std::string n_id = std::to_string(run.identity_samples) + " samples";
  rep.add_check("P(z,conj z) = P(x) + P(y)", ri <= 1e-10, ri, "Hermitian quadratic representation splits", n_id);
  rep.add_check("P(gz,gw) = g P(z,w) g^t", tr <= 1e-10, tr, "structure group transformation law", n_id);
  rep.add_check("det = minimal polynomial constant", dt <= 1e-10, dt, "Jordan determinant", n_id);

  const auto ms = parallel_map(run.samples, [&](int i) { return run_member_sample(alg, split, run.seed, i); });
  JordanSample worst;
  worst.psh_full = worst.psh_trace_zero = worst.diag_terms_min = worst.offdiag_terms_min = 1e300;
  for (const auto& s : ms) {
    worst.fd_rel = std::max(worst.fd_rel, s.fd_rel);
    worst.psh_full = std::min(worst.psh_full, s.psh_full);
    worst.psh_trace_zero = std::min(worst.psh_trace_zero, s.psh_trace_zero);
    worst.diag_terms_min = std::min(worst.diag_terms_min, s.diag_terms_min);
    worst.offdiag_terms_min = std::min(worst.offdiag_terms_min, s.offdiag_terms_min);
    worst.diag_inverse_rel = std::max(worst.diag_inverse_rel, s.diag_inverse_rel);
    worst.v_real_hessian = std::max(worst.v_real_hessian, s.v_real_hessian);
  }
  const std::string n_ms = std::to_string(run.samples) + " member points";
  rep.add_check("inverse on Pierce blocks", worst.diag_inverse_rel <= 1e-10, worst.diag_inverse_rel,
                "action of P(z, conj z)^-1 on V_ij at diagonal points", n_ms);
  rep.add_check("hessian vs finite differences", worst.fd_rel <= run.tol, worst.fd_rel,
                "trace formula for the complex Hessian", n_ms);
  rep.add_check("psh full tangent", worst.psh_full >= -1e-8, worst.psh_full, "plurisubharmonicity of the potential",
                "min eigenvalue " + fmt(worst.psh_full));
  if (alg->rank() > 1)
    rep.add_check("psh trace-zero tangent", worst.psh_trace_zero > 0, worst.psh_trace_zero,
                  "strict plurisubharmonicity on the trace-zero part", "min eigenvalue " + fmt(worst.psh_trace_zero));
  if (alg->rank() > 1) {
    rep.add_check("diagonal terms nonnegative", worst.diag_terms_min >= 0, worst.diag_terms_min,
                  "Hessian at diagonal points: diagonal directions");
    rep.add_check("off-diagonal terms nonnegative", worst.offdiag_terms_min >= 0, worst.offdiag_terms_min,
                  "Hessian at diagonal points: off-diagonal directions");
  }
  if (alg->dim() == 1)
    rep.add_check("hessian vanishes for V = R", worst.v_real_hessian <= 1e-12, worst.v_real_hessian,
                  "the rank-one real case is flat");
  rep.data_json = json{{"algebra", alg->name()},
                       {"dim", alg->dim()},
                       {"rank", alg->rank()},
                       {"seed", run.seed},
                       {"max_fd_rel_err", worst.fd_rel},
                       {"psh_full_min", worst.psh_full},
                       {"psh_trace_zero_min", alg->rank() > 1 ? json(worst.psh_trace_zero) : json(nullptr)}}
                      .dump();
  return out;
}

SuiteResult jordan_hessian(const JordanRun& run) {
  const auto alg = parse_algebra(run.algebra);
  if (run.samples < 1) throw TargetError("sample count must be positive");
  SuiteResult out;
  out.report.suite = "jordan hessian " + alg->name();
  const auto split = jordan::pierce(alg);
  const auto ms = parallel_map(run.samples, [&](int i) { return run_member_sample(alg, split, run.seed, i); });
  double worst = 0, worst_abs = 0;
  std::ostringstream csv;
  csv << "sample,rel_err,abs_err\n";
  for (std::size_t i = 0; i < ms.size(); ++i) {
    worst = std::max(worst, ms[i].fd_rel);
    worst_abs = std::max(worst_abs, ms[i].fd_abs);
    csv << i << ',' << ms[i].fd_rel << ',' << ms[i].fd_abs << '\n';
  }
  out.report.add_check("hessian vs finite differences", worst <= run.tol, worst,
                       "trace formula for the complex Hessian",
                       std::to_string(run.samples) + " member points, tol " + fmt(run.tol));
  out.report.data_json =
      json{{"algebra", alg->name()}, {"seed", run.seed}, {"max_rel_err", worst}, {"max_abs_err", worst_abs}}.dump();
  out.csv = csv.str();
  return out;
}

SuiteResult verify_hermitian(std::uint64_t seed, int samples) {
  if (samples < 1) throw TargetError("sample count must be positive");
  SuiteResult out;
  Report& rep = out.report;
  rep.suite = "verify hermitian";
  const auto pairs = hermitian::enumerate_pairs(6);
  std::vector<std::string> mismatches;
  std::size_t disagreements = 0, encoded = 0;
  for (const auto& p : pairs) {
    if (hermitian::classify_xi0(p) != p.published) {
      const std::string label = p.g + "/" + p.s;
      if (std::find(mismatches.begin(), mismatches.end(), label) == mismatches.end()) mismatches.push_back(label);
    }
    const auto sc = hermitian::sigma_cross_check(p);
    if (sc.encoded) {
      ++encoded;
      if (sc.omega_equal != hermitian::classify_xi0(p)) ++disagreements;
    }
  }
  std::string mm = std::to_string(pairs.size()) + " pairs";
  for (const auto& m : mismatches) mm += "; mismatch " + m;
  rep.add_check("rank criterion vs published list", mismatches.empty(), static_cast<double>(mismatches.size()),
                "published list of pairs with equal crowns", mm);
  rep.add_check("rank criterion vs Omega(Sigma) = Omega(Sigma-hat)", disagreements == 0,
                static_cast<double>(disagreements), "crown equality through the restricted root systems",
                std::to_string(encoded) + " pairs with encoded root systems");

  std::mt19937_64 rng = stream(seed, 0, 3);
  std::uniform_real_distribution<double> U(-1, 1);
  double rt = 0;
  for (int i = 0; i < samples; ++i) {
    std::vector<cplx> z(3);
    for (auto& c : z) c = cplx(2 * U(rng), 0.999 * kPi / 4 * U(rng));
    const auto back = hermitian::artanh_map(hermitian::tanh_map(hermitian::StripPoint::make(z)));
    for (std::size_t k = 0; k < z.size(); ++k) rt = std::max(rt, std::abs(back.z[k] - z[k]));
  }
  rep.add_check("tanh/artanh round trip", rt <= 1e-12, rt, "strip and disk coordinates of the flat",
                std::to_string(samples) + " points");

  struct Case {
    hermitian::MatrixGroup group;
    int p, q;
    const char* name;
  };
  for (const Case c : {Case{hermitian::MatrixGroup::kSUpq, 2, 3, "SU(2,3)"},
                       Case{hermitian::MatrixGroup::kSOstar, 4, 4, "SO*(8)"}}) {
    double comp = 0;
    bool inside = true;
    for (int i = 0; i < samples; ++i) {
      const auto g1 = hermitian::random_group_element(c.group, c.p, c.q, rng);
      const auto g2 = hermitian::random_group_element(c.group, c.p, c.q, rng);
      const auto Z = hermitian::random_ball_point(c.group, c.p, c.q, rng);
      const auto a = hermitian::mobius(g1, hermitian::mobius(g2, Z, c.group), c.group);
      const auto b = hermitian::mobius(g1 * g2, Z, c.group);
      comp = std::max(comp, (a - b).cwiseAbs().maxCoeff());
      inside = inside && hermitian::in_ball(b, c.group);
    }
    rep.add_check(std::string("mobius composition ") + c.name, comp <= 1e-10, comp, "bounded realization: Mobius action",
                  std::to_string(samples) + " samples");
    rep.add_check(std::string("ball preserved ") + c.name, inside, inside ? 0.0 : 1.0,
                  "bounded realization: Mobius action");
  }
  json mis = json::array();
  for (const auto& m : mismatches) mis.push_back(m);
  rep.data_json = json{{"pairs", pairs.size()}, {"mismatches", mis}}.dump();
  return out;
}

SuiteResult classify(const std::string& pair) {
  std::vector<hermitian::CausalPair> matches;
  try {
    matches = hermitian::match_pair(pair);
  } catch (const std::exception& e) {
    throw TargetError(std::string("invalid pair label: ") + e.what());
  }
  SuiteResult out;
  out.report.suite = "classify " + pair;
  for (const auto& m : matches) {
    const bool xi = hermitian::classify_xi0(m);
    out.report.add_check(m.g + "/" + m.s + " [" + m.row_id + "]", xi == m.published, xi == m.published ? 0.0 : 1.0,
                         m.anchor,
                         std::string("xi_equals_xi0 ") + (xi ? "true" : "false") + ", published " +
                             (m.published ? "true" : "false"));
  }
  out.report.data_json = hermitian::classification_json(matches);
  return out;
}

SuiteResult appendix(const AppendixRun& run) {
  hermitian::AppendixCase which;
  try {
    which = hermitian::parse_appendix_case(run.which);
  } catch (const std::exception& e) {
    throw TargetError(std::string("invalid appendix case: ") + e.what());
  }
  if (run.samples < 1) throw TargetError("sample count must be positive");
  const int first = which == hermitian::AppendixCase::kSOpq ? run.p : run.n;
  const int params = which == hermitian::AppendixCase::kSOpq ? run.p : run.n / 2;
  SuiteResult out;
  Report& rep = out.report;
  std::mt19937_64 rng = stream(run.seed, 0, 4);
  std::uniform_real_distribution<double> U(-1, 1);
  double res = 0, gram = 0;
  bool inside = true;
  hermitian::AppendixReport last;
  const int count = run.z.empty() ? run.samples : 1;
  for (int i = 0; i < count; ++i) {
    std::vector<cplx> z(static_cast<std::size_t>(std::max(params, 0)));
    for (auto& c : z) c = cplx(1.5 * U(rng), 0.99 * kPi / 4 * U(rng));
    if (!run.z.empty()) {
      if (run.z.size() != z.size())
        throw TargetError("appendix case needs " + std::to_string(z.size()) + " strip parameters");
      z = run.z;
    }
    try {
      last = hermitian::appendix_orbit_check(which, first, run.q, z);
    } catch (const std::invalid_argument& e) {
      throw TargetError(e.what());
    }
    res = std::max(res, last.residual);
    gram = std::max(gram, last.gram_residual);
    inside = inside && last.in_ball;
  }
  rep.suite = std::string("appendix ") + hermitian::to_string(which);
  const std::string n = std::to_string(count) + " strip parameters";
  rep.add_check("orbit closed form", res <= run.tol, res, "orbit of 0 under exp of the flat: tanh form", n);
  rep.add_check("gram diagonal", gram <= run.tol, gram, "orbit of 0 under exp of the flat: singular values", n);
  rep.add_check("orbit inside ball", inside, inside ? 0.0 : 1.0, "the flat orbit stays in the bounded domain", n);
  rep.data_json = last.to_json();
  return out;
}

std::complex<double> parse_complex(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (ch != ' ') s += ch;
  if (s.empty()) throw TargetError("empty complex number");
  auto num = [&](const std::string& t, double dflt_for_sign) -> double {
    if (t.empty() || t == "+") return dflt_for_sign;
    if (t == "-") return -dflt_for_sign;
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(t, &used);
    } catch (const std::exception&) {
      throw TargetError("invalid complex number: " + text);
    }
    if (used != t.size()) throw TargetError("invalid complex number: " + text);
    return v;
  };
  if (s.back() != 'i' && s.back() != 'j') return {num(s, 1), 0.0};
  const std::string body = s.substr(0, s.size() - 1);
  // split at the last sign that is not an exponent sign or the leading sign
  std::size_t cut = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;)
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      cut = k;
      break;
    }
  if (cut == std::string::npos) return {0.0, num(body, 1)};
  return {num(body.substr(0, cut), 1), num(body.substr(cut), 1)};
}

SuiteResult sl2_spherical(std::complex<double> lambda, double theta, int nodes, std::uint64_t seed) {
  if (!(std::abs(theta) < kPi / 4)) throw TargetError("theta must satisfy |theta| < pi/4");
  if (nodes < 8) throw TargetError("nodes must be at least 8");
  using namespace crown::sl2;
  SuiteResult out;
  Report& rep = out.report;
  rep.suite = "sl2 spherical";
  const cplx value = spherical(lambda, exp_h(cplx(0, theta)), nodes);
  const cplx radial = spherical_radial(lambda, cplx(0, theta));
  const double e1 = std::abs(spherical(lambda, exp_h(0.0), nodes) - 1.0);
  rep.add_check("phi(e) = 1", e1 <= 1e-10, e1, "spherical function normalization");

  std::mt19937_64 rng = stream(seed, 0, 5);
  std::uniform_real_distribution<double> U(-1, 1);
  double weyl = 0, rho = 0, real_agree = 0, recon = 0;
  for (int i = 0; i < 20; ++i) {
    const SL2C g = rotation(kPi * U(rng)) * exp_h(0.8 * U(rng)) * unipotent(U(rng));
    weyl = std::max(weyl, std::abs(spherical(lambda, g, nodes) - spherical(-lambda, g, nodes)));
    rho = std::max(rho, std::abs(spherical(0.5, g, nodes) - 1.0));
    const auto r = iwasawa_real(g);
    const auto h = iwasawa_holo(g);
    real_agree = std::max(real_agree, std::abs(r.log_a - h.log_a));
    const SL2C x = g * exp_h(cplx(0, 0.7 * kPi / 4 * U(rng))) * rotation(cplx(U(rng), U(rng)));
    recon = std::max(recon, iwasawa_holo(x).residual);
  }
  rep.add_check("phi_lambda = phi_-lambda", weyl <= 1e-8, weyl, "Weyl symmetry of spherical functions", "20 real points");
  rep.add_check("phi_rho = 1", rho <= 1e-10, rho, "spherical function at lambda = rho", "20 real points");
  rep.add_check("holomorphic Iwasawa on real points", real_agree == 0.0, real_agree,
                "holomorphic extension of the Iwasawa projection");
  rep.add_check("holomorphic Iwasawa reconstruction", recon <= 1e-9, recon,
                "holomorphic extension of the Iwasawa projection", "20 crown points");
  const double rad = std::abs(value - radial) / std::max(std::abs(value), 1e-300);
  rep.add_check("K trapezoid vs radial rule", rad <= 1e-8, rad, "spherical function integral over K");

  json data{{"lambda", {{"re", lambda.real()}, {"im", lambda.imag()}}},
            {"theta", theta},
            {"value", {{"re", value.real()}, {"im", value.imag()}}}};
  if (lambda.real() == 0) {
    const double nu = lambda.imag();
    const int m = 101;
    std::vector<double> th(m);
    for (int k = 0; k < m; ++k) th[static_cast<std::size_t>(k)] = 0.98 * kPi / 4 * (k - 50) / 50.0;
    const auto s = s_pi_profile(nu, th);
    double d2 = 1e300, smin = 1e300, sym = 0;
    std::size_t argmin = 0;
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (s[k] < smin) {
        smin = s[k];
        argmin = k;
      }
      sym = std::max(sym, std::abs(s[k] - s[s.size() - 1 - k]) / s[k]);
      if (k > 0 && k + 1 < s.size())
        d2 = std::min(d2, std::log(s[k - 1]) - 2 * std::log(s[k]) + std::log(s[k + 1]));
    }
    rep.add_check("log s_pi convex", d2 >= -1e-6, d2, "log-convexity of s_pi along exp(i Omega)",
                  "101-point grid, min second difference");
    const double center = std::abs(s[50] - 1.0);
    rep.add_check("s_pi minimum 1 at 0", argmin == 50 && center <= 1e-8, center,
                  "s_pi has its unique minimum at the base point");
    rep.add_check("s_pi >= 1", smin >= 1 - 1e-8, smin - 1, "log s_pi >= 0");
    rep.add_check("s_pi even", sym <= 1e-10, sym, "Weyl symmetry of Omega in rank one");
    std::ostringstream csv;
    csv.precision(17);
    csv << "theta,s,log_s\n";
    for (std::size_t k = 0; k < s.size(); ++k) csv << th[k] << ',' << s[k] << ',' << std::log(s[k]) << '\n';
    out.csv = csv.str();
    data["profile_min_second_difference"] = d2;
  }
  rep.data_json = data.dump();
  return out;
}

SuiteResult sl2_heat(double t, const std::string& probe, double s) {
  using namespace crown::sl2;
  if (!(t > 0)) throw TargetError("t must be positive");
  const bool all = probe == "all";
  const bool fourier = probe == "fourier" || probe == "6.7";
  if (!(all || fourier || probe == "mass" || probe == "positivity" || probe == "semigroup" || probe == "calibration"))
    throw TargetError("unknown heat probe: " + probe);
  if (s <= 0) s = t;
  SuiteResult out;
  Report& rep = out.report;
  rep.suite = "sl2 heat";
  json data{{"t", t}, {"probe", probe}};
  const double c = heat_constant();
  data["c"] = c;
  if (all || probe == "calibration") {
    const double d = std::abs(c - kHeatConstantTheory) / kHeatConstantTheory;
    rep.add_check("calibrated constant", d <= 1e-6, d, "normalization of the heat kernel at t -> 0",
                  "c = " + fmt(c));
  }
  if (all || probe == "mass") {
    const double m = heat_mass(t);
    rep.add_check("integral of k_t = 1", std::abs(m - 1) <= 1e-3, std::abs(m - 1), "heat kernel normalization");
    data["mass"] = m;
  }
  if (all || probe == "positivity") {
    const auto p = heat_positivity(t);
    rep.add_check("k_t > 0", p.positive, p.min_value, "heat kernel positivity", "radii up to 3 sqrt(t)");
  }
  if (all || fourier) {
    const auto f = heat_fourier_check(t);
    rep.add_check("transform of k_t = exp(-t(|lambda|^2+|rho|^2))", f.max_rel_err <= 1e-3, f.max_rel_err,
                  "spherical transform of the heat kernel", "worst nu " + fmt(f.worst_nu));
    std::ostringstream csv;
    csv.precision(17);
    csv << "nu,transform,target\n";
    for (std::size_t k = 0; k < f.nu.size(); ++k) csv << f.nu[k] << ',' << f.value[k] << ',' << f.target[k] << '\n';
    out.csv = csv.str();
    data["fourier_max_rel_err"] = f.max_rel_err;
  }
  if (all || probe == "semigroup") {
    const auto g = semigroup_check(t, s);
    rep.add_check("k_t * k_s = k_(t+s)", g.max_rel_err <= 1e-3, g.max_rel_err, "heat semigroup law",
                  "s = " + fmt(s) + ", " + std::to_string(g.points) + " radii");
    data["semigroup_max_rel_err"] = g.max_rel_err;
    if (probe == "semigroup") {
      std::ostringstream csv;
      csv.precision(17);
      csv << "r,convolved,direct\n";
      for (std::size_t k = 0; k < g.r.size(); ++k) csv << g.r[k] << ',' << g.convolved[k] << ',' << g.direct[k] << '\n';
      out.csv = csv.str();
    }
  }
  rep.data_json = data.dump();
  return out;
}

SuiteResult sl2_blowup(std::complex<double> lambda, double eps_min) {
  using namespace crown::sl2;
  if (lambda.real() != 0) throw TargetError("blowup probe needs lambda in iR");
  if (!(eps_min > 0 && eps_min < 1)) throw TargetError("eps-min must lie in (0, 1)");
  std::vector<double> eps;
  for (double e = 0.5; e >= eps_min * (1 - 1e-12); e /= 2) eps.push_back(e);
  if (eps.size() < 2) throw TargetError("eps-min leaves fewer than two points");
  SuiteResult out;
  Report& rep = out.report;
  rep.suite = "sl2 blowup";
  const double base = s_pi(lambda.imag(), 0.0);
  rep.add_check("eps = 1 baseline", std::abs(base - 1) <= 1e-8, std::abs(base - 1), "s_pi at the base point");
  const auto r = blowup_probe(lambda.imag(), eps);
  rep.add_check("slope > 0", r.slope > 0, r.slope, "lower bound s_pi >= C |log eps| near the boundary",
                "slope " + fmt(r.slope));
  rep.add_check("log-linear fit", r.r2 >= 0.98, r.r2, "lower bound s_pi >= C |log eps| near the boundary",
                "r2 " + fmt(r.r2));
  rep.add_check("quadrature near the boundary", r.failures.empty() || r.eps.size() >= 3,
                static_cast<double>(r.failures.size()), "s_pi quadrature",
                std::to_string(r.eps.size()) + " points fitted, " + std::to_string(r.failures.size()) + " failed");
  std::ostringstream csv;
  csv.precision(17);
  csv << "eps,abs_log_eps,s\n";
  for (std::size_t k = 0; k < r.eps.size(); ++k) csv << r.eps[k] << ',' << -std::log(r.eps[k]) << ',' << r.s[k] << '\n';
  out.csv = csv.str();
  json fails = json::array();
  for (const auto& f : r.failures) fails.push_back(f);
  rep.data_json = json{{"lambda", {{"re", 0.0}, {"im", lambda.imag()}}},
                       {"slope", r.slope},
                       {"intercept", r.intercept},
                       {"r2", r.r2},
                       {"failures", fails}}
                      .dump();
  return out;
}

SuiteResult sl2_transform(double t, double width, std::uint64_t seed) {
  using namespace crown::sl2;
  if (!(t > 0)) throw TargetError("t must be positive");
  if (!(width > 0 && width < 3)) throw TargetError("width must lie in (0, 3)");
  SuiteResult out;
  Report& rep = out.report;
  rep.suite = "sl2 transform";
  std::mt19937_64 rng = stream(seed, 0, 6);
  std::uniform_real_distribution<double> U(-1, 1);
  const RadialGrid profile = RadialGrid::sample(24, width, [&](double r) { return bump_profile(r, width); });
  const SL2C center = rotation(kPi * U(rng)) * exp_h(0.5 * U(rng));
  std::vector<SL2C> real_pts, crown_pts;
  for (int k = 0; k < 3; ++k) real_pts.push_back(center * rotation(kPi * U(rng)) * exp_h(0.6 * U(rng)));
  for (int k = 0; k < 4; ++k)
    crown_pts.push_back(center * rotation(kPi * U(rng)) * exp_h(cplx(0.6 * U(rng), 0.3 * U(rng))));
  const auto direct_real = heat_transform(profile, center, t, real_pts);
  const auto spec_real = heat_transform_spectral(profile, center, t, real_pts);
  double rr = 0, im_real = 0;
  for (std::size_t k = 0; k < real_pts.size(); ++k) {
    rr = std::max(rr, std::abs(direct_real[k] - spec_real[k]) / std::abs(spec_real[k]));
    im_real = std::max(im_real, std::abs(direct_real[k].imag()) / std::abs(direct_real[k]));
  }
  rep.add_check("real restriction = k_t * f", rr <= 1e-3, rr, "heat kernel transform restricted to G/K",
                std::to_string(real_pts.size()) + " points");
  rep.add_check("real on real points", im_real <= 1e-12, im_real, "heat kernel transform restricted to G/K");
  const auto direct = heat_transform(profile, center, t, crown_pts);
  const auto spec = heat_transform_spectral(profile, center, t, crown_pts);
  double cr = 0;
  for (std::size_t k = 0; k < crown_pts.size(); ++k) cr = std::max(cr, std::abs(direct[k] - spec[k]) / std::abs(spec[k]));
  rep.add_check("crown kernel quadrature vs spectral route", cr <= 1e-6, cr,
                "heat kernel transform with the holomorphically extended kernel",
                std::to_string(crown_pts.size()) + " crown points");
  // translate the data by g and move each point by g on the left and a complex K element on the right
  const SL2C g = exp_h(0.4) * unipotent(0.7) * rotation(0.3);
  Mat2 kc;
  const cplx ph(0.35, 0.25);
  kc << std::cos(ph), -std::sin(ph), std::sin(ph), std::cos(ph);
  std::vector<SL2C> moved;
  for (const auto& p : crown_pts) moved.push_back(SL2C{g.m * p.m * kc});
  const auto shifted = heat_transform(profile, g * center, t, moved);
  double eq = 0;
  for (std::size_t k = 0; k < crown_pts.size(); ++k)
    eq = std::max(eq, std::abs(shifted[k] - direct[k]) / std::abs(direct[k]));
  rep.add_check("G-equivariance", eq <= 1e-6, eq, "heat kernel transform is G-equivariant");
  std::ostringstream csv;
  csv.precision(17);
  csv << "w_re,w_im,direct_re,direct_im,spectral_re,spectral_im\n";
  for (std::size_t k = 0; k < crown_pts.size(); ++k) {
    const cplx w = crown_radial(center.inverse() * crown_pts[k]);
    csv << w.real() << ',' << w.imag() << ',' << direct[k].real() << ',' << direct[k].imag() << ',' << spec[k].real()
        << ',' << spec[k].imag() << '\n';
  }
  out.csv = csv.str();
  rep.data_json = json{{"t", t}, {"width", width}, {"seed", seed}}.dump();
  return out;
}

SuiteResult geom_density(const std::string& type, int rank, int samples, std::uint64_t seed) {
  const auto sys = build_system(type, rank);
  if (samples < 1) throw TargetError("sample count must be positive");
  SuiteResult out;
  Report& rep = out.report;
  rep.suite = "geom density " + sys.name();
  std::mt19937_64 rng = stream(seed, 0, 7);
  std::uniform_real_distribution<double> A(-kPi, kPi);
  double jac = 0;
  try {
    for (int i = 0; i < 10000; ++i) {
      const auto b = geom::jacobian_block(A(rng));
      jac = std::max(jac, std::abs(b.det_abs - b.sin2_abs));
    }
  } catch (const std::logic_error& e) {
    jac = 1;
  }
  rep.add_check("jacobian block = |sin 2 alpha|", jac <= 1e-12, jac, "Jacobian of the polar map on a root space",
                "10000 angles");
  std::uniform_int_distribution<std::size_t> pick(0, sys.simple.size() - 1);
  double inv = 0;
  std::ostringstream csv;
  csv.precision(17);
  for (std::size_t k = 0; k < sys.flat_basis.size(); ++k) csv << 'x' << k + 1 << ',';
  csv << "density\n";
  for (int i = 0; i < samples; ++i) {
    std::vector<double> coords;
    random_flat_point(sys, rng, &coords);
    // dyadic rounding so that the Weyl action below is exact
    RatVec X(sys.ambient_dim, sys.constraint);
    for (std::size_t k = 0; k < coords.size(); ++k) {
      const Rational c(static_cast<std::int64_t>(std::llround(std::ldexp(coords[k], 24))), std::int64_t{1} << 24);
      coords[k] = c.to_double();
      X += c * sys.flat_basis[k];
    }
    const auto x = X.to_double();
    const double d0 = geom::measure_density(sys, x).value;
    for (double c : coords) csv << c << ',';
    csv << d0 << '\n';
    RatVec Yw = X;
    for (int k = 0; k < 12; ++k) Yw = rootsys::reflect(Yw, sys.roots[sys.simple[pick(rng)]]);
    const auto y = Yw.to_double();
    const double d1 = geom::measure_density(sys, y).value;
    inv = std::max(inv, std::abs(d0 - d1) / std::max(std::abs(d0), 1e-300));
  }
  rep.add_check("density is W-invariant", inv <= 1e-12, inv, "invariant measure density on exp(i Omega)",
                std::to_string(samples) + " points");
  // exact value at a (1/6)-lattice point of Omega, keeping the one with fewest vanishing factors
  std::uniform_int_distribution<int> coef(-1, 1);
  std::optional<RatVec> lattice_point;
  std::size_t best_zeros = sys.roots.size() + 1;
  for (int attempt = 0; attempt < 200 && best_zeros > 0; ++attempt) {
    RatVec Y(sys.ambient_dim, sys.constraint);
    for (std::size_t k : sys.simple) Y += Rational(coef(rng), 6) * sys.roots[k];
    std::size_t zeros = 0;
    bool inside = true;
    for (const auto& a : sys.roots) {
      const Rational v = dot(a, Y);
      zeros += v.is_zero();
      inside = inside && abs(v) < Rational(1) && 6 % v.den() == 0;
    }
    if (inside && zeros < best_zeros) {
      best_zeros = zeros;
      lattice_point = Y;
    }
  }
  if (lattice_point) {
    const auto q = geom::exact_density(sys, *lattice_point);
    const double d = geom::measure_density(sys, lattice_point->to_double()).value;
    const double e = std::abs(q.to_double() - d);
    rep.add_check("exact density in Q(sqrt 3)", e <= 1e-12, e, "invariant measure density on exp(i Omega)",
                  "Y = " + lattice_point->str() + ", " + std::to_string(best_zeros / 2) + " vanishing factors");
  }
  out.csv = csv.str();
  rep.data_json = json{{"system", sys.name()}, {"seed", seed}, {"max_invariance_err", inv}}.dump();
  return out;
}

SuiteResult geom_metric(const std::string& type, int rank, int samples, std::uint64_t seed) {
  const auto sys = build_system(type, rank);
  if (samples < 1) throw TargetError("sample count must be positive");
  SuiteResult out;
  Report& rep = out.report;
  rep.suite = "geom metric " + sys.name();
  std::mt19937_64 rng = stream(seed, 0, 8);
  std::normal_distribution<double> N(0, 1);
  double min_ratio = 1e300, cos_err = 0;
  for (int i = 0; i < samples; ++i) {
    const auto x = random_flat_point(sys, rng);
    auto Y = geom::zero_vector(sys);
    double plain = 0;
    for (auto& c : Y.y0) {
      c = cplx(N(rng), N(rng));
      plain += std::norm(c);
    }
    for (auto& v : Y.y)
      for (auto& c : v) {
        c = cplx(N(rng), N(rng));
        plain += std::norm(c);
      }
    const double n = geom::crown_metric_norm(sys, x, Y);
    min_ratio = std::min(min_ratio, n / plain);
  }
  for (int num = -5; num <= 5; ++num) {
    const auto q = geom::exact_cos_squared(Rational(num, 6));
    const double c = std::cos(kPi / 2 * num / 6.0);
    cos_err = std::max(cos_err, std::abs(q.to_double() - c * c));
  }
  rep.add_check("metric positive on exp(i Omega)", min_ratio > 0, min_ratio, "crown metric along the flat",
                std::to_string(samples) + " points, min |Y|_X^2 / |Y|^2");
  rep.add_check("exact cos^2 on (1/6)Z", cos_err <= 1e-15, cos_err, "crown metric along the flat");
  bool rejects = false;
  try {
    auto x = random_flat_point(sys, rng);
    double m = 0;
    for (const auto& a : sys.roots) {
      const auto ad = a.to_double();
      double s = 0;
      for (std::size_t j = 0; j < x.size(); ++j) s += ad[j] * x[j];
      m = std::max(m, std::abs(s));
    }
    for (auto& v : x) v /= m;
    geom::crown_metric_norm(sys, x, geom::zero_vector(sys));
  } catch (const std::domain_error&) {
    rejects = true;
  }
  rep.add_check("boundary point rejected", rejects, rejects ? 0.0 : 1.0, "the metric degenerates on the boundary");
  rep.data_json = json{{"system", sys.name()}, {"seed", seed}, {"min_ratio", min_ratio}}.dump();
  return out;
}

}  // namespace crown::cli
