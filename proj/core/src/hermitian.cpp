#include "crown/hermitian.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <unsupported/Eigen/MatrixFunctions>

#include "crown/crownverify.hpp"
#include "crown/rootsys.hpp"
#include "embedded.hpp"
#include "expr.hpp"
#include "json.hpp"

namespace crown::hermitian {
namespace {

using json = nlohmann::json;
constexpr double kQuarterPi = std::numbers::pi / 4;

struct Row {
  PairFamily family;
  std::string constraints;
  std::string rank_g, rank_s;
  bool published = false;
  json sigma, sigma_hat;
  std::string anchor;
};

struct Part {
  std::string name;
  std::vector<std::string> args;
  bool has_args = false;
};

std::string lower(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::string normalize_label(const std::string& in) {
  static const std::pair<const char*, const char*> subs[] = {
      {"⊕", "+"}, {"ℝ", "R"}, {"ℂ", "C"}, {"ℍ", "H"}, {"−", "-"}, {"×", "x"}};
  std::string s = in;
  for (auto [from, to] : subs) {
    std::string f(from);
    for (std::size_t pos; (pos = s.find(f)) != std::string::npos;) s.replace(pos, f.size(), to);
  }
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  return s;
}

std::vector<Part> split_parts(const std::string& label) {
  std::vector<Part> parts;
  std::string cur;
  int depth = 0;
  auto flush = [&] {
    if (cur.empty()) throw std::invalid_argument("malformed algebra label '" + label + "'");
    Part p;
    auto open = cur.find('(');
    if (open == std::string::npos) {
      p.name = cur;
    } else {
      if (cur.back() != ')') throw std::invalid_argument("malformed algebra label '" + label + "'");
      p.name = cur.substr(0, open);
      p.has_args = true;
      std::string inner = cur.substr(open + 1, cur.size() - open - 2), arg;
      std::stringstream ss(inner);
      while (std::getline(ss, arg, ',')) p.args.push_back(arg);
    }
    parts.push_back(p);
    cur.clear();
  };
  for (char c : label) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == '+' && depth == 0) {
      flush();
      continue;
    }
    cur += c;
  }
  flush();
  return parts;
}

bool is_field(const std::string& a) { return a == "R" || a == "C" || a == "H"; }

bool is_integer(const std::string& a) {
  std::size_t i = (!a.empty() && a[0] == '-') ? 1 : 0;
  return i < a.size() && std::all_of(a.begin() + static_cast<long>(i), a.end(), [](unsigned char c) { return std::isdigit(c); });
}

std::string with_products(const std::string& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    out += e[i];
    if (std::isdigit(static_cast<unsigned char>(e[i])) && i + 1 < e.size() && std::isalpha(static_cast<unsigned char>(e[i + 1])))
      out += '*';
  }
  return out;
}

std::string instantiate_label(const std::string& pattern, const std::map<std::string, long>& params) {
  std::string out;
  for (const Part& p : split_parts(pattern)) {
    if (!out.empty()) out += "+";
    out += p.name;
    if (!p.has_args) continue;
    out += "(";
    for (std::size_t k = 0; k < p.args.size(); ++k) {
      const std::string& a = p.args[k];
      if (k) out += ",";
      out += (is_field(a) || is_integer(a)) ? a : std::to_string(detail::eval_int_expr(with_products(a), params));
    }
    out += ")";
  }
  return out;
}

// Binds pattern parameters against a concrete label.
std::optional<std::map<std::string, long>> bind_params(const std::string& pattern, const std::string& label) {
  std::vector<Part> pp = split_parts(pattern), lp;
  try {
    lp = split_parts(label);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
  if (pp.size() != lp.size()) return std::nullopt;
  std::map<std::string, long> vars;
  for (std::size_t i = 0; i < pp.size(); ++i) {
    if (lower(pp[i].name) != lower(lp[i].name) || pp[i].has_args != lp[i].has_args ||
        pp[i].args.size() != lp[i].args.size())
      return std::nullopt;
    for (std::size_t k = 0; k < pp[i].args.size(); ++k) {
      const std::string &pa = pp[i].args[k], &la = lp[i].args[k];
      if (is_field(pa) || is_integer(pa)) {
        if (lower(pa) != lower(la)) return std::nullopt;
        continue;
      }
      if (!is_integer(la) || la[0] == '-') return std::nullopt;
      std::size_t digits = 0;
      while (digits < pa.size() && std::isdigit(static_cast<unsigned char>(pa[digits]))) ++digits;
      const long coeff = digits ? std::stol(pa.substr(0, digits)) : 1;
      const std::string var = pa.substr(digits);
      const long value = std::stol(la);
      if (value % coeff != 0) return std::nullopt;
      auto [it, fresh] = vars.emplace(var, value / coeff);
      if (!fresh && it->second != value / coeff) return std::nullopt;
    }
  }
  return vars;
}

std::vector<std::string> params_of(const std::string& pattern) {
  std::vector<std::string> out;
  for (const Part& p : split_parts(pattern))
    for (const std::string& a : p.args) {
      if (is_field(a) || is_integer(a)) continue;
      std::string v = a.substr(a.find_first_not_of("0123456789"));
      if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    }
  return out;
}

std::string select_type(const json& spec, const std::map<std::string, long>& params) {
  if (spec.is_string()) return spec.get<std::string>();
  const bool cond = detail::eval_int_expr(spec.at("if").get<std::string>(), params) != 0;
  return spec.at(cond ? "then" : "else").get<std::string>();
}

struct Table {
  std::vector<Row> rows;
  std::vector<PairFamily> families;
  std::vector<JordanRow> jordan;
};

const Table& table() {
  static const Table t = [] {
    Table out;
    const json j = json::parse(detail::embedded_file("causal_pairs.json"));
    for (const auto& r : j.at("rows")) {
      Row row;
      row.family.row_id = r.at("id");
      row.family.g_pattern = r.at("g");
      row.family.s_pattern = r.at("s");
      row.family.params = params_of(row.family.g_pattern);
      row.family.cayley = r.at("cayley");
      row.constraints = r.at("constraints");
      row.rank_g = r.at("rank_g");
      row.rank_s = r.at("rank_s");
      row.published = r.at("published");
      row.sigma = r.at("sigma");
      row.sigma_hat = r.at("sigma_hat");
      row.anchor = r.at("anchor");
      out.rows.push_back(row);
    }
    for (const auto& r : j.at("group_case")) {
      Row row;
      row.family.row_id = r.at("id");
      row.family.g_pattern = r.at("g");
      row.family.s_pattern = row.family.g_pattern + "+" + row.family.g_pattern;
      row.family.params = params_of(row.family.g_pattern);
      row.family.group_case = true;
      row.constraints = r.at("constraints");
      row.rank_g = r.at("rank");
      row.rank_s = "2*(" + row.rank_g + ")";
      row.published = true;
      row.sigma = r.at("type");
      row.sigma_hat = r.at("type");
      row.anchor = "group case";
      out.rows.push_back(row);
    }
    for (const auto& r : j.at("jordan_algebras"))
      out.jordan.push_back({r.at("v"), r.at("group"), r.at("hermitian_group"), r.at("kind"), r.at("row")});
    for (const auto& r : out.rows) out.families.push_back(r.family);
    return out;
  }();
  return t;
}

const Row& row_by_id(const std::string& id) {
  for (const auto& r : table().rows)
    if (r.family.row_id == id) return r;
  throw std::invalid_argument("unknown pair row '" + id + "'");
}

bool satisfies(const Row& r, const std::map<std::string, long>& params) {
  return detail::eval_int_expr(r.constraints, params) != 0;
}

CausalPair make_causal_pair(const Row& r, const std::map<std::string, long>& params) {
  CausalPair c;
  c.row_id = r.family.row_id;
  c.params = params;
  c.g = instantiate_label(r.family.g_pattern, params);
  c.s = instantiate_label(r.family.s_pattern, params);
  c.rank_g = static_cast<int>(detail::eval_int_expr(r.rank_g, params));
  c.rank_s = static_cast<int>(detail::eval_int_expr(r.rank_s, params));
  c.cayley = r.family.cayley;
  c.group_case = r.family.group_case;
  c.published = r.published;
  c.sigma = select_type(r.sigma, params);
  c.sigma_hat = select_type(r.sigma_hat, params);
  c.anchor = r.anchor;
  if (c.rank_g < 1 || c.rank_s < 1) throw std::logic_error("nonpositive rank for " + c.g);
  return c;
}

std::optional<rootsys::RootSystem> build_sigma(const std::string& type, int r) {
  if (r < 1 || r > 10) return std::nullopt;
  if (type == "A_in") {
    if (r < 2) return std::nullopt;
    return rootsys::build_type_a_in(r);
  }
  if (type == "B" || type == "C" || type == "BC") return rootsys::build(type, r);
  if (type == "D") {
    if (r >= 3) return rootsys::build("D", r);
    if (r == 2) {
      std::vector<RatVec> roots;
      for (int a : {1, -1})
        for (int b : {1, -1}) roots.push_back(RatVec{{Rational(a), Rational(b)}, Constraint::kNone});
      return rootsys::from_roots("D2", roots);
    }
    return std::nullopt;
  }
  throw std::logic_error("unknown root type '" + type + "'");
}

}  // namespace

const std::vector<PairFamily>& families() { return table().families; }

const std::vector<JordanRow>& jordan_algebra_table() { return table().jordan; }

CausalPair instantiate(const std::string& row_id, const std::map<std::string, long>& params) {
  const Row& r = row_by_id(row_id);
  for (const auto& p : r.family.params)
    if (!params.count(p)) throw std::invalid_argument("missing parameter '" + p + "' for " + row_id);
  if (!satisfies(r, params)) throw std::invalid_argument("parameters violate the constraints of " + row_id);
  return make_causal_pair(r, params);
}

std::vector<CausalPair> match_pair(const std::string& label_in) {
  const std::string label = normalize_label(label_in);
  std::string g = label, s;
  if (auto slash = label.find('/'); slash != std::string::npos) {
    g = label.substr(0, slash);
    s = label.substr(slash + 1);
  }
  std::vector<CausalPair> out;
  for (const auto& r : table().rows) {
    auto vars = bind_params(r.family.g_pattern, g);
    if (!vars || !satisfies(r, *vars)) continue;
    CausalPair c = make_causal_pair(r, *vars);
    if (!s.empty() && lower(c.s) != lower(s)) continue;
    out.push_back(c);
  }
  if (out.empty()) throw std::invalid_argument("unknown pair label '" + label_in + "'");
  std::stable_sort(out.begin(), out.end(),
                   [](const CausalPair& a, const CausalPair& b) { return a.params.size() < b.params.size(); });
  return out;
}

std::vector<CausalPair> enumerate_pairs(int max_param) {
  std::vector<CausalPair> out;
  for (const auto& r : table().rows) {
    const auto& names = r.family.params;
    std::vector<long> v(names.size(), 1);
    for (;;) {
      std::map<std::string, long> params;
      for (std::size_t k = 0; k < names.size(); ++k) params[names[k]] = v[k];
      if (satisfies(r, params)) out.push_back(make_causal_pair(r, params));
      std::size_t k = 0;
      while (k < v.size() && ++v[k] > max_param) v[k++] = 1;
      if (k == v.size()) break;
    }
  }
  return out;
}

bool classify_xi0(const CausalPair& pair) { return 2 * pair.rank_g == pair.rank_s; }

SigmaCheck sigma_cross_check(const CausalPair& pair) {
  SigmaCheck c;
  auto a = build_sigma(pair.sigma, pair.rank_g);
  auto b = build_sigma(pair.sigma_hat, pair.rank_g);
  if (!a || !b) {
    c.detail = "root type not encoded at rank " + std::to_string(pair.rank_g);
    return c;
  }
  c.encoded = true;
  auto cmp = crownverify::compare_crown_polytopes(*a, *b);
  c.omega_equal = cmp.relation == crownverify::Relation::kEqual;
  c.detail = pair.sigma + std::to_string(pair.rank_g) + " vs " + pair.sigma_hat + std::to_string(pair.rank_g) + ": " +
             crownverify::to_string(cmp.relation);
  return c;
}

std::string classification_json(const std::vector<CausalPair>& matches) {
  if (matches.empty()) throw std::invalid_argument("classification_json: no matches");
  auto one = [](const CausalPair& c) {
    const SigmaCheck sc = sigma_cross_check(c);
    json params = json::object();
    for (const auto& [k, v] : c.params) params[k] = v;
    json j{{"row", c.row_id},
           {"g", c.g},
           {"s", c.s},
           {"params", params},
           {"ranks", {{"g", c.rank_g}, {"s", c.rank_s}}},
           {"cayley_type", c.cayley},
           {"group_case", c.group_case},
           {"xi_equals_xi0", classify_xi0(c)},
           {"published_equal", c.published},
           {"sigma", c.sigma},
           {"sigma_hat", c.sigma_hat},
           {"paper_anchor", c.anchor}};
    j["omega_cross_check"] = sc.encoded ? json{{"omega_equal", sc.omega_equal}, {"detail", sc.detail}}
                                        : json{{"omega_equal", nullptr}, {"detail", sc.detail}};
    return j;
  };
  json out;
  const json first = one(matches.front());
  out["pair"] = first["g"].get<std::string>() + "/" + first["s"].get<std::string>();
  out["ranks"] = first["ranks"];
  out["xi_equals_xi0"] = first["xi_equals_xi0"];
  out["ambiguous"] = matches.size() > 1;
  json all = json::array();
  all.push_back(first);
  for (std::size_t k = 1; k < matches.size(); ++k) all.push_back(one(matches[k]));
  out["matches"] = all;
  return out.dump(2);
}

HPolytope omega0_box(int s) {
  if (s < 1) throw std::invalid_argument("omega0_box: s must be positive");
  HPolytope p;
  p.dim = static_cast<std::size_t>(s);
  for (int j = 0; j < s; ++j)
    for (int sign : {1, -1}) {
      RatVec a{std::vector<Rational>(static_cast<std::size_t>(s), Rational(0)), Constraint::kNone};
      a.c[static_cast<std::size_t>(j)] = Rational(sign);
      p.add_inequality(a, Rational(1, 2));
    }
  return p;
}

bool omega0_box_matches(int s, const std::string& label) {
  if (label != "C" && label != "BC") throw std::invalid_argument("omega0_box_matches: label must be C or BC");
  auto box = enumerate_vertices(omega0_box(s)).vertices;
  auto omega = rootsys::omega_vertices(rootsys::build(label, s));
  for (auto& v : box) v.constraint = Constraint::kNone;
  for (auto& v : omega) v.constraint = Constraint::kNone;
  std::sort(box.begin(), box.end());
  std::sort(omega.begin(), omega.end());
  return box == omega;
}

StripPoint StripPoint::make(std::vector<cplx> z) {
  for (const cplx& v : z)
    if (!std::isfinite(v.real()) || !(std::abs(v.imag()) < kQuarterPi))
      throw std::domain_error("strip point needs |Im z| < pi/4");
  return StripPoint{std::move(z)};
}

DiskPoint DiskPoint::make(std::vector<cplx> w) {
  for (const cplx& v : w)
    if (!(std::abs(v) < 1)) throw std::domain_error("disk point needs |w| < 1");
  return DiskPoint{std::move(w)};
}

DiskPoint tanh_map(const StripPoint& p) {
  std::vector<cplx> w;
  for (const cplx& z : p.z) w.push_back(std::tanh(z));
  // Large real parts round to the unit circle.
  for (cplx& v : w)
    if (std::abs(v) >= 1) v /= std::nextafter(std::abs(v), 2.0);
  return DiskPoint::make(std::move(w));
}

StripPoint artanh_map(const DiskPoint& d) {
  std::vector<cplx> z;
  for (const cplx& w : d.w) z.push_back(std::atanh(w));
  return StripPoint::make(std::move(z));
}

namespace {

CMat ipq(int p, int q) {
  CMat m = CMat::Identity(p + q, p + q);
  m.bottomRightCorner(q, q) *= -1;
  return m;
}

CMat swap_form(int n) {
  CMat s = CMat::Zero(2 * n, 2 * n);
  s.topRightCorner(n, n).setIdentity();
  s.bottomLeftCorner(n, n).setIdentity();
  return s;
}

double max_abs(const CMat& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace

double group_residual(const CMat& g, MatrixGroup group, int p) {
  if (g.rows() != g.cols()) throw std::invalid_argument("group_residual: g must be square");
  const int n = static_cast<int>(g.rows());
  switch (group) {
    case MatrixGroup::kNone: return 0;
    case MatrixGroup::kSUpq: {
      if (p < 0 || p > n) throw std::invalid_argument("group_residual: bad block size");
      const CMat J = ipq(p, n - p);
      return std::max(max_abs(g.adjoint() * J * g - J), std::abs(g.determinant() - 1.0));
    }
    case MatrixGroup::kSOstar: {
      if (n % 2) throw std::invalid_argument("group_residual: SO* needs even size");
      const int h = n / 2;
      const CMat J = ipq(h, h), S = swap_form(h);
      return std::max({max_abs(g.adjoint() * J * g - J), std::abs(g.determinant() - 1.0),
                       max_abs(g.transpose() * S * g - S)});
    }
  }
  return 0;
}

bool in_ball(const CMat& Z, MatrixGroup group, double tol) {
  if (group == MatrixGroup::kSOstar && (Z.rows() != Z.cols() || max_abs(Z + Z.transpose()) > 1e-10)) return false;
  CMat M = CMat::Identity(Z.cols(), Z.cols()) - Z.adjoint() * Z;
  Eigen::SelfAdjointEigenSolver<CMat> es(0.5 * (M + M.adjoint()), Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff() > tol;
}

CMat mobius(const CMat& g, const CMat& Z, MatrixGroup group) {
  const long p = Z.rows(), q = Z.cols();
  if (g.rows() != p + q || g.cols() != p + q) throw std::invalid_argument("mobius: block sizes do not match Z");
  if (group != MatrixGroup::kNone && group_residual(g, group, static_cast<int>(p)) > 1e-10)
    throw std::invalid_argument("mobius: g is not in the group");
  const CMat A = g.topLeftCorner(p, p), B = g.topRightCorner(p, q);
  const CMat C = g.bottomLeftCorner(q, p), D = g.bottomRightCorner(q, q);
  const CMat den = C * Z + D;
  Eigen::FullPivLU<CMat> lu(den);
  if (!lu.isInvertible() || std::abs(lu.determinant()) < 1e-14 * std::pow(std::max(1.0, max_abs(den)), static_cast<double>(q)))
    throw std::domain_error("mobius: CZ + D is singular");
  const CMat num = A * Z + B;
  // X = num * den^{-1}  <=>  den^T X^T = num^T
  return den.transpose().fullPivLu().solve(num.transpose()).transpose();
}

CMat random_group_element(MatrixGroup group, int p, int q, std::mt19937_64& rng, double spread) {
  std::normal_distribution<double> N(0, 1);
  auto rnd = [&](int r, int c) {
    CMat m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m(i, j) = cplx(N(rng), N(rng));
    return m;
  };
  auto skew = [&](int n) {
    CMat m = rnd(n, n);
    return CMat(0.5 * (m - m.adjoint()));
  };
  switch (group) {
    case MatrixGroup::kSUpq: {
      const int n = p + q;
      CMat X = CMat::Zero(n, n);
      X.topLeftCorner(p, p) = skew(p);
      X.bottomRightCorner(q, q) = skew(q);
      CMat B = rnd(p, q);
      X.topRightCorner(p, q) = B;
      X.bottomLeftCorner(q, p) = B.adjoint();
      X -= (X.trace() / static_cast<double>(n)) * CMat::Identity(n, n);
      return (spread / std::sqrt(static_cast<double>(n)) * X).exp();
    }
    case MatrixGroup::kSOstar: {
      const int n = p;
      CMat A = skew(n), B = rnd(n, n);
      B = (0.5 * (B - B.transpose())).eval();
      CMat X(2 * n, 2 * n);
      X << A, B, -B.conjugate(), A.conjugate();
      return (spread / std::sqrt(static_cast<double>(n)) * X).exp();
    }
    case MatrixGroup::kNone: break;
  }
  throw std::invalid_argument("random_group_element: a group is required");
}

CMat random_ball_point(MatrixGroup group, int p, int q, std::mt19937_64& rng, double radius) {
  std::normal_distribution<double> N(0, 1);
  std::uniform_real_distribution<double> U(0, 1);
  const int rows = p, cols = group == MatrixGroup::kSOstar ? p : q;
  CMat Z(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) Z(i, j) = cplx(N(rng), N(rng));
  if (group == MatrixGroup::kSOstar) Z = (0.5 * (Z - Z.transpose())).eval();
  Eigen::JacobiSVD<CMat> svd(Z);
  const double s = svd.singularValues()(0);
  return s > 0 ? CMat(Z * (radius * U(rng) / s)) : Z;
}

AppendixCase parse_appendix_case(const std::string& s) {
  if (s == "so_pq") return AppendixCase::kSOpq;
  if (s == "so_nC" || s == "so_nc") return AppendixCase::kSOnC;
  throw std::invalid_argument("unknown appendix case '" + s + "'");
}

const char* to_string(AppendixCase c) { return c == AppendixCase::kSOpq ? "so_pq" : "so_nC"; }

CMat appendix_generator(AppendixCase c, int j, int p_or_n, int q) {
  if (c == AppendixCase::kSOpq) {
    const int p = p_or_n, n = p + q;
    if (p < 1 || p > q) throw std::invalid_argument("SO(p,q) example needs 1 <= p <= q");
    if (j < 0 || j >= p) throw std::out_of_range("generator index");
    CMat e = CMat::Zero(n, n);
    e(j, n - 1 - j) = 1;
    e(n - 1 - j, j) = 1;
    return e;
  }
  const int n = p_or_n;
  if (n < 2) throw std::invalid_argument("SO(n,C) example needs n >= 2");
  if (j < 0 || j >= n / 2) throw std::out_of_range("generator index");
  CMat e = CMat::Zero(2 * n, 2 * n);
  const int a = 2 * j, b = 2 * j + 1, cc = n + 2 * j, d = n + 2 * j + 1;
  e(a, d) = 1;
  e(b, cc) = -1;
  e(d, a) = 1;
  e(cc, b) = -1;
  return e;
}

AppendixReport appendix_orbit_check(AppendixCase c, int p_or_n, int q, const std::vector<cplx>& z) {
  AppendixReport r;
  r.which = c;
  r.z = z;
  StripPoint::make(z);
  int rows = 0, cols = 0, dim = 0;
  if (c == AppendixCase::kSOpq) {
    r.p = p_or_n;
    r.q = q;
    if (r.p < 1 || r.p > q) throw std::invalid_argument("SO(p,q) example needs 1 <= p <= q");
    if (static_cast<int>(z.size()) != r.p) throw std::invalid_argument("SO(p,q) example needs p parameters");
    rows = r.p;
    cols = q;
    dim = r.p + q;
  } else {
    r.n = p_or_n;
    if (r.n < 2) throw std::invalid_argument("SO(n,C) example needs n >= 2");
    if (static_cast<int>(z.size()) != r.n / 2) throw std::invalid_argument("SO(n,C) example needs floor(n/2) parameters");
    rows = cols = r.n;
    dim = 2 * r.n;
  }
  CMat X = CMat::Zero(dim, dim);
  for (std::size_t j = 0; j < z.size(); ++j) X += z[j] * appendix_generator(c, static_cast<int>(j), p_or_n, q);
  const CMat a = X.exp();
  r.a0 = mobius(a, CMat::Zero(rows, cols));

  r.closed_form = CMat::Zero(rows, cols);
  Eigen::VectorXd gram_diag = Eigen::VectorXd::Zero(cols);
  for (std::size_t j = 0; j < z.size(); ++j) {
    const cplx t = std::tanh(z[j]);
    const int jj = static_cast<int>(j);
    if (c == AppendixCase::kSOpq) {
      r.closed_form(jj, q - 1 - jj) = t;
      gram_diag(q - 1 - jj) = std::norm(t);
    } else {
      r.closed_form(2 * jj, 2 * jj + 1) = t;
      r.closed_form(2 * jj + 1, 2 * jj) = -t;
      gram_diag(2 * jj) = gram_diag(2 * jj + 1) = std::norm(t);
    }
  }
  r.residual = max_abs(r.a0 - r.closed_form);
  r.gram_residual = max_abs(r.a0.adjoint() * r.a0 - CMat(gram_diag.cast<cplx>().asDiagonal()));
  r.in_ball = in_ball(r.a0, c == AppendixCase::kSOnC ? MatrixGroup::kSOstar : MatrixGroup::kNone);
  return r;
}

std::string AppendixReport::to_json() const {
  auto mat = [](const CMat& m) {
    json rowsj = json::array();
    for (int i = 0; i < m.rows(); ++i) {
      json row = json::array();
      for (int j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
      rowsj.push_back(row);
    }
    return rowsj;
  };
  json zs = json::array();
  for (const cplx& v : z) zs.push_back({v.real(), v.imag()});
  json j{{"case", crown::hermitian::to_string(which)}, {"z", zs}, {"a0", mat(a0)},
         {"closed_form", mat(closed_form)}, {"residual", residual}, {"gram_residual", gram_residual},
         {"in_ball", in_ball}};
  if (which == AppendixCase::kSOpq) {
    j["p"] = p;
    j["q"] = q;
  } else {
    j["n"] = n;
  }
  return j.dump(2);
}

}  // namespace crown::hermitian
