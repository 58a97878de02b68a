#include "crown/rootsys.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <deque>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace crown::rootsys {

const char* to_string(CorootConvention c) { return c == CorootConvention::kCanonical ? "canonical" : "dual"; }

CorootConvention parse_convention(const std::string& s) {
  std::string l;
  for (char ch : s) l += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (l == "canonical") return CorootConvention::kCanonical;
  if (l == "dual") return CorootConvention::kDual;
  throw std::invalid_argument("unknown coroot convention '" + s + "'");
}

const char* to_string(Region r) {
  switch (r) {
    case Region::kInterior: return "interior";
    case Region::kBoundary: return "boundary";
    case Region::kExterior: return "exterior";
  }
  return "?";
}

std::string RootSystem::name() const {
  if (label == "custom") return "custom" + std::to_string(rank);
  return label + std::to_string(rank);
}

std::optional<std::size_t> RootSystem::index_of(const RatVec& v) const {
  for (std::size_t i = 0; i < roots.size(); ++i)
    if (roots[i] == v) return i;
  return std::nullopt;
}

bool RootSystem::in_flat(const RatVec& v) const {
  if (v.size() != ambient_dim) return false;
  for (const auto& n : flat_normals)
    if (!dot(n, v).is_zero()) return false;
  return true;
}

bool RootSystem::is_reduced() const {
  for (const auto& a : roots)
    for (const auto& b : roots)
      if (Rational(2) * a == b) return false;
  return true;
}

RatVec RootSystem::rho() const {
  RatVec r(ambient_dim, constraint);
  for (auto i : positive) r += Rational(multiplicity[i], 2) * roots[i];
  return r;
}

std::vector<Rational> RootSystem::simple_coordinates(const RatVec& v) const {
  RatMatrix s;
  for (auto i : simple) s.push_back(roots[i]);
  auto c = coordinates_in(s, v);
  if (!c) throw std::invalid_argument("vector is not in the span of the simple roots");
  return *c;
}

RatVec reflect(const RatVec& v, const RatVec& alpha) {
  Rational f = Rational(2) * dot(v, alpha) / dot(alpha, alpha);
  if (f.is_zero()) return v;
  RatVec out = v;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!alpha[i].is_zero()) out[i] -= f * alpha[i];
  return out;
}

RatVec coroot(const RootSystem& sys, std::size_t root, CorootConvention conv) {
  const RatVec& a = sys.roots.at(root);
  if (conv == CorootConvention::kDual) return a;
  return (Rational(2) / dot(a, a)) * a;
}

namespace {

RatVec unit(std::size_t n, std::size_t i, Rational s = 1, Constraint k = Constraint::kNone) {
  RatVec v(n, k);
  v[i] = s;
  return v;
}

RatVec combo(std::size_t n, std::initializer_list<std::pair<std::size_t, Rational>> terms,
             Constraint k = Constraint::kNone) {
  RatVec v(n, k);
  for (auto& [i, s] : terms) v[i] += s;
  return v;
}

// Orders roots as (alpha_1, -alpha_1, alpha_2, -alpha_2, ...) with positive
// roots sorted by height, then lexicographically.
RootSystem assemble(std::string label, int rank, std::size_t ambient, Constraint constraint,
                    const std::vector<RatVec>& all, const std::vector<RatVec>& simple_roots,
                    std::optional<RatMatrix> flat_basis = std::nullopt) {
  RootSystem sys;
  sys.label = std::move(label);
  sys.rank = rank;
  sys.ambient_dim = ambient;
  sys.constraint = constraint;
  if (simple_roots.size() != static_cast<std::size_t>(rank))
    throw std::invalid_argument("root system: simple root count does not match rank");
  if (crown::rank(RatMatrix(simple_roots)) != simple_roots.size())
    throw std::invalid_argument("root system: simple roots are dependent");

  struct Pos {
    Rational height;
    RatVec v;
  };
  std::vector<Pos> pos;
  std::set<RatVec> seen;
  for (const auto& r : all) {
    if (r.size() != ambient) throw std::invalid_argument("root system: root dimension mismatch");
    if (r.is_zero()) throw std::invalid_argument("root system: zero vector is not a root");
    if (!seen.insert(r).second) throw std::invalid_argument("root system: duplicate root " + r.str());
    auto c = coordinates_in(simple_roots, r);
    if (!c) throw std::invalid_argument("root system: root outside span of simple roots");
    int sgn = 0;
    Rational h = 0;
    for (const auto& x : *c) {
      if (!x.is_integer()) throw std::invalid_argument("root system: non-integral simple coordinates");
      if (x.sign() != 0) {
        if (sgn != 0 && x.sign() != sgn) throw std::invalid_argument("root system: simple roots do not form a base");
        sgn = x.sign();
      }
      h += x;
    }
    if (sgn > 0) pos.push_back({h, r});
  }
  for (const auto& p : pos)
    if (!seen.count(-p.v)) throw std::invalid_argument("root system: not closed under negation");
  if (2 * pos.size() != all.size()) throw std::invalid_argument("root system: positive/negative mismatch");
  std::sort(pos.begin(), pos.end(), [](const Pos& a, const Pos& b) {
    if (a.height != b.height) return a.height < b.height;
    return b.v < a.v;
  });
  for (const auto& p : pos) {
    RatVec v = p.v, w = -p.v;
    v.constraint = w.constraint = constraint;
    sys.positive.push_back(sys.roots.size());
    sys.roots.push_back(v);
    sys.roots.push_back(w);
  }
  for (const auto& s : simple_roots) {
    auto idx = sys.index_of(s);
    if (!idx) throw std::invalid_argument("root system: simple root not in root list");
    sys.simple.push_back(*idx);
  }
  sys.multiplicity.assign(sys.roots.size(), 1);
  sys.flat_basis = flat_basis ? *flat_basis : RatMatrix(simple_roots);
  sys.flat_normals = nullspace(sys.flat_basis, ambient);
  return sys;
}

// +-e_i +- e_j, i < j, in dimension n.
std::vector<RatVec> d_type(std::size_t n) {
  std::vector<RatVec> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) out.push_back(combo(n, {{i, si}, {j, sj}}));
  return out;
}

std::vector<RatVec> type_a_simple(std::size_t n, std::size_t count, Constraint k) {
  std::vector<RatVec> s;
  for (std::size_t i = 0; i < count; ++i) s.push_back(combo(n, {{i, 1}, {i + 1, -1}}, k));
  return s;
}

std::vector<RatVec> e8_roots() {
  std::vector<RatVec> out = d_type(8);
  for (int mask = 0; mask < 256; ++mask) {
    if (std::popcount(static_cast<unsigned>(mask)) % 2) continue;
    RatVec v(8);
    for (int j = 0; j < 8; ++j) v[j] = Rational((mask >> j) & 1 ? -1 : 1, 2);
    out.push_back(v);
  }
  return out;
}

std::vector<RatVec> e8_simple() {
  const Rational h(1, 2);
  std::vector<RatVec> s;
  s.push_back(RatVec({h, -h, -h, -h, -h, -h, -h, h}));
  s.push_back(combo(8, {{0, 1}, {1, 1}}));
  s.push_back(combo(8, {{0, -1}, {1, 1}}));
  for (std::size_t k = 2; k <= 6; ++k) s.push_back(combo(8, {{k - 1, -1}, {k, 1}}));
  return s;
}

}  // namespace

RootSystem build(const std::string& label, int rank) {
  auto need = [&](bool ok) {
    if (!ok) throw std::invalid_argument("unsupported rank " + std::to_string(rank) + " for type " + label);
  };
  const std::size_t n = rank > 0 ? static_cast<std::size_t>(rank) : 0;
  if (label == "A") {
    need(rank >= 1 && rank <= 12);
    const auto k = Constraint::kSumZero;
    std::vector<RatVec> all;
    for (std::size_t i = 0; i <= n; ++i)
      for (std::size_t j = 0; j <= n; ++j)
        if (i != j) all.push_back(combo(n + 1, {{i, 1}, {j, -1}}, k));
    return assemble("A", rank, n + 1, k, all, type_a_simple(n + 1, n, k));
  }
  if (label == "B" || label == "C" || label == "BC") {
    need(rank >= 1 && rank <= 10);
    std::vector<RatVec> all = d_type(n);
    const bool shortr = label != "C", longr = label != "B";
    for (std::size_t i = 0; i < n; ++i) {
      if (shortr) {
        all.push_back(unit(n, i, 1));
        all.push_back(unit(n, i, -1));
      }
      if (longr) {
        all.push_back(unit(n, i, 2));
        all.push_back(unit(n, i, -2));
      }
    }
    auto s = type_a_simple(n, n - 1, Constraint::kNone);
    s.push_back(unit(n, n - 1, label == "C" ? 2 : 1));
    return assemble(label, rank, n, Constraint::kNone, all, s);
  }
  if (label == "D") {
    need(rank >= 3 && rank <= 10);
    auto s = type_a_simple(n, n - 1, Constraint::kNone);
    s.push_back(combo(n, {{n - 2, 1}, {n - 1, 1}}));
    return assemble("D", rank, n, Constraint::kNone, d_type(n), s);
  }
  if (label == "E") {
    need(rank >= 6 && rank <= 8);
    auto all8 = e8_roots();
    auto s8 = e8_simple();
    std::vector<RatVec> s(s8.begin(), s8.begin() + rank);
    if (rank == 8) return assemble("E", 8, 8, Constraint::kNone, all8, s);
    RatMatrix normals = nullspace(RatMatrix(s), 8);
    std::vector<RatVec> all;
    for (const auto& r : all8) {
      bool in = true;
      for (const auto& nv : normals) in = in && dot(nv, r).is_zero();
      if (in) all.push_back(r);
    }
    return assemble("E", rank, 8, Constraint::kNone, all, s);
  }
  if (label == "F") {
    need(rank == 4);
    std::vector<RatVec> all = d_type(4);
    for (std::size_t i = 0; i < 4; ++i) {
      all.push_back(unit(4, i, 1));
      all.push_back(unit(4, i, -1));
    }
    for (int mask = 0; mask < 16; ++mask) {
      RatVec v(4);
      for (int j = 0; j < 4; ++j) v[j] = Rational((mask >> j) & 1 ? -1 : 1, 2);
      all.push_back(v);
    }
    const Rational h(1, 2);
    std::vector<RatVec> s{RatVec({h, -h, -h, -h}), unit(4, 3), combo(4, {{2, 1}, {3, -1}}),
                          combo(4, {{1, 1}, {2, -1}})};
    return assemble("F", 4, 4, Constraint::kNone, all, s);
  }
  if (label == "G") {
    need(rank == 2);
    const auto k = Constraint::kSumZero;
    std::vector<RatVec> all;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        if (i == j) continue;
        all.push_back(combo(3, {{i, 1}, {j, -1}}, k));
      }
    for (std::size_t i = 0; i < 3; ++i)
      for (int sg : {1, -1}) {
        RatVec v(3, k);
        for (std::size_t j = 0; j < 3; ++j) v[j] = Rational(j == i ? 2 * sg : -sg);
        all.push_back(v);
      }
    std::vector<RatVec> s{combo(3, {{0, 1}, {1, -1}}, k), RatVec({-2, 1, 1})};
    s[1].constraint = k;
    return assemble("G", 2, 3, k, all, s);
  }
  throw std::invalid_argument("unknown root system type '" + label + "'");
}

RootSystem build_from_name(const std::string& name) {
  std::size_t i = 0;
  while (i < name.size() && std::isalpha(static_cast<unsigned char>(name[i]))) ++i;
  std::string label = name.substr(0, i);
  for (auto& ch : label) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  std::string digits = name.substr(i);
  if (label.empty() || digits.empty() ||
      !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw std::invalid_argument("cannot parse root system name '" + name + "'");
  return build(label, std::stoi(digits));
}

RootSystem build_type_a_in(int n) {
  if (n < 2 || n > 12) throw std::invalid_argument("build_type_a_in: unsupported n");
  const std::size_t m = static_cast<std::size_t>(n);
  std::vector<RatVec> all;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (i != j) all.push_back(combo(m, {{i, 1}, {j, -1}}));
  RatMatrix full;
  for (std::size_t i = 0; i < m; ++i) full.push_back(unit(m, i));
  return assemble("A", n - 1, m, Constraint::kNone, all, type_a_simple(m, m - 1, Constraint::kNone), full);
}

RootSystem from_roots(std::string label, std::vector<RatVec> roots, std::vector<int> multiplicity) {
  if (roots.empty()) throw std::invalid_argument("from_roots: empty root list");
  const std::size_t n = roots[0].size();
  auto lex_positive = [](const RatVec& v) {
    for (const auto& x : v.c)
      if (!x.is_zero()) return x.sign() > 0;
    return false;
  };
  std::vector<RatVec> pos;
  for (const auto& r : roots)
    if (lex_positive(r)) pos.push_back(r);
  std::set<RatVec> pset(pos.begin(), pos.end());
  std::vector<RatVec> simple;
  for (const auto& a : pos) {
    bool decomposable = false;
    for (const auto& b : pos)
      if (b != a && pset.count(a - b)) decomposable = true;
    if (!decomposable) simple.push_back(a);
  }
  RatMatrix span = roots;
  std::size_t r = crown::rank(span);
  Constraint k = roots[0].constraint;
  RootSystem sys = assemble(std::move(label), static_cast<int>(r), n, k, roots, simple);
  if (!multiplicity.empty()) {
    if (multiplicity.size() != roots.size()) throw std::invalid_argument("from_roots: multiplicity count mismatch");
    std::map<std::size_t, int> m;
    for (std::size_t i = 0; i < roots.size(); ++i) m[*sys.index_of(roots[i])] = multiplicity[i];
    set_multiplicities(sys, m);
  }
  if (!is_closed(sys)) throw std::invalid_argument("from_roots: list is not closed under reflections");
  return sys;
}

void set_multiplicities(RootSystem& sys, const std::map<std::size_t, int>& m) {
  for (const auto& [i, v] : m) {
    if (i >= sys.roots.size()) throw std::out_of_range("set_multiplicities: root index");
    if (v < 0) throw std::invalid_argument("set_multiplicities: negative multiplicity");
    auto neg = *sys.index_of(-sys.roots[i]);
    auto it = m.find(neg);
    if (it != m.end() && it->second != v) throw std::invalid_argument("set_multiplicities: m_alpha != m_-alpha");
    sys.multiplicity[i] = sys.multiplicity[neg] = v;
  }
}

bool is_closed(const RootSystem& sys) {
  std::set<RatVec> all(sys.roots.begin(), sys.roots.end());
  for (const auto& a : sys.roots) {
    if (!all.count(-a)) return false;
    for (const auto& b : sys.roots)
      if (!all.count(reflect(b, a))) return false;
  }
  return true;
}

PointClass classify_point(const RootSystem& sys, const RatVec& Y) {
  if (Y.size() != sys.ambient_dim) throw std::invalid_argument("classify_point: dimension mismatch");
  if (!sys.in_flat(Y)) throw std::invalid_argument("classify_point: point " + Y.str() + " is not in the Cartan subspace");
  PointClass pc{Region::kInterior, 0, {}};
  for (std::size_t i = 0; i < sys.roots.size(); ++i) {
    Rational v = dot(sys.roots[i], Y);
    if (v == Rational(1)) pc.active.push_back(i);
    if (abs(v) > pc.max_abs) pc.max_abs = abs(v);
  }
  if (pc.max_abs < Rational(1)) pc.region = Region::kInterior;
  else if (pc.max_abs == Rational(1)) pc.region = Region::kBoundary;
  else pc.region = Region::kExterior;
  return pc;
}

std::vector<RatVec> weyl_orbit(const RootSystem& sys, const RatVec& X, std::size_t cap) {
  if (X.size() != sys.ambient_dim) throw std::invalid_argument("weyl_orbit: dimension mismatch");
  std::set<RatVec> seen{X};
  std::deque<RatVec> queue{X};
  std::vector<RatVec> out{X};
  while (!queue.empty()) {
    RatVec v = std::move(queue.front());
    queue.pop_front();
    for (auto s : sys.simple) {
      RatVec w = reflect(v, sys.roots[s]);
      if (seen.insert(w).second) {
        if (seen.size() > cap)
          throw std::length_error("weyl_orbit: orbit exceeds cap of " + std::to_string(cap));
        out.push_back(w);
        queue.push_back(std::move(w));
      }
    }
  }
  return out;
}

HPolytope omega_polytope(const RootSystem& sys) {
  HPolytope p;
  p.dim = sys.flat_basis.size();
  for (auto i : sys.positive) {
    RatVec a(p.dim);
    for (std::size_t k = 0; k < p.dim; ++k) a[k] = dot(sys.roots[i], sys.flat_basis[k]);
    p.add_inequality(a, 1);
    p.add_inequality(-a, 1);
  }
  return p;
}

namespace {

RatVec to_ambient(const RootSystem& sys, const RatVec& t) {
  RatVec y(sys.ambient_dim, sys.constraint);
  for (std::size_t k = 0; k < t.size(); ++k)
    if (!t[k].is_zero()) y += t[k] * sys.flat_basis[k];
  y.constraint = sys.constraint;
  return y;
}

}  // namespace

std::vector<RatVec> omega_vertices(const RootSystem& sys) {
  auto ve = enumerate_vertices(omega_polytope(sys));
  std::vector<RatVec> out;
  for (const auto& t : ve.vertices) out.push_back(to_ambient(sys, t));
  std::sort(out.begin(), out.end());
  return out;
}

Face omega_face(const RootSystem& sys, std::size_t root) {
  if (root >= sys.roots.size()) throw std::out_of_range("omega_face: root index");
  HPolytope p = omega_polytope(sys);
  RatVec e(p.dim);
  for (std::size_t k = 0; k < p.dim; ++k) e[k] = dot(sys.roots[root], sys.flat_basis[k]);
  p.add_equality(e, 1);
  auto ve = enumerate_vertices(p);
  Face f{root, {}};
  for (const auto& t : ve.vertices) f.vertices.push_back(to_ambient(sys, t));
  std::sort(f.vertices.begin(), f.vertices.end());
  return f;
}

std::string to_json(const RootSystem& sys) {
  nlohmann::json j;
  j["label"] = sys.label;
  j["rank"] = sys.rank;
  j["ambient_dim"] = sys.ambient_dim;
  j["constraint"] = sys.constraint == Constraint::kSumZero ? "sum_zero" : "none";
  auto& roots = j["roots"] = nlohmann::json::array();
  for (const auto& r : sys.roots) {
    nlohmann::json v = nlohmann::json::array();
    for (const auto& x : r.c) v.push_back(x.str());
    roots.push_back(v);
  }
  j["multiplicities"] = sys.multiplicity;
  j["simple"] = sys.simple;
  return j.dump();
}

RootSystem from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("root system json: ") + e.what());
  }
  try {
    std::string label = j.at("label").get<std::string>();
    const Constraint k = j.value("constraint", std::string("none")) == "sum_zero" ? Constraint::kSumZero : Constraint::kNone;
    std::vector<RatVec> roots;
    for (const auto& r : j.at("roots")) {
      RatVec v;
      v.constraint = k;
      for (const auto& x : r) v.c.push_back(x.is_string() ? Rational::parse(x.get<std::string>()) : Rational(x.get<std::int64_t>()));
      if (!v.satisfies_constraint()) throw std::invalid_argument("root violates its coordinate constraint");
      roots.push_back(std::move(v));
    }
    if (roots.empty()) throw std::invalid_argument("empty root list");
    std::vector<int> mult;
    if (j.contains("multiplicities")) mult = j.at("multiplicities").get<std::vector<int>>();
    RootSystem sys;
    if (j.contains("simple")) {
      std::vector<RatVec> simple;
      for (auto i : j.at("simple").get<std::vector<std::size_t>>()) simple.push_back(roots.at(i));
      sys = assemble(label, static_cast<int>(simple.size()), roots[0].size(), k, roots, simple);
      if (!mult.empty()) {
        if (mult.size() != roots.size()) throw std::invalid_argument("multiplicity count mismatch");
        std::map<std::size_t, int> m;
        for (std::size_t i = 0; i < roots.size(); ++i) m[*sys.index_of(roots[i])] = mult[i];
        set_multiplicities(sys, m);
      }
      if (!is_closed(sys)) throw std::invalid_argument("root list is not closed under reflections");
    } else {
      sys = from_roots(label, roots, mult);
    }
    return sys;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("root system json: ") + e.what());
  }
}

}  // namespace crown::rootsys
