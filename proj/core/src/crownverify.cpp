#include "crown/crownverify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "embedded.hpp"
#include "json.hpp"

namespace crown::crownverify {

using nlohmann::json;
using rootsys::classify_point;
using rootsys::coroot;

const char* to_string(Expectation e) {
  switch (e) {
    case Expectation::kOnBoundary: return "on_boundary";
    case Expectation::kNotOnBoundary: return "not_on_boundary";
    case Expectation::kUnclaimed: return "unclaimed";
  }
  return "?";
}

const char* to_string(FaceStatus s) {
  switch (s) {
    case FaceStatus::kPass: return "pass";
    case FaceStatus::kEmptyFace: return "empty_face";
    case FaceStatus::kFailed: return "failed";
  }
  return "?";
}

const char* to_string(Relation r) {
  switch (r) {
    case Relation::kEqual: return "equal";
    case Relation::kStrictSubset: return "strict_subset";
    case Relation::kStrictSuperset: return "strict_superset";
    case Relation::kIncomparable: return "incomparable";
  }
  return "?";
}

namespace {

Expectation parse_expectation(const std::string& s) {
  if (s == "on_boundary") return Expectation::kOnBoundary;
  if (s == "not_on_boundary") return Expectation::kNotOnBoundary;
  if (s == "unclaimed") return Expectation::kUnclaimed;
  throw std::runtime_error("boundary expectations: unknown value " + s);
}

const json& expectations() {
  static const json table = json::parse(detail::embedded_file("boundary_expectations.json"));
  return table;
}

json vec_json(const RatVec& v) {
  json a = json::array();
  for (const auto& x : v.c) a.push_back(x.str());
  return a;
}

}  // namespace

Expectation expected_half_coroot(const RootSystem& sys, int simple_index, std::string* anchor) {
  for (const auto& row : expectations().at("systems")) {
    if (row.at("label").get<std::string>() != sys.label) continue;
    if (anchor) *anchor = row.value("anchor", std::string());
    Expectation e = parse_expectation(row.at("default").get<std::string>());
    if (row.contains("overrides")) {
      for (const auto& o : row.at("overrides")) {
        int idx = o.at("simple").is_string() && o.at("simple").get<std::string>() == "last" ? sys.rank
                                                                                            : o.at("simple").get<int>();
        if (idx == simple_index) e = parse_expectation(o.at("expected").get<std::string>());
      }
    }
    return e;
  }
  return Expectation::kUnclaimed;
}

std::vector<std::size_t> root_orbits(const RootSystem& sys) {
  std::vector<std::size_t> id(sys.size(), SIZE_MAX);
  std::size_t next = 0;
  for (std::size_t i = 0; i < sys.size(); ++i) {
    if (id[i] != SIZE_MAX) continue;
    for (const auto& v : rootsys::weyl_orbit(sys, sys.roots[i])) id[*sys.index_of(v)] = next;
    ++next;
  }
  return id;
}

bool HalfCorootCertificate::agrees() const {
  return std::all_of(claims.begin(), claims.end(), [](const auto& c) { return c.agrees; });
}

HalfCorootCertificate certify_half_coroots(const RootSystem& sys, CorootConvention conv) {
  HalfCorootCertificate cert;
  cert.system = sys.name();
  cert.convention = conv;
  cert.roots_total = sys.size();
  const auto orbit = root_orbits(sys);
  std::map<std::size_t, OrbitSummary> orbits;
  std::vector<Region> region(sys.size());
  for (std::size_t i = 0; i < sys.size(); ++i) {
    RatVec y = Rational(1, 2) * coroot(sys, i, conv);
    region[i] = classify_point(sys, y).region;
    auto& o = orbits[orbit[i]];
    if (o.size == 0) o.representative = i;
    ++o.size;
    if (region[i] == Region::kBoundary) {
      ++o.on_boundary;
      ++cert.roots_on_boundary;
    } else if (region[i] == Region::kInterior) {
      ++o.interior;
    } else {
      ++o.exterior;
    }
  }
  for (std::size_t k = 0; k < sys.simple.size(); ++k) {
    const std::size_t r = sys.simple[k];
    HalfCorootClaim c;
    c.simple_index = static_cast<int>(k + 1);
    c.root = r;
    c.point = Rational(1, 2) * coroot(sys, r, conv);
    c.computed = region[r];
    c.expected = expected_half_coroot(sys, c.simple_index, &c.anchor);
    if (c.expected == Expectation::kOnBoundary) c.agrees = c.computed == Region::kBoundary;
    else if (c.expected == Expectation::kNotOnBoundary) c.agrees = c.computed != Region::kBoundary;
    cert.claims.push_back(c);
    auto& o = orbits[orbit[r]];
    if (o.simple_indices.empty()) o.representative = r;
    o.simple_indices.push_back(c.simple_index);
  }
  for (auto& [id, o] : orbits) cert.orbits.push_back(o);
  return cert;
}

std::string HalfCorootCertificate::to_json() const {
  json j;
  j["system"] = system;
  j["convention"] = rootsys::to_string(convention);
  j["roots_total"] = roots_total;
  j["roots_on_boundary"] = roots_on_boundary;
  j["status"] = agrees() ? "pass" : "flagged";
  auto& cl = j["claims"] = json::array();
  for (const auto& c : claims) {
    cl.push_back({{"simple_index", c.simple_index},
                  {"half_coroot", vec_json(c.point)},
                  {"computed", rootsys::to_string(c.computed)},
                  {"expected", to_string(c.expected)},
                  {"agrees", c.agrees},
                  {"anchor", c.anchor}});
  }
  auto& ob = j["orbits"] = json::array();
  for (const auto& o : orbits) {
    ob.push_back({{"representative", o.representative},
                  {"size", o.size},
                  {"on_boundary", o.on_boundary},
                  {"interior", o.interior},
                  {"exterior", o.exterior},
                  {"simple_indices", o.simple_indices}});
  }
  return j.dump();
}

bool WitnessCertificate::passed() const {
  return std::none_of(faces.begin(), faces.end(), [](const auto& f) { return f.status == FaceStatus::kFailed; });
}

WitnessCertificate certify_boundary_witnesses(const RootSystem& sys, CorootConvention conv) {
  WitnessCertificate cert;
  cert.system = sys.name();
  cert.convention = conv;

  const auto orbit = root_orbits(sys);
  std::set<std::size_t> disputed_orbits;
  for (std::size_t k = 0; k < sys.simple.size(); ++k)
    if (expected_half_coroot(sys, static_cast<int>(k + 1)) == Expectation::kNotOnBoundary)
      disputed_orbits.insert(orbit[sys.simple[k]]);

  std::vector<bool> boundary(sys.size());
  for (std::size_t i = 0; i < sys.size(); ++i)
    boundary[i] = classify_point(sys, Rational(1, 2) * coroot(sys, i, conv)).region == Region::kBoundary;

  // Preference: undisputed first, then simple roots, negated simple roots, the rest.
  std::vector<std::size_t> order(sys.size());
  std::vector<int> rank_of(sys.size(), 2);
  std::vector<std::size_t> sub(sys.size());
  for (std::size_t i = 0; i < sys.size(); ++i) sub[i] = i;
  for (std::size_t k = 0; k < sys.simple.size(); ++k) {
    rank_of[sys.simple[k]] = 0;
    sub[sys.simple[k]] = k;
    auto neg = *sys.index_of(-sys.roots[sys.simple[k]]);
    rank_of[neg] = 1;
    sub[neg] = k;
  }
  for (std::size_t i = 0; i < sys.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    bool da = disputed_orbits.count(orbit[a]) > 0, db = disputed_orbits.count(orbit[b]) > 0;
    if (da != db) return !da;
    if (rank_of[a] != rank_of[b]) return rank_of[a] < rank_of[b];
    return sub[a] < sub[b];
  });

  for (std::size_t k = 0; k < sys.simple.size(); ++k) {
    FaceWitnesses fw;
    fw.simple_index = static_cast<int>(k + 1);
    fw.root = sys.simple[k];
    auto face = rootsys::omega_face(sys, fw.root);
    if (face.empty()) {
      fw.status = FaceStatus::kEmptyFace;
      cert.faces.push_back(std::move(fw));
      continue;
    }
    for (const auto& x : face.vertices) {
      VertexWitness vw;
      vw.vertex = x;
      for (auto i : order) {
        if (!boundary[i] || dot(sys.roots[i], x) != Rational(1)) continue;
        vw.witness = i;
        vw.relies_on_disputed = disputed_orbits.count(orbit[i]) > 0;
        break;
      }
      if (!vw.witness) fw.status = FaceStatus::kFailed;
      fw.vertices.push_back(std::move(vw));
    }
    cert.faces.push_back(std::move(fw));
  }
  return cert;
}

std::string WitnessCertificate::to_json() const {
  json j;
  j["system"] = system;
  j["convention"] = rootsys::to_string(convention);
  j["status"] = passed() ? "pass" : "fail";
  auto& fs = j["faces"] = json::array();
  for (const auto& f : faces) {
    json jf{{"simple_index", f.simple_index}, {"status", to_string(f.status)}, {"vertex_count", f.vertices.size()}};
    auto& vs = jf["vertices"] = json::array();
    for (const auto& v : f.vertices) {
      json jv{{"vertex", vec_json(v.vertex)}};
      if (v.witness) jv["witness_root"] = *v.witness;
      else jv["witness_root"] = nullptr;
      jv["relies_on_disputed"] = v.relies_on_disputed;
      vs.push_back(jv);
    }
    fs.push_back(jf);
  }
  return j.dump();
}

namespace {

void require_same_space(const RootSystem& a, const RootSystem& b) {
  if (a.ambient_dim != b.ambient_dim) throw std::invalid_argument("compare: ambient dimensions differ");
  if (a.flat_basis.size() != b.flat_basis.size()) throw std::invalid_argument("compare: Cartan subspaces differ");
  for (const auto& v : a.flat_basis)
    if (!b.in_flat(v)) throw std::invalid_argument("compare: Cartan subspaces differ");
}

// Lineality space of Omega-bar(s): flat vectors killed by every root.
RatMatrix lineality(const RootSystem& s) {
  RatMatrix m = s.flat_normals;
  for (auto i : s.positive) m.push_back(s.roots[i]);
  return nullspace(m, s.ambient_dim);
}

// Vertices of Omega-bar(s) intersected with the orthogonal complement of its lineality.
std::vector<RatVec> core_vertices(const RootSystem& s, const RatMatrix& lin) {
  HPolytope p;
  p.dim = s.ambient_dim;
  for (auto i : s.positive) {
    p.add_inequality(s.roots[i], 1);
    p.add_inequality(-s.roots[i], 1);
  }
  for (const auto& n : s.flat_normals) p.add_equality(n, 0);
  for (const auto& d : lin) p.add_equality(d, 0);
  return enumerate_vertices(p).vertices;
}

// A point of closure(a) strictly outside closure(b), if any.
std::optional<RatVec> outside_point(const RootSystem& a, const RootSystem& b) {
  RatMatrix lin = lineality(a);
  for (const auto& d : lin) {
    for (auto i : b.positive) {
      Rational v = dot(b.roots[i], d);
      if (v.is_zero()) continue;
      return (Rational(2) / v) * d;
    }
  }
  for (const auto& x : core_vertices(a, lin)) {
    for (auto i : b.positive)
      if (abs(dot(b.roots[i], x)) > Rational(1)) return x;
  }
  return std::nullopt;
}

}  // namespace

PolytopeComparison compare_crown_polytopes(const RootSystem& a, const RootSystem& b) {
  require_same_space(a, b);
  auto a_out = outside_point(a, b);  // witnesses a not inside b
  auto b_out = outside_point(b, a);
  PolytopeComparison c;
  if (!a_out && !b_out) {
    c.relation = Relation::kEqual;
  } else if (!a_out) {
    c.relation = Relation::kStrictSubset;
    c.separating_point = b_out;
    c.separating_in_first = false;
  } else if (!b_out) {
    c.relation = Relation::kStrictSuperset;
    c.separating_point = a_out;
    c.separating_in_first = true;
  } else {
    c.relation = Relation::kIncomparable;
    c.separating_point = a_out;
    c.separating_in_first = true;
  }
  return c;
}

BcReduction certify_bc_reduction(int n) {
  RootSystem bc = rootsys::build("BC", n);
  RootSystem c = rootsys::build("C", n);
  BcReduction r;
  r.n = n;
  auto verts = rootsys::omega_vertices(bc);
  r.vertices = verts.size();
  for (const auto& x : verts) {
    for (const auto& alpha : bc.roots) {
      if (abs(dot(alpha, x)) != Rational(1)) continue;
      if (!c.index_of(alpha)) ++r.violations;
    }
  }
  return r;
}

}  // namespace crown::crownverify
