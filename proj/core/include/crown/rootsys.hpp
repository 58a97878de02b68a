#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "crown/linalg_q.hpp"
#include "crown/polytope.hpp"

namespace crown::rootsys {

/// How the coroot H_alpha is attached to a root.
enum class CorootConvention {
  kCanonical,  ///< H = 2 alpha / (alpha, alpha)
  kDual,       ///< H = alpha under the trace form identification
};

const char* to_string(CorootConvention c);
CorootConvention parse_convention(const std::string& s);

/// Position of a point relative to the closed polytope Omega.
enum class Region { kInterior, kBoundary, kExterior };
const char* to_string(Region r);

/// A (possibly non-reduced) root system realized in epsilon coordinates.
/// Points of the Cartan subspace are written in units of pi/2, so the
/// open polytope Omega is {Y : |alpha(Y)| < 1 for all roots}.
struct RootSystem {
  std::string label;     ///< A, B, C, D, BC, E, F, G, or "custom"
  int rank = 0;
  std::size_t ambient_dim = 0;
  Constraint constraint = Constraint::kNone;
  std::vector<RatVec> roots;        ///< all roots, each -alpha following alpha
  std::vector<std::size_t> positive;  ///< indices into roots
  std::vector<std::size_t> simple;    ///< indices into roots, in Dynkin order
  std::vector<int> multiplicity;      ///< per root; m_alpha == m_{-alpha}
  RatMatrix flat_normals;             ///< the Cartan subspace is their common kernel
  RatMatrix flat_basis;               ///< rational basis of the Cartan subspace

  std::string name() const;  ///< e.g. "B3", "E8", "custom3"
  std::size_t size() const { return roots.size(); }
  std::optional<std::size_t> index_of(const RatVec& v) const;
  bool in_flat(const RatVec& v) const;
  bool is_reduced() const;
  /// Half sum of positive roots with multiplicity.
  RatVec rho() const;
  /// Root coordinates in the simple-root basis.
  std::vector<Rational> simple_coordinates(const RatVec& v) const;
};

/// Builds a standard system.  Throws std::invalid_argument for an unknown
/// label or a rank outside the supported range.
RootSystem build(const std::string& label, int rank);
/// Parses names such as "B3", "BC2", "E8", "G2".
RootSystem build_from_name(const std::string& name);
/// Type A_{n-1} roots eps_i - eps_j inside Q^n with no trace condition.
/// This is the A-type subsystem of C_n sharing its ambient space.
RootSystem build_type_a_in(int n);

/// Builds a system from an explicit root list: the Cartan subspace is the
/// span of the roots, positivity comes from a generic linear functional and
/// simple roots are the indecomposable positive roots.
RootSystem from_roots(std::string label, std::vector<RatVec> roots, std::vector<int> multiplicity = {});

/// Overrides multiplicities; keys are root indices, m_{-alpha} follows m_alpha.
void set_multiplicities(RootSystem& sys, const std::map<std::size_t, int>& m);

RatVec coroot(const RootSystem& sys, std::size_t root, CorootConvention conv);
RatVec reflect(const RatVec& v, const RatVec& alpha);

/// Checks closure under negation and under every reflection.
bool is_closed(const RootSystem& sys);

struct PointClass {
  Region region;
  Rational max_abs;  ///< max over roots of |alpha(Y)|
  std::vector<std::size_t> active;  ///< roots attaining alpha(Y) == +1
};

/// Classifies Y (units of pi/2) against Omega.  Throws on dimension mismatch
/// or when Y lies outside the Cartan subspace.
PointClass classify_point(const RootSystem& sys, const RatVec& Y);

/// Weyl group orbit by breadth-first search over simple reflections.
/// Throws std::length_error when the orbit exceeds `cap`.
std::vector<RatVec> weyl_orbit(const RootSystem& sys, const RatVec& X, std::size_t cap = 2'000'000);

/// Closure of Omega as an H-polytope in the coordinates of flat_basis.
HPolytope omega_polytope(const RootSystem& sys);
/// Vertices of Omega-bar (ambient coordinates).
std::vector<RatVec> omega_vertices(const RootSystem& sys);

struct Face {
  std::size_t root;
  std::vector<RatVec> vertices;  ///< ambient coordinates
  bool empty() const { return vertices.empty(); }
};

/// Face {Y in Omega-bar : alpha(Y) = 1}, via exact vertex enumeration.
Face omega_face(const RootSystem& sys, std::size_t root);

std::string to_json(const RootSystem& sys);
RootSystem from_json(const std::string& text);

}  // namespace crown::rootsys
