#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crown/rootsys.hpp"

namespace crown::crownverify {

using rootsys::CorootConvention;
using rootsys::Region;
using rootsys::RootSystem;

enum class Expectation { kOnBoundary, kNotOnBoundary, kUnclaimed };
const char* to_string(Expectation e);

/// Published expectation for pi/4 H_alpha of a simple root (1-based index).
Expectation expected_half_coroot(const RootSystem& sys, int simple_index, std::string* anchor = nullptr);

/// One simple root: where does half its coroot land?
struct HalfCorootClaim {
  int simple_index = 0;  ///< 1-based
  std::size_t root = 0;
  RatVec point;          ///< H_alpha / 2 in units of pi/2
  Region computed = Region::kInterior;
  Expectation expected = Expectation::kUnclaimed;
  bool agrees = true;
  std::string anchor;
};

/// Summary of one Weyl orbit of roots.
struct OrbitSummary {
  std::size_t representative = 0;  ///< root index; a simple root when the orbit contains one
  std::size_t size = 0;
  std::size_t on_boundary = 0;
  std::size_t interior = 0;
  std::size_t exterior = 0;
  std::vector<int> simple_indices;  ///< 1-based simple roots in the orbit
  bool uniform() const { return on_boundary == size || interior == size || exterior == size; }
};

struct HalfCorootCertificate {
  std::string system;
  CorootConvention convention = CorootConvention::kCanonical;
  std::vector<HalfCorootClaim> claims;
  std::vector<OrbitSummary> orbits;
  std::size_t roots_on_boundary = 0;
  std::size_t roots_total = 0;
  /// True when every published claim is reproduced.  Otherwise the
  /// certificate is flagged as a coroot normalization discrepancy.
  bool agrees() const;
  std::string to_json() const;
};

/// Evaluates pi/4 H_alpha against Omega-bar for every root.
HalfCorootCertificate certify_half_coroots(const RootSystem& sys, CorootConvention conv);

struct VertexWitness {
  RatVec vertex;
  std::optional<std::size_t> witness;  ///< root beta with beta(X) = 1 and H_beta/2 on the boundary
  bool relies_on_disputed = false;     ///< witness lies in an orbit with a negative published claim
};

enum class FaceStatus { kPass, kEmptyFace, kFailed };
const char* to_string(FaceStatus s);

struct FaceWitnesses {
  int simple_index = 0;
  std::size_t root = 0;
  FaceStatus status = FaceStatus::kPass;
  std::vector<VertexWitness> vertices;
};

struct WitnessCertificate {
  std::string system;
  CorootConvention convention = CorootConvention::kCanonical;
  std::vector<FaceWitnesses> faces;
  bool passed() const;
  std::string to_json() const;
};

/// For every vertex X of every simple-root face of Omega-bar, finds a root
/// beta with beta(X) = 1 whose half coroot lies on the boundary.
WitnessCertificate certify_boundary_witnesses(const RootSystem& sys, CorootConvention conv);

enum class Relation { kEqual, kStrictSubset, kStrictSuperset, kIncomparable };
const char* to_string(Relation r);

struct PolytopeComparison {
  Relation relation = Relation::kEqual;
  /// When not equal: a point of one closure strictly outside the other.
  std::optional<RatVec> separating_point;
  bool separating_in_first = false;  ///< the point lies in the first closure
};

/// Compares Omega(a) with Omega(b).  Both systems must share the ambient
/// space and the Cartan subspace.
PolytopeComparison compare_crown_polytopes(const RootSystem& a, const RootSystem& b);

struct BcReduction {
  int n = 0;
  std::size_t vertices = 0;
  std::size_t violations = 0;  ///< active roots outside the C_n subsystem
  bool ok() const { return violations == 0; }
};

/// On every vertex of Omega-bar(BC_n), each root with |alpha(X)| = 1 is a root of C_n.
BcReduction certify_bc_reduction(int n);

/// Root index -> Weyl orbit id.
std::vector<std::size_t> root_orbits(const RootSystem& sys);

}  // namespace crown::crownverify
