#pragma once

#include <cstddef>
#include <vector>

#include "crown/linalg_q.hpp"

namespace crown {

/// Exact H-polyhedron {x : A x <= b, E x = f} in Q^dim.
struct HPolytope {
  std::size_t dim = 0;
  RatMatrix A;
  std::vector<Rational> b;
  RatMatrix E;
  std::vector<Rational> f;

  void add_inequality(RatVec a, Rational rhs);
  void add_equality(RatVec e, Rational rhs);
  bool contains(const RatVec& x) const;
  /// True when x satisfies every inequality strictly (and every equality).
  bool contains_strictly(const RatVec& x) const;
};

struct VertexEnumeration {
  std::vector<RatVec> vertices;  // sorted, unique
  std::size_t max_intermediate_rays = 0;
  bool empty() const { return vertices.empty(); }
};

/// Exact double-description vertex enumeration.
/// Throws std::domain_error if the polyhedron is nonempty and unbounded.
VertexEnumeration enumerate_vertices(const HPolytope& p);

}  // namespace crown
