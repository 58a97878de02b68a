#include <random>

#include "brute_force.hpp"
#include "crown/polytope.hpp"
#include "doctest.h"

using namespace crown;

namespace {

std::set<test::Row> as_set(const VertexEnumeration& e) {
  std::set<test::Row> s;
  for (const auto& v : e.vertices) s.insert(v.c);
  return s;
}

}  // namespace

TEST_CASE("unit cube has 2^d vertices") {
  for (std::size_t d = 1; d <= 4; ++d) {
    HPolytope p;
    p.dim = d;
    for (std::size_t i = 0; i < d; ++i) {
      RatVec e(d);
      e[i] = 1;
      p.add_inequality(e, 1);
      p.add_inequality(-e, 1);
    }
    const auto v = enumerate_vertices(p);
    CHECK(v.vertices.size() == (std::size_t{1} << d));
    for (const auto& x : v.vertices) CHECK(p.contains(x));
  }
}

TEST_CASE("random bounded polytopes match exhaustive enumeration") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> coef(-4, 4);
  std::uniform_int_distribution<int> rhs(1, 6);
  for (std::size_t d = 2; d <= 3; ++d)
    for (int trial = 0; trial < 40; ++trial) {
      HPolytope p;
      p.dim = d;
      std::vector<test::Row> a;
      test::Row b;
      // a bounding box keeps the polyhedron bounded
      for (std::size_t i = 0; i < d; ++i) {
        test::Row e(d);
        e[i] = 1;
        a.push_back(e);
        b.push_back(5);
        for (auto& x : e) x = -x;
        a.push_back(e);
        b.push_back(5);
      }
      for (int k = 0; k < 5; ++k) {
        test::Row row(d);
        for (auto& x : row) x = coef(rng);
        a.push_back(row);
        b.push_back(rhs(rng));
      }
      for (std::size_t i = 0; i < a.size(); ++i) p.add_inequality(RatVec(a[i]), b[i]);
      CHECK(as_set(enumerate_vertices(p)) == test::brute_vertices(a, b));
    }
}

TEST_CASE("equalities restrict to a face") {
  // square cut by x + y = 1
  HPolytope p;
  p.dim = 2;
  for (int i = 0; i < 2; ++i) {
    RatVec e(2);
    e[i] = 1;
    p.add_inequality(e, 1);
    p.add_inequality(-e, 1);
  }
  p.add_equality(RatVec{Rational(1), Rational(1)}, 1);
  const auto v = enumerate_vertices(p);
  REQUIRE(v.vertices.size() == 2);
  CHECK(v.vertices[0] == RatVec{Rational(0), Rational(1)});
  CHECK(v.vertices[1] == RatVec{Rational(1), Rational(0)});
}

TEST_CASE("empty and unbounded polyhedra") {
  HPolytope empty;
  empty.dim = 1;
  empty.add_inequality(RatVec{Rational(1)}, -1);
  empty.add_inequality(RatVec{Rational(-1)}, -1);
  CHECK(enumerate_vertices(empty).empty());

  HPolytope ray;
  ray.dim = 2;
  ray.add_inequality(RatVec{Rational(-1), Rational(0)}, 0);
  ray.add_inequality(RatVec{Rational(0), Rational(-1)}, 0);
  CHECK_THROWS_AS(enumerate_vertices(ray), std::domain_error);
}

TEST_CASE("strict containment") {
  HPolytope p;
  p.dim = 1;
  p.add_inequality(RatVec{Rational(1)}, 1);
  p.add_inequality(RatVec{Rational(-1)}, 1);
  CHECK(p.contains(RatVec{Rational(1)}));
  CHECK_FALSE(p.contains_strictly(RatVec{Rational(1)}));
  CHECK(p.contains_strictly(RatVec{Rational(1, 2)}));
}
