#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crown/rational.hpp"

namespace crown {

/// Linear side condition attached to a coordinate vector.
enum class Constraint { kNone, kSumZero };

/// Exact rational coordinate vector in epsilon coordinates.
struct RatVec {
  std::vector<Rational> c;
  Constraint constraint = Constraint::kNone;

  RatVec() = default;
  explicit RatVec(std::size_t n, Constraint k = Constraint::kNone) : c(n), constraint(k) {}
  RatVec(std::vector<Rational> v, Constraint k = Constraint::kNone) : c(std::move(v)), constraint(k) {}
  RatVec(std::initializer_list<Rational> v) : c(v) {}

  std::size_t size() const { return c.size(); }
  Rational& operator[](std::size_t i) { return c[i]; }
  const Rational& operator[](std::size_t i) const { return c[i]; }

  bool is_zero() const;
  bool satisfies_constraint() const;
  std::vector<double> to_double() const;
  std::string str() const;

  RatVec operator-() const;
  RatVec& operator+=(const RatVec& o);
  RatVec& operator-=(const RatVec& o);
  RatVec& operator*=(const Rational& s);
  friend RatVec operator+(RatVec a, const RatVec& b) { return a += b; }
  friend RatVec operator-(RatVec a, const RatVec& b) { return a -= b; }
  friend RatVec operator*(const Rational& s, RatVec a) { return a *= s; }

  friend bool operator==(const RatVec& a, const RatVec& b) { return a.c == b.c; }
  friend bool operator<(const RatVec& a, const RatVec& b) { return a.c < b.c; }
};

Rational dot(const RatVec& a, const RatVec& b);

using RatMatrix = std::vector<RatVec>;  // row-major, every row the same length

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& m);
std::size_t rank(RatMatrix m);
/// Basis of {x : m x = 0}; `cols` is the number of columns when m is empty.
RatMatrix nullspace(const RatMatrix& m, std::size_t cols);
/// Coefficients c with sum_k c_k basis[k] == v, or nullopt if v is not in the span.
/// The basis must be linearly independent.
std::optional<std::vector<Rational>> coordinates_in(const RatMatrix& basis, const RatVec& v);
/// Solves m x = b; nullopt when inconsistent.  A particular solution is returned.
std::optional<RatVec> solve(const RatMatrix& m, const RatVec& b);

}  // namespace crown
