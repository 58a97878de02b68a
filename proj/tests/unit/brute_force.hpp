#pragma once

// Exhaustive vertex enumeration for small polytopes: every d-subset of the
// constraints is solved by Cramer's rule and kept when feasible.

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "crown/linalg_q.hpp"

namespace crown::test {

using Row = std::vector<Rational>;

inline Rational det(const std::vector<Row>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Rational acc;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<Row> minor;
    for (std::size_t r = 1; r < n; ++r) {
      Row row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    const Rational term = m[0][c] * det(minor);
    acc = c % 2 ? acc - term : acc + term;
  }
  return acc;
}

inline std::optional<Row> cramer(const std::vector<Row>& a, const Row& b) {
  const Rational d = det(a);
  if (d.is_zero()) return std::nullopt;
  Row x(a.size());
  for (std::size_t c = 0; c < a.size(); ++c) {
    auto m = a;
    for (std::size_t r = 0; r < a.size(); ++r) m[r][c] = b[r];
    x[c] = det(m) / d;
  }
  return x;
}

/// Vertices of {x in Q^d : a_i . x <= b_i}.
inline std::set<Row> brute_vertices(const std::vector<Row>& a, const Row& b) {
  const std::size_t m = a.size(), d = a.front().size();
  std::set<Row> out;
  std::vector<std::size_t> pick(d);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
    if (depth == d) {
      std::vector<Row> sub;
      Row rhs;
      for (std::size_t k : pick) {
        sub.push_back(a[k]);
        rhs.push_back(b[k]);
      }
      const auto x = cramer(sub, rhs);
      if (!x) return;
      for (std::size_t i = 0; i < m; ++i) {
        Rational s;
        for (std::size_t j = 0; j < d; ++j) s += a[i][j] * (*x)[j];
        if (b[i] < s) return;
      }
      out.insert(*x);
      return;
    }
    for (std::size_t i = start; i < m; ++i) {
      pick[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
  return out;
}

}  // namespace crown::test
