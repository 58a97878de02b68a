#include "crown/linalg_q.hpp"

#include <stdexcept>

namespace crown {

bool RatVec::is_zero() const {
  for (const auto& x : c)
    if (!x.is_zero()) return false;
  return true;
}

bool RatVec::satisfies_constraint() const {
  if (constraint == Constraint::kNone) return true;
  Rational s = 0;
  for (const auto& x : c) s += x;
  return s.is_zero();
}

std::vector<double> RatVec::to_double() const {
  std::vector<double> out;
  out.reserve(c.size());
  for (const auto& x : c) out.push_back(x.to_double());
  return out;
}

std::string RatVec::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ", ";
    s += c[i].str();
  }
  return s + ")";
}

RatVec RatVec::operator-() const {
  RatVec r = *this;
  for (auto& x : r.c) x = -x;
  return r;
}

RatVec& RatVec::operator+=(const RatVec& o) {
  if (o.size() != size()) throw std::invalid_argument("RatVec: dimension mismatch");
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
  return *this;
}

RatVec& RatVec::operator-=(const RatVec& o) {
  if (o.size() != size()) throw std::invalid_argument("RatVec: dimension mismatch");
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
  return *this;
}

RatVec& RatVec::operator*=(const Rational& s) {
  for (auto& x : c) x *= s;
  return *this;
}

Rational dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

std::vector<std::size_t> rref(RatMatrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t p = r;
    while (p < rows && m[p][col].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Rational inv = Rational(1) / m[r][col];
    m[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][col].is_zero()) continue;
      Rational f = m[i][col];
      for (std::size_t j = col; j < cols; ++j)
        if (!m[r][j].is_zero()) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(col);
    ++r;
  }
  return pivots;
}

std::size_t rank(RatMatrix m) { return rref(m).size(); }

RatMatrix nullspace(const RatMatrix& m, std::size_t cols) {
  RatMatrix a = m;
  auto piv = rref(a);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : piv) is_pivot[p] = true;
  RatMatrix basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RatVec v(cols);
    v[f] = 1;
    for (std::size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -a[k][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatVec> solve(const RatMatrix& m, const RatVec& b) {
  if (m.size() != b.size()) throw std::invalid_argument("solve: dimension mismatch");
  if (m.empty()) return RatVec();
  const std::size_t cols = m[0].size();
  RatMatrix aug = m;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].c.push_back(b[i]);
  auto piv = rref(aug);
  if (!piv.empty() && piv.back() == cols) return std::nullopt;
  RatVec x(cols);
  for (std::size_t k = 0; k < piv.size(); ++k) x[piv[k]] = aug[k][cols];
  return x;
}

std::optional<std::vector<Rational>> coordinates_in(const RatMatrix& basis, const RatVec& v) {
  if (basis.empty()) {
    if (v.is_zero()) return std::vector<Rational>{};
    return std::nullopt;
  }
  // Columns of the system are the basis vectors.
  const std::size_t n = v.size(), k = basis.size();
  RatMatrix m(n, RatVec(k));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j) m[i][j] = basis[j][i];
  auto x = solve(m, v);
  if (!x) return std::nullopt;
  return x->c;
}

}  // namespace crown
