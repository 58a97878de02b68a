#include "crown/polytope.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>

namespace crown {

void HPolytope::add_inequality(RatVec a, Rational rhs) {
  if (a.size() != dim) throw std::invalid_argument("HPolytope: inequality dimension mismatch");
  A.push_back(std::move(a));
  b.push_back(rhs);
}

void HPolytope::add_equality(RatVec e, Rational rhs) {
  if (e.size() != dim) throw std::invalid_argument("HPolytope: equality dimension mismatch");
  E.push_back(std::move(e));
  f.push_back(rhs);
}

bool HPolytope::contains(const RatVec& x) const {
  for (std::size_t i = 0; i < E.size(); ++i)
    if (dot(E[i], x) != f[i]) return false;
  for (std::size_t i = 0; i < A.size(); ++i)
    if (dot(A[i], x) > b[i]) return false;
  return true;
}

bool HPolytope::contains_strictly(const RatVec& x) const {
  for (std::size_t i = 0; i < E.size(); ++i)
    if (dot(E[i], x) != f[i]) return false;
  for (std::size_t i = 0; i < A.size(); ++i)
    if (dot(A[i], x) >= b[i]) return false;
  return true;
}

namespace {

using IVec = std::vector<std::int64_t>;

std::int64_t narrow(int128_t v) {
  if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("vertex enumeration: ray overflow");
  return static_cast<std::int64_t>(v);
}

void make_primitive(IVec& v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x < 0 ? -x : x);
  if (g > 1)
    for (auto& x : v) x /= g;
}

IVec to_integer_row(const RatVec& r) {
  std::int64_t l = 1;
  for (const auto& x : r.c) l = narrow(static_cast<int128_t>(l) / std::gcd(l, x.den()) * x.den());
  IVec out(r.size());
  for (std::size_t i = 0; i < r.size(); ++i)
    out[i] = narrow(static_cast<int128_t>(r[i].num()) * (l / r[i].den()));
  make_primitive(out);
  return out;
}

int128_t idot(const IVec& a, const IVec& b) {
  int128_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<int128_t>(a[i]) * b[i];
  return s;
}

struct Ray {
  IVec v;
  std::vector<std::uint64_t> zero;  // bit i set: processed row i is tight
};

int popcount(const std::vector<std::uint64_t>& w) {
  int c = 0;
  for (auto x : w) c += std::popcount(x);
  return c;
}

bool is_subset(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

}  // namespace

VertexEnumeration enumerate_vertices(const HPolytope& p) {
  VertexEnumeration out;

  // Eliminate equalities: x = x0 + N u.
  RatVec x0(p.dim);
  RatMatrix N;
  if (p.E.empty()) {
    for (std::size_t i = 0; i < p.dim; ++i) {
      RatVec e(p.dim);
      e[i] = 1;
      N.push_back(e);
    }
  } else {
    auto sol = solve(p.E, RatVec(p.f));
    if (!sol) return out;
    x0 = *sol;
    N = nullspace(p.E, p.dim);
  }
  const std::size_t dprime = N.size();

  auto lift = [&](const RatVec& u) {
    RatVec x = x0;
    for (std::size_t k = 0; k < dprime; ++k)
      if (!u[k].is_zero()) x += u[k] * N[k];
    return x;
  };

  if (dprime == 0) {
    if (p.contains(x0)) out.vertices.push_back(x0);
    return out;
  }

  // Homogenized cone rows h . (lambda, u) >= 0.
  const std::size_t D = dprime + 1;
  std::vector<IVec> rows;
  {
    IVec h0(D, 0);
    h0[0] = 1;
    rows.push_back(h0);
    std::set<IVec> seen{h0};
    for (std::size_t i = 0; i < p.A.size(); ++i) {
      RatVec h(D);
      h[0] = p.b[i] - dot(p.A[i], x0);
      bool trivial = true;
      for (std::size_t k = 0; k < dprime; ++k) {
        h[k + 1] = -dot(p.A[i], N[k]);
        if (!h[k + 1].is_zero()) trivial = false;
      }
      if (trivial) {
        if (h[0].sign() < 0) return out;  // infeasible constant row
        continue;
      }
      IVec r = to_integer_row(h);
      if (seen.insert(r).second) rows.push_back(std::move(r));
    }
  }
  const std::size_t m = rows.size();
  const std::size_t W = (m + 63) / 64;

  // Initial simplicial cone from D independent rows.
  std::vector<std::size_t> basis_rows;
  {
    RatMatrix acc;
    for (std::size_t i = 0; i < m && basis_rows.size() < D; ++i) {
      RatVec r(D);
      for (std::size_t k = 0; k < D; ++k) r[k] = rows[i][k];
      RatMatrix trial = acc;
      trial.push_back(r);
      if (rank(trial) == trial.size()) {
        acc = std::move(trial);
        basis_rows.push_back(i);
      }
    }
    if (basis_rows.size() < D) throw std::domain_error("vertex enumeration: polyhedron is not pointed (unbounded)");
  }

  std::vector<Ray> rays;
  {
    // Columns of the inverse of the basis-row matrix.
    RatMatrix aug(D, RatVec(2 * D));
    for (std::size_t i = 0; i < D; ++i) {
      for (std::size_t k = 0; k < D; ++k) aug[i][k] = rows[basis_rows[i]][k];
      aug[i][D + i] = 1;
    }
    rref(aug);
    for (std::size_t j = 0; j < D; ++j) {
      RatVec col(D);
      for (std::size_t i = 0; i < D; ++i) col[i] = aug[i][D + j];
      Ray ray;
      ray.v = to_integer_row(col);
      ray.zero.assign(W, 0);
      rays.push_back(std::move(ray));
    }
  }
  std::vector<bool> processed(m, false);
  auto mark = [&](std::size_t row) {
    processed[row] = true;
    for (auto& r : rays)
      if (idot(rows[row], r.v) == 0) r.zero[row / 64] |= (std::uint64_t{1} << (row % 64));
  };
  for (auto i : basis_rows) mark(i);

  for (std::size_t row = 0; row < m; ++row) {
    if (processed[row]) continue;
    std::vector<std::size_t> pos, neg;
    std::vector<int128_t> val(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i) {
      val[i] = idot(rows[row], rays[i].v);
      if (val[i] > 0) pos.push_back(i);
      else if (val[i] < 0) neg.push_back(i);
    }
    std::vector<Ray> next;
    next.reserve(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i)
      if (val[i] >= 0) next.push_back(rays[i]);
    if (!neg.empty() && !pos.empty()) {
      const int need = static_cast<int>(D) - 2;
      std::vector<std::uint64_t> common(W);
      for (auto ip : pos) {
        for (auto in : neg) {
          for (std::size_t w = 0; w < W; ++w) common[w] = rays[ip].zero[w] & rays[in].zero[w];
          if (popcount(common) < need) continue;
          bool adjacent = true;
          for (std::size_t k = 0; k < rays.size() && adjacent; ++k) {
            if (k == ip || k == in) continue;
            if (is_subset(common, rays[k].zero)) adjacent = false;
          }
          if (!adjacent) continue;
          const int128_t a = val[ip], c = -val[in];
          IVec nv(D);
          // Reduce the multipliers first to keep entries small.
          int128_t g = a, h = c;
          while (h != 0) {
            int128_t t = g % h;
            g = h;
            h = t;
          }
          const int128_t ma = a / g, mc = c / g;
          for (std::size_t k = 0; k < D; ++k) nv[k] = narrow(mc * rays[ip].v[k] + ma * rays[in].v[k]);
          make_primitive(nv);
          Ray nr{std::move(nv), common};
          next.push_back(std::move(nr));
        }
      }
    }
    rays = std::move(next);
    processed[row] = true;
    for (auto& r : rays)
      if (idot(rows[row], r.v) == 0) r.zero[row / 64] |= (std::uint64_t{1} << (row % 64));
    out.max_intermediate_rays = std::max(out.max_intermediate_rays, rays.size());
  }

  bool recession = false;
  std::set<RatVec> verts;
  for (const auto& r : rays) {
    if (r.v[0] == 0) {
      recession = true;
      continue;
    }
    RatVec u(dprime);
    for (std::size_t k = 0; k < dprime; ++k) u[k] = Rational(r.v[k + 1], r.v[0]);
    verts.insert(lift(u));
  }
  if (recession && !verts.empty()) throw std::domain_error("vertex enumeration: polyhedron is unbounded");
  out.vertices.assign(verts.begin(), verts.end());
  return out;
}

}  // namespace crown
