#pragma once

// Brute-force reference implementations used to cross-check the library.
// They share only the number types with the code under test.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "mukai/exactmath.hpp"
#include "mukai/polyhedra.hpp"

namespace oracle {

using mukai::Integer;
using mukai::IntVector;
using mukai::Rational;
using mukai::RatVector;
using mukai::operator+;
using mukai::operator-;
using mukai::operator*;

// Gauss-Jordan on a square system; nothing when singular.
inline std::optional<RatVector> solve_square(std::vector<RatVector> a, RatVector b) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  RatVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

inline Rational dot(const RatVector& a, const RatVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline bool satisfies(const std::vector<mukai::Halfspace>& hs, const RatVector& x) {
  for (const auto& h : hs)
    if (dot(h.normal, x) < h.offset) return false;
  return true;
}

inline void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t from) {
    if (pos == k) {
      f(idx);
      return;
    }
    for (std::size_t i = from; i + (k - pos) <= n; ++i) {
      idx[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);
}

// Vertices of a bounded polyhedron: every feasible point where d linearly
// independent constraints are tight.
inline std::vector<RatVector> vertices(std::size_t d, const std::vector<mukai::Halfspace>& hs) {
  std::set<RatVector> out;
  if (d == 0) return {RatVector{}};
  for_each_subset(hs.size(), d, [&](const std::vector<std::size_t>& s) {
    std::vector<RatVector> a;
    RatVector b;
    for (auto i : s) {
      a.push_back(hs[i].normal);
      b.push_back(hs[i].offset);
    }
    auto x = solve_square(a, b);
    if (x && satisfies(hs, *x)) out.insert(*x);
  });
  return {out.begin(), out.end()};
}

inline RatVector to_rat(const IntVector& v) { return RatVector(v.begin(), v.end()); }

// Every integer point in the box [lo, hi] satisfying the halfspaces.
inline std::vector<IntVector> box_scan(const IntVector& lo, const IntVector& hi,
                                       const std::function<bool(const IntVector&)>& keep) {
  std::vector<IntVector> out;
  const std::size_t d = lo.size();
  IntVector x = lo;
  if (d == 0) return keep(x) ? std::vector<IntVector>{x} : std::vector<IntVector>{};
  for (std::size_t i = 0; i < d; ++i)
    if (lo[i] > hi[i]) return out;
  while (true) {
    if (keep(x)) out.push_back(x);
    std::size_t i = d;
    while (i > 0) {
      --i;
      if (x[i] < hi[i]) {
        ++x[i];
        for (std::size_t j = i + 1; j < d; ++j) x[j] = lo[j];
        break;
      }
      if (i == 0) return out;
    }
  }
}

inline std::vector<IntVector> lattice_points(std::size_t d, const std::vector<mukai::Halfspace>& hs) {
  auto verts = vertices(d, hs);
  if (verts.empty()) return {};
  IntVector lo(d), hi(d);
  for (std::size_t i = 0; i < d; ++i) {
    Rational mn = verts[0][i], mx = verts[0][i];
    for (const auto& v : verts) {
      mn = std::min(mn, v[i]);
      mx = std::max(mx, v[i]);
    }
    lo[i] = mukai::ceil(mn);
    hi[i] = mukai::floor(mx);
  }
  return box_scan(lo, hi, [&](const IntVector& x) { return satisfies(hs, to_rat(x)); });
}

inline bool in_cone(const std::vector<IntVector>& facets, const std::vector<IntVector>& equations, const IntVector& x) {
  for (const auto& f : facets)
    if (mukai::dot(f, x) < 0) return false;
  for (const auto& e : equations)
    if (mukai::dot(e, x) != 0) return false;
  return true;
}

// Lattice points of cone ∩ [-bound, bound]^d that are not nonnegative integer
// combinations of `generators`. Each x is peeled back to 0 through
// x - g in the cone; recursion ends because the facet sum is positive on a
// pointed cone minus 0.
inline std::vector<IntVector> ungenerated_points(const mukai::Cone& c, const std::vector<IntVector>& generators, int bound) {
  const std::size_t d = c.ambient_dim();
  IntVector lo(d, -bound), hi(d, bound);
  auto pts = box_scan(lo, hi, [&](const IntVector& x) { return in_cone(c.facets(), c.equations(), x); });
  std::map<IntVector, bool> memo;
  std::function<bool(const IntVector&)> reachable = [&](const IntVector& x) {
    if (mukai::is_zero(x)) return true;
    if (auto it = memo.find(x); it != memo.end()) return it->second;
    bool ok = false;
    for (const auto& g : generators) {
      IntVector y = x - g;
      if (in_cone(c.facets(), c.equations(), y) && reachable(y)) {
        ok = true;
        break;
      }
    }
    return memo[x] = ok;
  };
  std::vector<IntVector> missing;
  for (const auto& x : pts)
    if (!reachable(x)) missing.push_back(x);
  return missing;
}

// x in the cone is reducible when x = a + b with a, b nonzero lattice points
// of the cone; a ranges over the bounded set cone ∩ (x - cone).
inline bool reducible(const mukai::Cone& c, const IntVector& x) {
  std::vector<mukai::Halfspace> hs;
  for (const auto& f : c.facets()) {
    hs.push_back({to_rat(f), 0});
    hs.push_back({to_rat(-f), -Rational(mukai::dot(f, x))});
  }
  for (const auto& e : c.equations()) {
    hs.push_back({to_rat(e), 0});
    hs.push_back({to_rat(-e), 0});
  }
  for (const auto& a : lattice_points(c.ambient_dim(), hs))
    if (!mukai::is_zero(a) && a != x) return true;
  return false;
}

// All ways to write target as a multiset of elements of `parts`, returned as
// sorted index lists. Plain depth-first enumeration without memoisation.
inline std::vector<std::vector<std::size_t>> multiset_sums(const std::vector<IntVector>& parts, const IntVector& target,
                                                            std::size_t max_parts) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  std::function<void(const IntVector&, std::size_t)> rec = [&](const IntVector& rest, std::size_t from) {
    if (mukai::is_zero(rest)) {
      out.push_back(cur);
      return;
    }
    if (cur.size() == max_parts) return;
    for (std::size_t i = from; i < parts.size(); ++i) {
      IntVector next = rest - parts[i];
      // classes here are nonnegative vectors, so a negative entry is a dead end
      if (std::any_of(next.begin(), next.end(), [](const Integer& v) { return v < 0; })) continue;
      cur.push_back(i);
      rec(next, i);
      cur.pop_back();
    }
  };
  rec(target, 0);
  return out;
}

// max sum(a) over {a >= 0 : sum a_i g_i = t} by scanning basic feasible
// solutions. Nothing when infeasible.
inline std::optional<Rational> equality_lp_by_bases(const std::vector<IntVector>& g, const IntVector& t) {
  const std::size_t m = t.size();
  // reduce to independent rows of the generator matrix
  std::vector<RatVector> rows;
  RatVector rhs;
  {
    std::vector<RatVector> full(m, RatVector(g.size()));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < g.size(); ++j) full[i][j] = g[j][i];
    RatVector b = to_rat(t);
    std::vector<RatVector> ech;
    for (std::size_t i = 0; i < m; ++i) {
      RatVector r = full[i];
      Rational rb = b[i];
      for (std::size_t k = 0; k < ech.size(); ++k) {
        std::size_t p = 0;
        while (ech[k][p] == 0) ++p;
        if (r[p] != 0) {
          Rational f = r[p] / ech[k][p];
          for (std::size_t j = 0; j < r.size(); ++j) r[j] -= f * ech[k][j];
          rb -= f * rhs[k];
        }
      }
      if (std::all_of(r.begin(), r.end(), [](const Rational& v) { return v == 0; })) {
        if (rb != 0) return std::nullopt;
        continue;
      }
      ech.push_back(r);
      rhs.push_back(rb);
    }
    rows = ech;
  }
  const std::size_t r = rows.size();
  std::optional<Rational> best;
  for_each_subset(g.size(), r, [&](const std::vector<std::size_t>& s) {
    std::vector<RatVector> a(r, RatVector(r));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) a[i][j] = rows[i][s[j]];
    auto x = solve_square(a, rhs);
    if (!x) return;
    Rational sum = 0;
    for (const auto& v : *x) {
      if (v < 0) return;
      sum += v;
    }
    if (!best || sum > *best) best = sum;
  });
  return best;
}

// Random matrix in GL_n(Z) as a product of elementary operations.
inline std::vector<IntVector> random_unimodular(std::size_t n, std::mt19937& rng, int steps = 8) {
  std::vector<IntVector> m(n, IntVector(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  std::uniform_int_distribution<int> pick(0, static_cast<int>(n) - 1), coef(-2, 2), kind(0, 2);
  for (int s = 0; s < steps; ++s) {
    std::size_t i = pick(rng), j = pick(rng);
    switch (kind(rng)) {
      case 0:
        if (i != j) m[i] = m[i] + Integer(coef(rng)) * m[j];
        break;
      case 1:
        std::swap(m[i], m[j]);
        break;
      default:
        m[i] = -m[i];
    }
  }
  return m;
}

inline IntVector apply(const std::vector<IntVector>& m, const IntVector& v) {
  IntVector out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) out[i] = mukai::dot(m[i], v);
  return out;
}

}  // namespace oracle
