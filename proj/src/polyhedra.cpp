#include "mukai/polyhedra.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <set>
#include <stdexcept>

#include <boost/dynamic_bitset.hpp>

#include "mukai/error.hpp"

namespace mukai {

bool lex_less(const RatVector& a, const RatVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// ---------------------------------------------------------------------------
// Double description

DoubleDescription double_description(std::size_t dim, const std::vector<IntVector>& inequalities) {
  struct Ray {
    IntVector v;
    boost::dynamic_bitset<> tight;
  };
  const std::size_t m = inequalities.size();
  std::vector<IntVector> lin;
  for (std::size_t i = 0; i < dim; ++i) {
    IntVector e(dim);
    e[i] = 1;
    lin.push_back(std::move(e));
  }
  std::vector<Ray> rays;

  for (std::size_t k = 0; k < m; ++k) {
    const IntVector& a = inequalities[k];
    if (a.size() != dim) throw Error(ErrorKind::DimensionMismatch, "inequality length differs from ambient dimension");
    if (is_zero(a)) {
      for (auto& r : rays) r.tight.set(k);
      continue;
    }

    auto hit = std::find_if(lin.begin(), lin.end(), [&](const IntVector& l) { return dot(a, l) != 0; });
    if (hit != lin.end()) {
      // A lineality direction leaves the span: it becomes a ray, the rest is
      // pushed into the hyperplane <a, x> = 0.
      IntVector l0 = *hit;
      lin.erase(hit);
      Integer s0 = dot(a, l0);
      if (s0 < 0) {
        l0 = -l0;
        s0 = -s0;
      }
      for (auto& l : lin) {
        Integer s = dot(a, l);
        if (s != 0) l = primitive(s0 * l - s * l0);
      }
      for (auto& r : rays) {
        Integer s = dot(a, r.v);
        if (s != 0) r.v = primitive(s0 * r.v - s * l0);
        r.tight.set(k);
      }
      Ray fresh{l0, boost::dynamic_bitset<>(m)};
      for (std::size_t j = 0; j < k; ++j) fresh.tight.set(j);
      rays.push_back(std::move(fresh));
      continue;
    }

    std::vector<Integer> value(rays.size());
    std::vector<std::size_t> pos, neg;
    std::vector<Ray> next;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      value[i] = dot(a, rays[i].v);
      if (value[i] > 0) {
        pos.push_back(i);
        next.push_back(rays[i]);
      } else if (value[i] < 0) {
        neg.push_back(i);
      } else {
        next.push_back(rays[i]);
        next.back().tight.set(k);
      }
    }
    const std::size_t needed = dim >= lin.size() + 2 ? dim - lin.size() - 2 : 0;
    for (std::size_t p : pos)
      for (std::size_t n : neg) {
        boost::dynamic_bitset<> common = rays[p].tight & rays[n].tight;
        if (common.count() < needed) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == n) continue;
          if (common.is_subset_of(rays[r].tight)) adjacent = false;
        }
        if (!adjacent) continue;
        Ray combo{primitive(value[p] * rays[n].v - value[n] * rays[p].v), common};
        combo.tight.set(k);
        next.push_back(std::move(combo));
      }
    rays = std::move(next);
  }

  DoubleDescription out;
  out.lineality = std::move(lin);
  for (auto& r : rays) out.rays.push_back(std::move(r.v));
  return out;
}

// ---------------------------------------------------------------------------
// Canonical forms

namespace {

// Hermite basis of span(vectors) ∩ Z^dim.
std::vector<IntVector> saturated_basis(const std::vector<IntVector>& vectors, std::size_t dim) {
  if (vectors.empty()) return {};
  std::vector<RatVector> perp = rational_kernel(IntMatrix::from_rows(vectors, dim));
  std::vector<IntVector> perp_rows;
  for (const auto& v : perp) perp_rows.push_back(primitive(v));
  return integer_kernel(IntMatrix::from_rows(perp_rows, dim));
}

// Orthogonal projection of each vector off span(basis), made primitive,
// deduplicated and sorted. Zero results are dropped.
std::vector<IntVector> project_off(const std::vector<IntVector>& vectors, const std::vector<IntVector>& basis,
                                   std::size_t dim) {
  std::set<IntVector> out;
  if (basis.empty()) {
    for (const auto& v : vectors)
      if (!is_zero(v)) out.insert(primitive(v));
    return {out.begin(), out.end()};
  }
  RatMatrix b = to_rational(IntMatrix::from_rows(basis, dim));
  RatMatrix gram = b * b.transpose();
  RatMatrix gram_inv = *inverse(gram);
  for (const auto& v : vectors) {
    RatVector rv = to_rational(v);
    RatVector coeff = gram_inv * (b * rv);
    RatVector proj = rv - b.transpose() * coeff;
    if (!is_zero(proj)) out.insert(primitive(proj));
  }
  return {out.begin(), out.end()};
}

std::vector<IntVector> with_negatives(const std::vector<IntVector>& a, const std::vector<IntVector>& eqs) {
  std::vector<IntVector> out = a;
  for (const auto& e : eqs) {
    out.push_back(e);
    out.push_back(-e);
  }
  return out;
}

void check_lengths(const std::vector<IntVector>& vs, std::size_t dim) {
  for (const auto& v : vs)
    if (v.size() != dim) throw Error(ErrorKind::DimensionMismatch, "vector length differs from ambient dimension");
}

}  // namespace

Cone Cone::from_parts(std::size_t dim, std::vector<IntVector> rays, std::vector<IntVector> lineality,
                      std::vector<IntVector> facets, std::vector<IntVector> equations) {
  Cone c;
  c.dim_ = dim;
  c.rays_ = std::move(rays);
  c.lineality_ = std::move(lineality);
  c.facets_ = std::move(facets);
  c.equations_ = std::move(equations);
  return c;
}

Cone Cone::from_inequalities(std::size_t dim, const std::vector<IntVector>& inequalities,
                             const std::vector<IntVector>& equations) {
  check_lengths(inequalities, dim);
  check_lengths(equations, dim);
  DoubleDescription v = double_description(dim, with_negatives(inequalities, equations));
  std::vector<IntVector> lin = saturated_basis(v.lineality, dim);
  std::vector<IntVector> rays = project_off(v.rays, lin, dim);

  DoubleDescription h = double_description(dim, with_negatives(rays, lin));
  std::vector<IntVector> eqs = saturated_basis(h.lineality, dim);
  std::vector<IntVector> facets = project_off(h.rays, eqs, dim);
  return from_parts(dim, std::move(rays), std::move(lin), std::move(facets), std::move(eqs));
}

Cone Cone::from_generators(std::size_t dim, const std::vector<IntVector>& generators,
                           const std::vector<IntVector>& lineality) {
  check_lengths(generators, dim);
  check_lengths(lineality, dim);
  DoubleDescription h = double_description(dim, with_negatives(generators, lineality));
  std::vector<IntVector> eqs = saturated_basis(h.lineality, dim);
  std::vector<IntVector> facets = project_off(h.rays, eqs, dim);

  DoubleDescription v = double_description(dim, with_negatives(facets, eqs));
  std::vector<IntVector> lin = saturated_basis(v.lineality, dim);
  std::vector<IntVector> rays = project_off(v.rays, lin, dim);
  return from_parts(dim, std::move(rays), std::move(lin), std::move(facets), std::move(eqs));
}

Cone Cone::full_space(std::size_t dim) { return from_inequalities(dim, {}); }

Cone Cone::origin(std::size_t dim) { return from_generators(dim, {}); }

bool Cone::contains(const IntVector& x) const {
  if (x.size() != dim_) throw Error(ErrorKind::DimensionMismatch, "point length differs from ambient dimension");
  for (const auto& f : facets_)
    if (dot(f, x) < 0) return false;
  for (const auto& e : equations_)
    if (dot(e, x) != 0) return false;
  return true;
}

bool Cone::contains(const RatVector& x) const {
  if (x.size() != dim_) throw Error(ErrorKind::DimensionMismatch, "point length differs from ambient dimension");
  for (const auto& f : facets_)
    if (dot(f, x) < 0) return false;
  for (const auto& e : equations_)
    if (dot(e, x) != 0) return false;
  return true;
}

std::vector<std::size_t> Cone::rays_on_facet(std::size_t facet) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < rays_.size(); ++i)
    if (dot(facets_.at(facet), rays_[i]) == 0) out.push_back(i);
  return out;
}

Cone dual_cone(const Cone& c) {
  // Canonical data is symmetric under duality: only the roles swap.
  return Cone::from_generators(c.ambient_dim(), c.facets(), c.equations());
}

Cone negate(const Cone& c) {
  std::vector<IntVector> rays;
  for (const auto& r : c.rays()) rays.push_back(-r);
  return Cone::from_generators(c.ambient_dim(), rays, c.lineality());
}

// ---------------------------------------------------------------------------
// Polytopes

Polytope::Polytope(std::size_t dim, std::vector<Halfspace> halfspaces) : dim_(dim), halfspaces_(std::move(halfspaces)) {
  for (const auto& h : halfspaces_)
    if (h.normal.size() != dim_) throw Error(ErrorKind::DimensionMismatch, "halfspace normal length differs from ambient dimension");
}

bool Polytope::contains(const RatVector& x) const {
  if (x.size() != dim_) throw Error(ErrorKind::DimensionMismatch, "point length differs from ambient dimension");
  return std::all_of(halfspaces_.begin(), halfspaces_.end(), [&](const Halfspace& h) { return h.contains(x); });
}

bool Polytope::contains(const IntVector& x) const { return contains(to_rational(x)); }

std::vector<RatVector> Polytope::vertices() const {
  // Homogenise: (x, t) with <a, x> - b t >= 0 and t >= 0.
  std::vector<IntVector> rows;
  for (const auto& h : halfspaces_) {
    RatVector row = h.normal;
    row.push_back(-h.offset);
    rows.push_back(primitive(row));
  }
  IntVector t_row(dim_ + 1);
  t_row[dim_] = 1;
  rows.push_back(t_row);

  DoubleDescription dd = double_description(dim_ + 1, rows);
  std::vector<RatVector> verts;
  bool recession = !dd.lineality.empty();
  for (const auto& r : dd.rays) {
    if (r[dim_] == 0) {
      recession = true;
      continue;
    }
    RatVector v(dim_);
    for (std::size_t i = 0; i < dim_; ++i) v[i] = Rational(r[i], r[dim_]);
    verts.push_back(std::move(v));
  }
  if (verts.empty()) throw Error(ErrorKind::Empty, "polytope has no feasible point");
  if (recession) throw Error(ErrorKind::Unbounded, "polytope has a recession direction");
  std::sort(verts.begin(), verts.end(), lex_less);
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  return verts;
}

Polytope intersect(const Polytope& p, const Cone& c) {
  if (p.ambient_dim() != c.ambient_dim())
    throw Error(ErrorKind::DimensionMismatch, "polytope and cone live in different dimensions");
  std::vector<Halfspace> hs = p.halfspaces();
  for (const auto& f : c.facets()) hs.push_back({to_rational(f), 0});
  for (const auto& e : c.equations()) {
    hs.push_back({to_rational(e), 0});
    hs.push_back({to_rational(-e), 0});
  }
  return Polytope(p.ambient_dim(), std::move(hs));
}

namespace {

struct IntegerHalfspace {
  IntVector normal;
  Integer offset;
};

// Scale <a, x> >= b by the positive lcm of denominators.
IntegerHalfspace clear_denominators(const Halfspace& h) {
  Integer l = denominator(h.offset);
  for (const auto& x : h.normal) l = boost::multiprecision::lcm(l, Integer(denominator(x)));
  IntegerHalfspace out;
  for (const auto& x : h.normal) out.normal.push_back(Integer(numerator(Rational(x * l))));
  out.offset = Integer(numerator(Rational(h.offset * l)));
  return out;
}

}  // namespace

std::vector<IntVector> lattice_points(const Polytope& p) {
  std::vector<RatVector> verts;
  try {
    verts = p.vertices();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Empty) return {};
    throw;
  }
  const std::size_t d = p.ambient_dim();
  IntVector lo(d), hi(d);
  for (std::size_t i = 0; i < d; ++i) {
    Rational mn = verts[0][i], mx = verts[0][i];
    for (const auto& v : verts) {
      mn = std::min(mn, v[i]);
      mx = std::max(mx, v[i]);
    }
    lo[i] = ceil(mn);
    hi[i] = floor(mx);
    if (lo[i] > hi[i]) return {};
  }
  if (d == 0) return {IntVector{}};

  std::vector<IntegerHalfspace> hs;
  for (const auto& h : p.halfspaces()) hs.push_back(clear_denominators(h));

  // Machine-word scan when every partial sum provably fits in 62 bits.
  Integer bound = 0;
  for (std::size_t i = 0; i < d; ++i) bound = std::max(bound, Integer(std::max(Integer(abs(lo[i])), Integer(abs(hi[i])))));
  const Integer limit = Integer(1) << 61;
  bool small = bound < limit;
  for (const auto& h : hs) {
    Integer worst = abs(h.offset);
    for (const auto& a : h.normal) worst += abs(a) * bound;
    if (worst >= limit) small = false;
  }

  std::vector<IntVector> out;
  if (small) {
    std::vector<std::int64_t> l(d), u(d), x(d);
    for (std::size_t i = 0; i < d; ++i) {
      l[i] = lo[i].convert_to<std::int64_t>();
      u[i] = hi[i].convert_to<std::int64_t>();
    }
    std::vector<std::vector<std::int64_t>> a(hs.size(), std::vector<std::int64_t>(d));
    std::vector<std::int64_t> b(hs.size());
    for (std::size_t k = 0; k < hs.size(); ++k) {
      for (std::size_t i = 0; i < d; ++i) a[k][i] = hs[k].normal[i].convert_to<std::int64_t>();
      b[k] = hs[k].offset.convert_to<std::int64_t>();
    }
    x = l;
    while (true) {
      bool inside = true;
      for (std::size_t k = 0; k < hs.size() && inside; ++k) {
        std::int64_t s = 0;
        for (std::size_t i = 0; i < d; ++i) s += a[k][i] * x[i];
        inside = s >= b[k];
      }
      if (inside) {
        IntVector pt(d);
        for (std::size_t i = 0; i < d; ++i) pt[i] = x[i];
        out.push_back(std::move(pt));
      }
      std::size_t i = d;
      while (i > 0) {
        --i;
        if (x[i] < u[i]) {
          ++x[i];
          break;
        }
        x[i] = l[i];
        if (i == 0) return out;
      }
    }
  }

  IntVector x = lo;
  while (true) {
    bool inside = true;
    for (std::size_t k = 0; k < hs.size() && inside; ++k) inside = dot(hs[k].normal, x) >= hs[k].offset;
    if (inside) out.push_back(x);
    std::size_t i = d;
    while (i > 0) {
      --i;
      if (x[i] < hi[i]) {
        ++x[i];
        break;
      }
      x[i] = lo[i];
      if (i == 0) return out;
    }
  }
}

// ---------------------------------------------------------------------------
// Triangulation and Hilbert bases

std::vector<std::vector<IntVector>> triangulate(const Cone& c) {
  if (!c.is_pointed()) throw Error(ErrorKind::NotPointed, "cannot triangulate a cone containing a line");
  const auto& rays = c.rays();
  if (rays.empty()) return {};
  if (rays.size() == c.dimension()) return {rays};
  // Pull the first ray: cone it over a triangulation of every facet missing it.
  const IntVector& apex = rays.front();
  std::vector<std::vector<IntVector>> out;
  for (std::size_t f = 0; f < c.facets().size(); ++f) {
    if (dot(c.facets()[f], apex) == 0) continue;
    std::vector<IntVector> face_rays;
    for (auto i : c.rays_on_facet(f)) face_rays.push_back(rays[i]);
    Cone face = Cone::from_generators(c.ambient_dim(), face_rays);
    for (auto& simplex : triangulate(face)) {
      simplex.insert(simplex.begin(), apex);
      out.push_back(std::move(simplex));
    }
  }
  return out;
}

namespace {

// Nonzero lattice points of the half-open parallelepiped spanned by the
// columns of a nonsingular square integer matrix.
std::vector<IntVector> parallelepiped_points(const IntMatrix& columns) {
  const std::size_t k = columns.rows();
  SmithForm snf = smith_normal_form(columns);
  RatMatrix u_inv = *inverse(to_rational(snf.U));
  RatMatrix a_inv = *inverse(to_rational(columns));
  RatMatrix a = to_rational(columns);
  IntVector d = snf.diagonal();

  std::vector<IntVector> out;
  RatVector c(k);
  while (true) {
    // Coset representative u_inv * c, folded into [0,1)^k coordinates.
    RatVector lambda = a_inv * (u_inv * c);
    for (auto& l : lambda) l -= Rational(floor(l));
    RatVector point = a * lambda;
    if (!is_zero(point)) out.push_back(to_integer(point));
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (c[i] + 1 < Rational(d[i])) {
        c[i] += 1;
        break;
      }
      c[i] = 0;
      if (i == 0) return out;
    }
    if (k == 0) return out;
  }
}

}  // namespace

std::vector<IntVector> hilbert_basis(const Cone& c) {
  if (!c.is_pointed()) throw Error(ErrorKind::NotPointed, "Hilbert basis requires a pointed cone");
  if (c.rays().empty()) return {};
  const std::size_t dim = c.ambient_dim();

  // Coordinates in the saturated lattice span(c) ∩ Z^dim.
  std::vector<IntVector> basis = saturated_basis(c.rays(), dim);
  const std::size_t k = basis.size();
  RatMatrix b_t = to_rational(IntMatrix::from_rows(basis, dim)).transpose();
  std::vector<IntVector> local_rays;
  for (const auto& r : c.rays()) local_rays.push_back(to_integer(*solve_linear(b_t, to_rational(r))));
  Cone local = Cone::from_generators(k, local_rays);

  std::set<IntVector> candidates(local.rays().begin(), local.rays().end());
  for (const auto& simplex : triangulate(local)) {
    IntMatrix cols = IntMatrix::from_rows(simplex, k).transpose();
    for (auto& p : parallelepiped_points(cols)) candidates.insert(std::move(p));
  }

  std::vector<IntVector> irreducible;
  for (const auto& x : candidates) {
    bool reducible = false;
    for (const auto& y : candidates) {
      if (y == x) continue;
      if (local.contains(x - y)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) irreducible.push_back(x);
  }

  std::vector<IntVector> out;
  for (const auto& x : irreducible) {
    IntVector v(dim);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < dim; ++j) v[j] += x[i] * basis[i][j];
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace mukai
