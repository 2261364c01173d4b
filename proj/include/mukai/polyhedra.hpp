#pragma once

// Rational polyhedral cones and polytopes.
//
// A Cone always carries both descriptions in canonical form:
//   V-side: extreme rays (primitive, modulo the lineality space) and a
//           Hermite basis of the lineality space;
//   H-side: facet inner normals (primitive, modulo the equations) and a
//           Hermite basis of the equations cutting out the linear span.
// Rays are projected orthogonally off the lineality space and facets off the
// equation space, so two cones are equal iff their canonical data agree.

#include <cstddef>
#include <vector>

#include "mukai/exactmath.hpp"

namespace mukai {

class Cone {
 public:
  /// cone(generators) + span(lineality).
  static Cone from_generators(std::size_t dim, const std::vector<IntVector>& generators,
                              const std::vector<IntVector>& lineality = {});
  /// {x : <a, x> >= 0 for a in inequalities, <e, x> = 0 for e in equations}.
  static Cone from_inequalities(std::size_t dim, const std::vector<IntVector>& inequalities,
                                const std::vector<IntVector>& equations = {});
  static Cone full_space(std::size_t dim);
  static Cone origin(std::size_t dim);

  std::size_t ambient_dim() const { return dim_; }
  std::size_t dimension() const { return dim_ - equations_.size(); }

  const std::vector<IntVector>& rays() const { return rays_; }
  const std::vector<IntVector>& lineality() const { return lineality_; }
  const std::vector<IntVector>& facets() const { return facets_; }
  const std::vector<IntVector>& equations() const { return equations_; }

  bool is_pointed() const { return lineality_.empty(); }
  bool is_full_dimensional() const { return equations_.empty(); }

  bool contains(const IntVector& x) const;
  bool contains(const RatVector& x) const;

  /// Indices of the rays lying on the facet with the given index.
  std::vector<std::size_t> rays_on_facet(std::size_t facet) const;

  bool operator==(const Cone&) const = default;

 private:
  Cone() = default;
  static Cone from_parts(std::size_t dim, std::vector<IntVector> rays, std::vector<IntVector> lineality,
                         std::vector<IntVector> facets, std::vector<IntVector> equations);

  std::size_t dim_ = 0;
  std::vector<IntVector> rays_;
  std::vector<IntVector> lineality_;
  std::vector<IntVector> facets_;
  std::vector<IntVector> equations_;
};

/// {y : <y, x> >= 0 for all x in c}.
Cone dual_cone(const Cone& c);

/// -c.
Cone negate(const Cone& c);

/// Raw output of the double description method for {x : A x >= 0}:
/// a lineality basis and the extreme rays modulo it (not canonicalised).
struct DoubleDescription {
  std::vector<IntVector> lineality;
  std::vector<IntVector> rays;
};

DoubleDescription double_description(std::size_t dim, const std::vector<IntVector>& inequalities);

/// <normal, x> >= offset.
struct Halfspace {
  RatVector normal;
  Rational offset;

  bool contains(const RatVector& x) const { return dot(normal, x) >= offset; }
  bool operator==(const Halfspace&) const = default;
};

class Polytope {
 public:
  Polytope(std::size_t dim, std::vector<Halfspace> halfspaces);

  std::size_t ambient_dim() const { return dim_; }
  const std::vector<Halfspace>& halfspaces() const { return halfspaces_; }

  bool contains(const RatVector& x) const;
  bool contains(const IntVector& x) const;

  /// Extreme points, sorted lexicographically. Throws Error(Empty) when
  /// infeasible and Error(Unbounded) when a recession direction exists.
  std::vector<RatVector> vertices() const;

 private:
  std::size_t dim_;
  std::vector<Halfspace> halfspaces_;
};

/// Polytope with the cone's facets (and equations, as two halfspaces each)
/// appended as offset-0 halfspaces.
Polytope intersect(const Polytope& p, const Cone& c);

/// All integer points, sorted lexicographically.
std::vector<IntVector> lattice_points(const Polytope& p);

/// Minimal generating set of the monoid c ∩ Z^n, sorted lexicographically.
/// Throws Error(NotPointed) when c contains a line.
std::vector<IntVector> hilbert_basis(const Cone& c);

/// Simplicial cones (as ray lists) triangulating a pointed cone without new rays.
std::vector<std::vector<IntVector>> triangulate(const Cone& c);

bool lex_less(const RatVector& a, const RatVector& b);

}  // namespace mukai
