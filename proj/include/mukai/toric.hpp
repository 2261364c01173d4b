#pragma once

// Complete rational fans and the toric dictionary.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mukai/exactmath.hpp"
#include "mukai/polyhedra.hpp"

namespace mukai {

/// A rational fan given by primitive rays and maximal cones (ray-index sets).
/// The constructor validates the data it can check cheaply; completeness is
/// checked on demand.
class Fan {
 public:
  Fan(std::size_t lattice_dim, std::vector<IntVector> rays, std::vector<std::vector<std::size_t>> max_cones);

  std::size_t lattice_dim() const { return dim_; }
  const std::vector<IntVector>& rays() const { return rays_; }
  const std::vector<std::vector<std::size_t>>& max_cones() const { return cones_; }

  /// The rays of one maximal cone as a matrix, one row per ray.
  IntMatrix cone_matrix(std::size_t cone) const;

  bool is_complete() const;
  bool is_simplicial() const;
  bool is_smooth() const;

  bool operator==(const Fan&) const = default;

 private:
  std::size_t dim_;
  std::vector<IntVector> rays_;
  std::vector<std::vector<std::size_t>> cones_;
};

/// Face fan of conv(vertices). Non-extreme input points are dropped.
/// Throws Error(OriginNotInterior) unless 0 is an interior point.
Fan face_fan(const std::vector<IntVector>& polytope_vertices);

Fan projective_space(std::size_t n);
Fan product(const Fan& a, const Fan& b);
Fan product_of_projective_spaces(const std::vector<std::size_t>& dims);
/// Hirzebruch surface F_a: rays (1,0), (0,1), (-1,a), (0,-1).
Fan hirzebruch(int a);

/// A codimension-one face shared by two maximal cones. `normal` is the
/// primitive functional vanishing on the shared face and positive on `second`.
struct Wall {
  std::size_t first;
  std::size_t second;
  std::vector<std::size_t> shared_rays;
  IntVector normal;
};

/// Each wall listed once with first < second. Throws Error(NotComplete).
std::vector<Wall> walls(const Fan& f);

struct DivisorClassGroup {
  std::size_t ray_count;
  IntMatrix relations;  // lattice_dim x ray_count, row j = (<e_j, v_i>)_i
  std::size_t free_rank;
  IntVector torsion;  // invariant factors > 1
};

DivisorClassGroup class_group(const Fan& f);

/// Per-cone characters m_s with <m_s, v_i> = -a_i on the rays of cone s.
struct CartierData {
  IntVector divisor;
  std::vector<RatVector> characters;
  bool integral = false;  // Z-Cartier
};

/// Characters of a torus-invariant divisor, or nothing when it is not
/// Q-Cartier.
std::optional<CartierData> cartier_data(const Fan& f, const IntVector& divisor);

struct Anticanonical {
  IntVector divisor;  // all ones
  std::optional<CartierData> cartier;
  bool q_cartier = false;
  bool gorenstein = false;
};

Anticanonical anticanonical(const Fan& f);

/// D . V(tau) for the wall curve; on P^1, O(1) . point = 1.
/// Throws Error(NotCartierOnWall) if characters are missing on either cone.
Rational intersect_divisor_curve(const CartierData& d, const Wall& w, const Fan& f);

bool is_q_factorial(const Fan& f);

/// Rank of Pic: Cartier divisors modulo characters. Throws Error(NotComplete).
std::size_t picard_rank(const Fan& f);

/// min over walls of -K . V(tau). Throws Error(NotQGorenstein).
Rational pseudo_index(const Fan& f);

/// -K . V(tau) > 0 on every wall. Throws Error(NotQGorenstein).
bool is_fano(const Fan& f);

/// Integral coordinates on Pic(X).
///
/// Divisors map to free class coordinates by eliminating the rays of a
/// smooth maximal cone (or, when no cone is smooth, through the Smith form of
/// the ray matrix). Pic is the sublattice spanned by the classes of Cartier
/// divisors; `basis` holds its Hermite basis in class coordinates and
/// `basis_divisors` Cartier representatives of those basis classes.
class PicardLattice {
 public:
  explicit PicardLattice(const Fan& f);

  std::size_t rank() const { return basis_.size(); }
  std::size_t class_rank() const { return class_map_.rows(); }
  const std::string& description() const { return description_; }

  /// Free class coordinates of a divisor.
  IntVector class_coordinates(const IntVector& divisor) const;

  /// Pic coordinates of a divisor class; nothing when the class is not in
  /// the Q-span of Pic. Rational coordinates flag a non-Cartier class.
  std::optional<RatVector> coordinates(const IntVector& divisor) const;

  const std::vector<IntVector>& basis() const { return basis_; }
  const std::vector<IntVector>& basis_divisors() const { return basis_divisors_; }

  /// Divisor with the given Pic coordinates.
  IntVector divisor(const IntVector& coordinates) const;

 private:
  IntMatrix class_map_;
  std::vector<IntVector> basis_;
  std::vector<IntVector> basis_divisors_;
  std::string description_;
};

/// Functional x -> D(x) . V(tau) on Pic coordinates, one row per wall.
std::vector<RatVector> wall_functionals(const Fan& f, const PicardLattice& pic, const std::vector<Wall>& ws);

/// Nef cone in Pic coordinates. Throws Error(NotComplete).
Cone nef_cone(const Fan& f);
Cone nef_cone(const Fan& f, const PicardLattice& pic);

/// Factor dimensions (sorted ascending) when f is the fan of a product of
/// projective spaces. Throws Error(NotSmooth).
std::optional<std::vector<std::size_t>> recognize_projective_space_product(const Fan& f);

}  // namespace mukai
