#pragma once

// Spherical layer: from a divisor record (rho(D), m_D, colour flag, valuation
// cone) to the polytope Q*, the cone T = -V^dual and the P-tilde invariant.

#include <optional>
#include <string>
#include <vector>

#include "mukai/exactmath.hpp"
#include "mukai/optimize.hpp"
#include "mukai/polyhedra.hpp"

namespace mukai {

struct SphericalDivisor {
  std::string name;
  IntVector rho;
  Integer m = 1;
  bool is_color = false;

  bool operator==(const SphericalDivisor&) const = default;
};

struct SphericalRecord {
  std::size_t dim = 0;
  std::size_t rank = 0;
  std::vector<SphericalDivisor> divisors;
  std::vector<IntVector> valuation_cone_generators;

  /// Throws Error(Validation) on a broken invariant; returns warnings for
  /// soft ones (invariant divisors whose rho is outside the valuation cone).
  std::vector<std::string> validate() const;

  Cone valuation_cone() const;

  bool operator==(const SphericalRecord&) const = default;
};

/// {v : <rho(D), v> >= -m_D for all D}. Throws Error(Unbounded) when the
/// region is not a polytope.
Polytope q_star(const SphericalRecord& rec);

/// -(valuation cone)^dual.
Cone t_cone(const SphericalRecord& rec);

struct WitnessTerm {
  std::string name;
  Rational coefficient;
};

struct PFunctionResult {
  Rational value;
  RatVector argmax_theta;
  Rational lp_value;  // max of <sum rho(D), theta> over Q* ∩ T
  std::vector<WitnessTerm> witness_divisor;
  bool toric_flag = false;  // value < 1
};

PFunctionResult p_tilde(const SphericalRecord& rec);

/// "6·D2"; zero terms omitted, "0" for the zero divisor.
std::string format_divisor(const std::vector<WitnessTerm>& terms);

struct MukaiBound {
  Rational upper_bound;  // dim X - P-tilde, bounds (iota - 1) rho
  bool toric_flag = false;
  std::optional<Rational> lhs;  // (iota - 1) rho when both are supplied
  bool equality_case = false;
  bool violated = false;
  std::vector<std::string> notes;
};

MukaiBound mukai_bound(const SphericalRecord& rec, const PFunctionResult& p, std::optional<std::size_t> picard_rank,
                       std::optional<Rational> pseudo_index = std::nullopt);

}  // namespace mukai
