#pragma once

// Total index of a toric Fano variety through the class polytope
// P_X = Nef ∩ (-K - Nef) ∩ Pic \ {0}.

#include <optional>
#include <string>
#include <vector>

#include "mukai/exactmath.hpp"
#include "mukai/polyhedra.hpp"
#include "mukai/toric.hpp"

namespace mukai {

struct ClassPolytopeData {
  std::string picard_basis;
  Cone nef_cone;
  IntVector anticanonical_class;
  std::vector<IntVector> p_x;  // sorted lexicographically
};

/// Throws Error(NotFano) when -K is not ample and Error(NotCartier) when -K
/// is not Cartier.
ClassPolytopeData class_polytope(const Fan& f);

struct NefPartition {
  std::vector<IntVector> classes;
  std::vector<Rational> coefficients;
};

struct IntegerTotalIndex {
  Integer value;
  NefPartition witness;  // unit coefficients, parts in the order found
};

/// Largest number of parts (with multiplicity) of a multiset from p_x
/// summing to -K. Memoised on the residual class.
IntegerTotalIndex tau_z(const ClassPolytopeData& data);

struct RationalTotalIndex {
  Rational value;
  NefPartition witness;  // positive coefficients only
};

RationalTotalIndex tau_q(const ClassPolytopeData& data);

/// Every multiset of p_x elements summing to -K, each as a sorted list of
/// indices into p_x. Intended for small instances.
std::vector<std::vector<std::size_t>> integer_nef_partitions(const ClassPolytopeData& data);

struct MukaiTypeMargin {
  Rational margin;  // dim + rho - tau_Q
  bool equality = false;
  std::optional<std::vector<std::size_t>> recognized_factors;
  bool consistent = true;  // equality <=> product of projective spaces
};

MukaiTypeMargin mukai_type_margin(const Fan& f, const ClassPolytopeData& data, const Rational& tau_q_value);

}  // namespace mukai
