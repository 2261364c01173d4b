#include "mukai/spherical.hpp"

#include <set>

#include "mukai/error.hpp"

namespace mukai {

std::vector<std::string> SphericalRecord::validate() const {
  if (divisors.empty()) throw Error(ErrorKind::Validation, "divisor list is empty");
  if (rank > dim) throw Error(ErrorKind::Validation, "rank exceeds dimension (dim_x >= rank_m violated)");
  if (rank == 0) throw Error(ErrorKind::Validation, "rank must be positive");
  std::set<std::string> names;
  for (const auto& d : divisors) {
    if (!names.insert(d.name).second) throw Error(ErrorKind::Validation, "divisor name '" + d.name + "' repeated");
    if (d.rho.size() != rank)
      throw Error(ErrorKind::Validation, "rho of '" + d.name + "' has length " + std::to_string(d.rho.size()) +
                                             ", expected rank " + std::to_string(rank));
    if (d.m <= 0) throw Error(ErrorKind::Validation, "m of '" + d.name + "' must be positive");
    if (!d.is_color && d.m != 1)
      throw Error(ErrorKind::Validation, "invariant divisor '" + d.name + "' must have m = 1");
  }
  for (const auto& g : valuation_cone_generators)
    if (g.size() != rank) throw Error(ErrorKind::Validation, "valuation cone generator has wrong length");

  std::vector<std::string> warnings;
  Cone v = valuation_cone();
  for (const auto& d : divisors)
    if (!d.is_color && !v.contains(d.rho))
      warnings.push_back("rho of invariant divisor '" + d.name + "' lies outside the valuation cone");
  return warnings;
}

Cone SphericalRecord::valuation_cone() const { return Cone::from_generators(rank, valuation_cone_generators); }

Polytope q_star(const SphericalRecord& rec) {
  std::vector<Halfspace> hs;
  for (const auto& d : rec.divisors) hs.push_back({to_rational(d.rho), -Rational(d.m)});
  Polytope p(rec.rank, std::move(hs));
  try {
    p.vertices();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Unbounded)
      throw Error(ErrorKind::Unbounded, "Q* is unbounded; the record does not describe a complete variety");
    throw;
  }
  return p;
}

Cone t_cone(const SphericalRecord& rec) { return negate(dual_cone(rec.valuation_cone())); }

PFunctionResult p_tilde(const SphericalRecord& rec) {
  Polytope feasible = intersect(q_star(rec), t_cone(rec));
  RatVector objective(rec.rank);
  Rational color_excess = 0;
  for (const auto& d : rec.divisors) {
    objective = objective + to_rational(d.rho);
    color_excess += Rational(d.m - 1);
  }
  LpSolution sol = solve(LinearProgram{objective, feasible});

  PFunctionResult out;
  out.lp_value = sol.value;
  out.argmax_theta = sol.argmax;
  out.value = Rational(rec.dim) - Rational(rec.rank) - (color_excess + sol.value);
  for (const auto& d : rec.divisors)
    out.witness_divisor.push_back({d.name, Rational(d.m) + dot(d.rho, sol.argmax)});
  out.toric_flag = out.value < 1;
  return out;
}

std::string format_divisor(const std::vector<WitnessTerm>& terms) {
  std::string out;
  for (const auto& t : terms) {
    if (t.coefficient == 0) continue;
    if (!out.empty()) out += " + ";
    out += to_string(t.coefficient) + "·" + t.name;
  }
  return out.empty() ? "0" : out;
}

MukaiBound mukai_bound(const SphericalRecord& rec, const PFunctionResult& p, std::optional<std::size_t> picard_rank,
                       std::optional<Rational> pseudo_index) {
  MukaiBound b;
  b.upper_bound = Rational(rec.dim) - p.value;
  b.toric_flag = p.toric_flag;
  b.notes.push_back("(iota-1)*rho <= dim - P~ = " + to_string(b.upper_bound));
  b.notes.push_back("P~(X) >= gamma(X): the bound is at least as strong as dim - gamma(X)");
  if (b.toric_flag) b.notes.push_back("P~(X) < 1: X is isomorphic to a toric variety");
  if (picard_rank && pseudo_index) {
    b.lhs = (*pseudo_index - 1) * Rational(*picard_rank);
    if (*b.lhs > b.upper_bound) {
      b.violated = true;
      b.notes.push_back("supplied (iota-1)*rho = " + to_string(*b.lhs) + " exceeds the certified bound");
    } else if (*b.lhs == Rational(rec.dim) && p.value == 0) {
      b.equality_case = true;
      b.notes.push_back("equality (iota-1)*rho = dim with P~ = 0: X is a product of projective spaces");
    }
  }
  return b;
}

}  // namespace mukai
