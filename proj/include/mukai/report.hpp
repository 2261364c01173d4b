#pragma once

// One report type for both inputs. Every numeric field carries a derivation
// tag naming the definition or inequality it comes from.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mukai/exactmath.hpp"
#include "mukai/io.hpp"
#include "mukai/spherical.hpp"
#include "mukai/toric.hpp"

namespace mukai {

// Unset flags were not assessed (records carry no fan).
struct ReportFlags {
  std::optional<bool> q_factorial;
  std::optional<bool> gorenstein;
  std::optional<bool> fano;
  std::optional<bool> toric_detected;
  std::optional<bool> smooth;
};

struct TotalIndexFields {
  std::size_t p_x_size = 0;
  Integer tau_z;
  Rational tau_q;
  Rational type_margin;  // dim + rho - tau_Q
  bool type_equality = false;
  std::vector<std::pair<IntVector, Rational>> tau_q_witness;
};

struct SphericalFields {
  std::size_t rank = 0;
  std::vector<RatVector> q_star_vertices;
  Rational lp_value;
  RatVector argmax_theta;
  std::string witness_divisor;
  std::vector<WitnessTerm> witness_terms;
};

struct MukaiReport {
  std::string source;  // "fan" or "spherical"
  std::size_t dim = 0;
  std::optional<std::size_t> picard_rank;
  std::optional<std::size_t> class_rank;
  std::optional<Rational> pseudo_index;
  std::optional<Rational> p_tilde;
  std::optional<TotalIndexFields> total_index;
  std::optional<SphericalFields> spherical;
  std::optional<std::size_t> nef_cone_rays;
  std::optional<Rational> mukai_lhs;             // (iota - 1) rho
  std::optional<Rational> mukai_lhs_class_rank;  // (iota - 1) rk Cl
  std::size_t mukai_rhs = 0;                     // dim
  std::optional<Rational> upper_bound;           // dim - P~ (records only)
  std::optional<Rational> margin;                // bound - mukai_lhs
  std::optional<std::vector<std::size_t>> equality_case;
  ReportFlags flags;
  std::map<std::string, std::string> derivation;
  std::vector<std::string> notes;
};

/// Throws Error(NotComplete) for incomplete fans and Error(Inconsistency) if
/// a Q-factorial Fano fan violates (iota - 1) rho <= dim.
MukaiReport report_fan(const Fan& f);

/// Throws Error(Inconsistency) if the supplied rho and iota violate
/// (iota - 1) rho <= dim - P~.
MukaiReport report_spherical(const SphericalRecord& rec, std::optional<std::size_t> picard_rank = std::nullopt,
                             std::optional<Rational> pseudo_index = std::nullopt);

Json to_json(const MukaiReport& r);
std::string to_text(const MukaiReport& r);

}  // namespace mukai
