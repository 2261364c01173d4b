#pragma once

// JSON file formats. Integers are JSON numbers (or decimal strings when they
// do not fit in 64 bits); rationals are "p/q" strings.
//
// Structural problems (bad JSON, missing keys, wrong types) raise
// Error(Parse). Mathematical problems are left to the constructors, which
// raise Error(Validation) and friends.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "mukai/exactmath.hpp"
#include "mukai/polyhedra.hpp"
#include "mukai/spherical.hpp"
#include "mukai/toric.hpp"

namespace mukai {

using Json = nlohmann::ordered_json;

/// A fan given either explicitly or as the face fan of a lattice polytope.
struct FanSource {
  std::size_t lattice_dim = 0;
  std::vector<IntVector> rays;
  std::vector<std::vector<std::size_t>> max_cones;
  std::optional<std::vector<IntVector>> polytope_vertices;

  Fan realize() const;
  bool operator==(const FanSource&) const = default;
};

/// A cone given by generators (plus optional lineality) or by inequalities
/// <a, x> >= 0 (plus optional equations).
struct ConeSource {
  std::size_t ambient_dim = 0;
  std::optional<std::vector<IntVector>> generators;
  std::vector<IntVector> lineality;
  std::optional<std::vector<IntVector>> inequalities;
  std::vector<IntVector> equations;

  Cone realize() const;
  bool operator==(const ConeSource&) const = default;
};

/// max 1·x subject to sum x_i g_i = target, x >= 0.
struct EqualityProgram {
  std::vector<IntVector> generators;
  IntVector target;
  bool operator==(const EqualityProgram&) const = default;
};

Json integer_to_json(const Integer& x);
Json rational_to_json(const Rational& x);
Json to_json(const IntVector& v);
Json to_json(const RatVector& v);

Json to_json(const FanSource& f);
Json to_json(const ConeSource& c);
Json to_json(const SphericalRecord& r);
Json to_json(const EqualityProgram& p);

FanSource fan_from_json(const Json& j);
ConeSource cone_from_json(const Json& j);
SphericalRecord spherical_from_json(const Json& j);
EqualityProgram equality_program_from_json(const Json& j);

Json parse_json(const std::string& text);
Json read_json_file(const std::filesystem::path& path);

/// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

}  // namespace mukai
