#include "mukai/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "mukai/error.hpp"

namespace mukai {
namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorKind::Parse, what); }

const Json& require(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) parse_fail(where + ": expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) parse_fail(where + ": missing key '" + key + "'");
  return *it;
}

Integer integer_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? Integer(j.get<std::uint64_t>()) : Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return parse_integer(j.get<std::string>());
    } catch (const std::invalid_argument&) {
    }
  }
  parse_fail(where + ": expected an integer");
}

std::size_t count_from_json(const Json& j, const std::string& where) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
    parse_fail(where + ": expected a non-negative integer");
  return j.get<std::size_t>();
}

IntVector vector_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) parse_fail(where + ": expected an array of integers");
  IntVector v;
  for (const auto& x : j) v.push_back(integer_from_json(x, where));
  return v;
}

std::vector<IntVector> vectors_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) parse_fail(where + ": expected an array of integer arrays");
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(vector_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

void check_lengths(const std::vector<IntVector>& vs, std::size_t dim, const std::string& where) {
  for (const auto& v : vs)
    if (v.size() != dim)
      throw Error(ErrorKind::DimensionMismatch,
                  where + ": vector of length " + std::to_string(v.size()) + " in dimension " + std::to_string(dim));
}

Json vectors_to_json(const std::vector<IntVector>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(to_json(v));
  return out;
}

}  // namespace

Fan FanSource::realize() const {
  if (polytope_vertices) {
    check_lengths(*polytope_vertices, lattice_dim, "polytope_vertices");
    return face_fan(*polytope_vertices);
  }
  check_lengths(rays, lattice_dim, "rays");
  return Fan(lattice_dim, rays, max_cones);
}

Cone ConeSource::realize() const {
  check_lengths(lineality, ambient_dim, "lineality");
  check_lengths(equations, ambient_dim, "equations");
  if (generators) {
    check_lengths(*generators, ambient_dim, "generators");
    return Cone::from_generators(ambient_dim, *generators, lineality);
  }
  check_lengths(*inequalities, ambient_dim, "inequalities");
  return Cone::from_inequalities(ambient_dim, *inequalities, equations);
}

Json integer_to_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return Json(static_cast<std::int64_t>(x));
  return Json(to_string(x));
}

Json rational_to_json(const Rational& x) { return Json(to_string(x)); }

Json to_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(integer_to_json(x));
  return out;
}

Json to_json(const RatVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(rational_to_json(x));
  return out;
}

Json to_json(const FanSource& f) {
  Json j;
  j["lattice_dim"] = f.lattice_dim;
  if (f.polytope_vertices) {
    j["polytope_vertices"] = vectors_to_json(*f.polytope_vertices);
    return j;
  }
  j["rays"] = vectors_to_json(f.rays);
  j["max_cones"] = f.max_cones;
  return j;
}

Json to_json(const ConeSource& c) {
  Json j;
  j["ambient_dim"] = c.ambient_dim;
  if (c.generators) {
    j["generators"] = vectors_to_json(*c.generators);
    if (!c.lineality.empty()) j["lineality"] = vectors_to_json(c.lineality);
  } else {
    j["inequalities"] = vectors_to_json(c.inequalities.value_or(std::vector<IntVector>{}));
    if (!c.equations.empty()) j["equations"] = vectors_to_json(c.equations);
  }
  return j;
}

Json to_json(const SphericalRecord& r) {
  Json j;
  j["dim"] = r.dim;
  j["rank"] = r.rank;
  Json divs = Json::array();
  for (const auto& d : r.divisors) {
    Json e;
    e["name"] = d.name;
    e["rho"] = to_json(d.rho);
    e["m"] = integer_to_json(d.m);
    e["color"] = d.is_color;
    divs.push_back(std::move(e));
  }
  j["divisors"] = std::move(divs);
  j["valuation_cone_generators"] = vectors_to_json(r.valuation_cone_generators);
  return j;
}

Json to_json(const EqualityProgram& p) {
  Json j;
  j["generators"] = vectors_to_json(p.generators);
  j["target"] = to_json(p.target);
  return j;
}

FanSource fan_from_json(const Json& j) {
  FanSource f;
  f.lattice_dim = count_from_json(require(j, "lattice_dim", "fan"), "fan.lattice_dim");
  if (j.contains("polytope_vertices")) {
    f.polytope_vertices = vectors_from_json(j["polytope_vertices"], "fan.polytope_vertices");
    return f;
  }
  f.rays = vectors_from_json(require(j, "rays", "fan"), "fan.rays");
  const Json& cones = require(j, "max_cones", "fan");
  if (!cones.is_array()) parse_fail("fan.max_cones: expected an array of index arrays");
  for (const auto& c : cones) {
    if (!c.is_array()) parse_fail("fan.max_cones: expected an array of index arrays");
    std::vector<std::size_t> idx;
    for (const auto& i : c) idx.push_back(count_from_json(i, "fan.max_cones"));
    f.max_cones.push_back(std::move(idx));
  }
  return f;
}

ConeSource cone_from_json(const Json& j) {
  ConeSource c;
  c.ambient_dim = count_from_json(require(j, "ambient_dim", "cone"), "cone.ambient_dim");
  const bool gens = j.contains("generators"), ineqs = j.contains("inequalities");
  if (gens == ineqs) parse_fail("cone: exactly one of 'generators' and 'inequalities' is required");
  if (gens) {
    c.generators = vectors_from_json(j["generators"], "cone.generators");
    if (j.contains("lineality")) c.lineality = vectors_from_json(j["lineality"], "cone.lineality");
  } else {
    c.inequalities = vectors_from_json(j["inequalities"], "cone.inequalities");
    if (j.contains("equations")) c.equations = vectors_from_json(j["equations"], "cone.equations");
  }
  return c;
}

SphericalRecord spherical_from_json(const Json& j) {
  SphericalRecord r;
  r.dim = count_from_json(require(j, "dim", "record"), "record.dim");
  r.rank = count_from_json(require(j, "rank", "record"), "record.rank");
  const Json& divs = require(j, "divisors", "record");
  if (!divs.is_array()) parse_fail("record.divisors: expected an array");
  for (std::size_t i = 0; i < divs.size(); ++i) {
    const std::string where = "record.divisors[" + std::to_string(i) + "]";
    SphericalDivisor d;
    const Json& name = require(divs[i], "name", where);
    if (!name.is_string()) parse_fail(where + ".name: expected a string");
    d.name = name.get<std::string>();
    d.rho = vector_from_json(require(divs[i], "rho", where), where + ".rho");
    d.m = divs[i].contains("m") ? integer_from_json(divs[i]["m"], where + ".m") : Integer(1);
    if (divs[i].contains("color")) {
      if (!divs[i]["color"].is_boolean()) parse_fail(where + ".color: expected a boolean");
      d.is_color = divs[i]["color"].get<bool>();
    }
    r.divisors.push_back(std::move(d));
  }
  r.valuation_cone_generators =
      vectors_from_json(require(j, "valuation_cone_generators", "record"), "record.valuation_cone_generators");
  return r;
}

EqualityProgram equality_program_from_json(const Json& j) {
  EqualityProgram p;
  p.generators = vectors_from_json(require(j, "generators", "program"), "program.generators");
  p.target = vector_from_json(require(j, "target", "program"), "program.target");
  check_lengths(p.generators, p.target.size(), "program.generators");
  return p;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    parse_fail(std::string("malformed JSON: ") + e.what());
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) parse_fail("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace mukai
