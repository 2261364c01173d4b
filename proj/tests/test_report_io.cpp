#include <fstream>
#include <sstream>

#include "doctest.h"
#include "mukai/corpus.hpp"
#include "mukai/error.hpp"
#include "mukai/report.hpp"

using namespace mukai;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::Parse;
}

Fan corpus_fan(const std::string& name) { return fan_from_json(find_corpus_entry(name)->document).realize(); }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("corpus entries round-trip through their formats") {
  CHECK(corpus().size() >= 6);
  for (const auto& e : corpus()) {
    CAPTURE(e.name);
    if (e.kind == "fan") {
      FanSource s = fan_from_json(e.document);
      CHECK(to_json(s) == e.document);
      CHECK(fan_from_json(parse_json(dump(e.document))) == s);
      s.realize();
    } else if (e.kind == "spherical") {
      SphericalRecord r = spherical_from_json(e.document);
      CHECK(to_json(r) == e.document);
      CHECK(spherical_from_json(parse_json(dump(e.document))) == r);
    } else {
      ConeSource c = cone_from_json(e.document);
      CHECK(to_json(c) == e.document);
      c.realize();
    }
  }
}

TEST_CASE("bundled corpus files match the built-in entries byte for byte") {
  for (const auto& e : corpus()) {
    CAPTURE(e.name);
    CHECK(slurp(std::string(CORPUS_DIR) + "/" + e.name + ".json") == dump(e.document));
  }
}

TEST_CASE("parse errors") {
  CHECK(kind_of([] { parse_json("{\"a\": [1, 2"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { fan_from_json(parse_json(R"({"rays": [[1]]})")); }) == ErrorKind::Parse);
  CHECK(kind_of([] { fan_from_json(parse_json(R"({"lattice_dim": 1, "rays": [["x"]], "max_cones": []})")); }) ==
        ErrorKind::Parse);
  CHECK(kind_of([] { spherical_from_json(parse_json(R"({"dim": 2, "rank": 1, "divisors": {}})")); }) ==
        ErrorKind::Parse);
  CHECK(kind_of([] { cone_from_json(parse_json(R"({"ambient_dim": 2})")); }) == ErrorKind::Parse);
  CHECK(kind_of([] { read_json_file("/nonexistent/file.json"); }) == ErrorKind::Parse);
  CHECK(kind_of([] {
          fan_from_json(parse_json(R"({"lattice_dim": 2, "rays": [[1, 0, 0]], "max_cones": [[0]]})")).realize();
        }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("big integers survive the wire as strings") {
  Integer big = Integer(1) << 80;
  Json j = integer_to_json(big);
  CHECK(j.is_string());
  SphericalRecord r;
  r.dim = 2;
  r.rank = 1;
  r.divisors = {{"D", {big}, 1, true}};
  r.valuation_cone_generators = {{-1}};
  CHECK(spherical_from_json(to_json(r)) == r);
}

TEST_CASE("report: reflexive polytope with a hexagonal facet") {
  MukaiReport r = report_fan(corpus_fan("fig1"));
  CHECK(r.class_rank == 4u);
  CHECK(r.picard_rank == 1u);
  CHECK(r.pseudo_index == Rational(2));
  CHECK(r.mukai_lhs == Rational(1));
  CHECK(r.mukai_lhs_class_rank == Rational(4));
  CHECK(r.mukai_rhs == 3u);
  CHECK(r.flags.q_factorial == false);
  CHECK(r.flags.fano == true);
}

TEST_CASE("report: products of projective spaces reach equality") {
  MukaiReport r = report_fan(corpus_fan("p4xp4xp4"));
  CHECK(r.margin == Rational(0));
  CHECK(r.equality_case == std::vector<std::size_t>{4, 4, 4});
  CHECK(report_fan(corpus_fan("p5")).equality_case == std::vector<std::size_t>{5});
}

TEST_CASE("report: ten-ray fourfold") {
  MukaiReport r = report_fan(corpus_fan("vk4"));
  CHECK(r.picard_rank == 6u);
  REQUIRE(r.total_index);
  CHECK(r.total_index->tau_z == 2);
  CHECK(r.total_index->tau_q == Rational(5, 2));
  CHECK(r.total_index->type_margin == Rational(15, 2));
  CHECK(!r.equality_case);
}

TEST_CASE("report: margin and equality invariants over every bundled fan") {
  for (const auto& e : corpus()) {
    if (e.kind != "fan") continue;
    CAPTURE(e.name);
    MukaiReport r = report_fan(fan_from_json(e.document).realize());
    if (!r.mukai_lhs) continue;
    CHECK(*r.margin == Rational(r.dim) - *r.mukai_lhs);
    if (*r.flags.fano && *r.flags.q_factorial) CHECK(*r.mukai_lhs <= Rational(r.dim));
    if (r.equality_case) {
      CHECK(r.equality_case->size() == *r.picard_rank);
      for (auto n : *r.equality_case) CHECK(*r.pseudo_index == Rational(n + 1));
    }
  }
}

TEST_CASE("report: spherical records") {
  SphericalRecord conics = spherical_from_json(find_corpus_entry("conics")->document);
  MukaiReport r = report_spherical(conics);
  CHECK(r.p_tilde == Rational(0));
  CHECK(r.upper_bound == Rational(5));
  CHECK(r.flags.toric_detected == true);
  CHECK(!r.flags.fano);
  CHECK(r.spherical->witness_divisor == "6·D2");

  MukaiReport eq = report_spherical(conics, 1, Rational(6));
  CHECK(eq.margin == Rational(0));
  CHECK(eq.equality_case == std::vector<std::size_t>{5});
  CHECK(kind_of([&] { report_spherical(conics, 2, Rational(4)); }) == ErrorKind::Inconsistency);

  SphericalRecord horo = spherical_from_json(find_corpus_entry("horospherical")->document);
  CHECK(report_spherical(horo).p_tilde == Rational(1));
}

TEST_CASE("reports are deterministic") {
  const Fan f = corpus_fan("vk4");
  CHECK(dump(to_json(report_fan(f))) == dump(to_json(report_fan(f))));
  Json j = to_json(report_fan(corpus_fan("fig1")));
  CHECK(j["class_rank"] == 4);
  CHECK(j["pseudo_index"] == "2");
  CHECK(j["flags"]["q_factorial"] == false);
  CHECK(!to_text(report_fan(f)).empty());
}
