#include "doctest.h"
#include "mukai/error.hpp"
#include "mukai/nefindex.hpp"
#include "oracles.hpp"

using namespace mukai;

namespace {

Fan vk() {
  return face_fan({{1, 0, 0, 0}, {-1, 0, 0, 0}, {0, 1, 0, 0}, {0, -1, 0, 0}, {0, 0, 1, 0}, {0, 0, -1, 0}, {0, 0, 0, 1},
                   {0, 0, 0, -1}, {1, 1, 1, 1}, {-1, -1, -1, -1}});
}

// P_X rebuilt from scratch: points s of a box with s and -K - s nef.
std::vector<IntVector> p_x_oracle(const ClassPolytopeData& d) {
  const IntVector& k = d.anticanonical_class;
  IntVector lo(k.size()), hi(k.size());
  for (std::size_t i = 0; i < k.size(); ++i) {
    lo[i] = -4 * abs(k[i]) - 4;
    hi[i] = 4 * abs(k[i]) + 4;
  }
  if (k.size() > 3) {  // keep the scan small in high rank; classes are nonnegative there
    for (std::size_t i = 0; i < k.size(); ++i) {
      lo[i] = 0;
      hi[i] = k[i];
    }
  }
  return oracle::box_scan(lo, hi, [&](const IntVector& s) {
    return !is_zero(s) && d.nef_cone.contains(s) && d.nef_cone.contains(k - s);
  });
}

}  // namespace

TEST_CASE("projective spaces: P_X = {H, ..., (n+1)H} and tau = n + 1") {
  for (std::size_t n = 1; n <= 4; ++n) {
    ClassPolytopeData d = class_polytope(projective_space(n));
    REQUIRE(d.p_x.size() == n + 1);
    for (std::size_t i = 0; i <= n; ++i) CHECK(d.p_x[i] == IntVector{Integer(i + 1)});
    CHECK(tau_z(d).value == Integer(n + 1));
    CHECK(tau_q(d).value == Rational(n + 1));
    MukaiTypeMargin m = mukai_type_margin(projective_space(n), d, tau_q(d).value);
    CHECK(m.margin == 0);
    CHECK(m.equality);
    CHECK(m.recognized_factors == std::vector<std::size_t>{n});
    CHECK(m.consistent);
  }
}

TEST_CASE("P1 x P1: eight classes and tau = 4") {
  ClassPolytopeData d = class_polytope(product_of_projective_spaces({1, 1}));
  CHECK(d.p_x.size() == 8);
  CHECK(d.p_x == p_x_oracle(d));
  CHECK(tau_z(d).value == 4);
  CHECK(tau_q(d).value == 4);
}

TEST_CASE("P2 x P2: margin zero") {
  Fan f = product_of_projective_spaces({2, 2});
  ClassPolytopeData d = class_polytope(f);
  CHECK(tau_q(d).value == 6);
  CHECK(mukai_type_margin(f, d, 6).margin == 0);
}

TEST_CASE("non-Fano input is rejected") {
  try {
    class_polytope(hirzebruch(2));
    FAIL("expected NotFano");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotFano);
  }
}

TEST_CASE("ten-ray fourfold: class polytope and total indices") {
  Fan f = vk();
  ClassPolytopeData d = class_polytope(f);
  CHECK(d.nef_cone.rays().size() == 12);
  REQUIRE(d.p_x.size() == 13);
  CHECK(d.p_x == p_x_oracle(d));
  // -K itself is in P_X; the other twelve are the nef cone generators.
  CHECK(std::find(d.p_x.begin(), d.p_x.end(), d.anticanonical_class) != d.p_x.end());
  for (const auto& r : d.nef_cone.rays()) CHECK(std::find(d.p_x.begin(), d.p_x.end(), r) != d.p_x.end());

  IntegerTotalIndex tz = tau_z(d);
  CHECK(tz.value == 2);
  IntVector sum(d.anticanonical_class.size());
  for (const auto& c : tz.witness.classes) sum = sum + c;
  CHECK(sum == d.anticanonical_class);

  auto parts = oracle::multiset_sums(d.p_x, d.anticanonical_class, 6);
  std::map<std::size_t, int> by_size;
  for (const auto& p : parts) ++by_size[p.size()];
  CHECK(by_size == std::map<std::size_t, int>{{1, 1}, {2, 6}});
  CHECK(integer_nef_partitions(d).size() == parts.size());

  RationalTotalIndex tq = tau_q(d);
  CHECK(tq.value == Rational(5, 2));
  CHECK(oracle::equality_lp_by_bases(d.p_x, d.anticanonical_class) == Rational(5, 2));
  RatVector rsum(d.anticanonical_class.size());
  for (std::size_t i = 0; i < tq.witness.classes.size(); ++i)
    rsum = rsum + tq.witness.coefficients[i] * to_rational(tq.witness.classes[i]);
  CHECK(rsum == to_rational(d.anticanonical_class));
  CHECK(tq.value >= Rational(tz.value));

  // Five distinct classes with coefficient 1/2 each.
  CHECK(tq.witness.classes.size() == 5);
  for (const auto& c : tq.witness.coefficients) CHECK(c == Rational(1, 2));

  MukaiTypeMargin m = mukai_type_margin(f, d, tq.value);
  CHECK(m.margin == Rational(15, 2));
  CHECK(!m.equality);
  CHECK(!m.recognized_factors);
  CHECK(m.consistent);
}

TEST_CASE("sufficiency: every part of every partition lies in P_X and -K minus it is nef") {
  for (const Fan& f : {vk(), product_of_projective_spaces({1, 1}), hirzebruch(1)}) {
    ClassPolytopeData d = class_polytope(f);
    for (const auto& partition : integer_nef_partitions(d))
      for (auto i : partition) {
        CHECK(d.nef_cone.contains(d.p_x[i]));
        CHECK(d.nef_cone.contains(d.anticanonical_class - d.p_x[i]));
      }
    CHECK(tau_q(d).value >= Rational(tau_z(d).value));
  }
}
