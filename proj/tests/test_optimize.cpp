#include <random>

#include "doctest.h"
#include "mukai/error.hpp"
#include "mukai/optimize.hpp"
#include "oracles.hpp"

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

// max <c, x> s.t. <n_i, x> >= b_i as a standard-form program in (x+, x-, s).
Rational via_simplex(std::size_t d, const std::vector<Halfspace>& hs, const RatVector& c) {
  const std::size_t m = hs.size(), n = 2 * d + m;
  RatMatrix a(m, n);
  RatVector b(m), obj(n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      a(i, j) = hs[i].normal[j];
      a(i, d + j) = -hs[i].normal[j];
    }
    a(i, 2 * d + i) = -1;
    b[i] = hs[i].offset;
  }
  for (std::size_t j = 0; j < d; ++j) {
    obj[j] = c[j];
    obj[d + j] = -c[j];
  }
  return simplex_standard_form(a, b, obj).value;
}

}  // namespace

TEST_CASE("vertex-scan LP on the conics region") {
  Polytope q(2, {{{-1, 0}, -1}, {{2, -1}, -1}, {{-1, 2}, -1}, {{1, 0}, 0}, {{0, 1}, 0}});
  LpSolution s = solve({{0, 1}, q});
  CHECK(s.value == 3);
  CHECK(s.argmax == RatVector{1, 3});
}

TEST_CASE("ties resolve to the lexicographically smallest vertex") {
  Polytope square(2, {{{1, 0}, 0}, {{-1, 0}, -1}, {{0, 1}, 0}, {{0, -1}, -1}});
  LpSolution s = solve({{0, 1}, square});
  CHECK(s.value == 1);
  CHECK(s.argmax == RatVector{0, 1});
}

TEST_CASE("LP errors") {
  Polytope empty(1, {{{1}, 1}, {{-1}, 0}});
  CHECK(kind_of([&] { solve({{1}, empty}); }) == ErrorKind::Infeasible);
  Polytope ray(1, {{{1}, 0}});
  CHECK(kind_of([&] { solve({{1}, ray}); }) == ErrorKind::Unbounded);
  CHECK(kind_of([] { solve_equality_form({{1, 0}, {2, 0}}, {1, 1}); }) == ErrorKind::Infeasible);
  CHECK(kind_of([] { solve_equality_form({{1, 1}, {1, -1}, {-1, 1}}, {1, 1}); }) == ErrorKind::Unbounded);
}

TEST_CASE("property: vertex scan agrees with simplex and with the oracle on random bounded programs") {
  std::mt19937 rng(21);
  std::uniform_int_distribution<int> u(-4, 4), off(-6, 0);
  for (int t = 0; t < 200; ++t) {
    const std::size_t d = 1 + rng() % 3;
    std::vector<Halfspace> hs;
    for (std::size_t i = 0; i < d; ++i) {
      RatVector e(d);
      e[i] = 1;
      hs.push_back({e, -4});
      e[i] = -1;
      hs.push_back({e, -4});
    }
    for (int i = 0; i < 3; ++i) {
      RatVector n(d);
      for (auto& x : n) x = u(rng);
      hs.push_back({n, Rational(off(rng), 1 + rng() % 3)});
    }
    RatVector c(d);
    for (auto& x : c) x = u(rng);
    LpSolution s = solve({c, Polytope(d, hs)});
    Rational best = oracle::dot(c, oracle::vertices(d, hs).front());
    for (const auto& v : oracle::vertices(d, hs)) best = std::max(best, oracle::dot(c, v));
    CHECK(s.value == best);
    CHECK(oracle::dot(c, s.argmax) == s.value);
    CHECK(oracle::satisfies(hs, s.argmax));
    CHECK(via_simplex(d, hs, c) == best);
  }
}

TEST_CASE("property: equality-form LP matches the basis-enumeration oracle") {
  std::mt19937 rng(22);
  std::uniform_int_distribution<int> u(0, 3);
  int feasible = 0;
  for (int t = 0; t < 150; ++t) {
    const std::size_t m = 1 + rng() % 3, n = m + 1 + rng() % 3;
    std::vector<IntVector> g(n, IntVector(m));
    for (auto& col : g)
      for (auto& x : col) x = u(rng) + 1;  // positive columns keep the program bounded
    IntVector target(m);
    for (auto& x : target) x = u(rng) + 1;
    auto expect = oracle::equality_lp_by_bases(g, target);
    if (!expect) {
      CHECK(kind_of([&] { solve_equality_form(g, target); }) == ErrorKind::Infeasible);
      continue;
    }
    ++feasible;
    LpSolution s = solve_equality_form(g, target);
    CHECK(s.value == *expect);
    RatVector sum(m);
    Rational total = 0;
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(s.argmax[i] >= 0);
      sum = sum + s.argmax[i] * to_rational(g[i]);
      total += s.argmax[i];
    }
    CHECK(sum == to_rational(target));
    CHECK(total == s.value);
  }
  CHECK(feasible > 50);
}
