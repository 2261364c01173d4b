#include <random>

#include "doctest.h"
#include "mukai/error.hpp"
#include "mukai/toric.hpp"
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

Fan hexagon_facet_fan() {
  return face_fan({{-1, -1, -1}, {0, -1, -1}, {1, 0, -1}, {1, 1, -1}, {0, 1, -1}, {-1, 0, -1}, {0, 0, 1}});
}

Fan vk() {
  return face_fan({{1, 0, 0, 0}, {-1, 0, 0, 0}, {0, 1, 0, 0}, {0, -1, 0, 0}, {0, 0, 1, 0}, {0, 0, -1, 0}, {0, 0, 0, 1},
                   {0, 0, 0, -1}, {1, 1, 1, 1}, {-1, -1, -1, -1}});
}

Fan transform(const Fan& f, const std::vector<IntVector>& g) {
  std::vector<IntVector> rays;
  for (const auto& r : f.rays()) rays.push_back(oracle::apply(g, r));
  return Fan(f.lattice_dim(), rays, f.max_cones());
}

// Exhaustive search over set partitions of the rays: blocks summing to zero
// whose "omit one ray per block" cones are exactly the maximal cones.
std::optional<std::vector<std::size_t>> recognise_by_partitions(const Fan& f) {
  const std::size_t n = f.rays().size();
  std::set<std::vector<std::size_t>> cones(f.max_cones().begin(), f.max_cones().end());
  std::vector<std::size_t> label(n);
  std::optional<std::vector<std::size_t>> found;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t blocks) {
    if (found) return;
    if (i == n) {
      std::vector<std::vector<std::size_t>> parts(blocks);
      for (std::size_t r = 0; r < n; ++r) parts[label[r]].push_back(r);
      std::size_t total = 0, expected_cones = 1;
      for (const auto& p : parts) {
        if (p.size() < 2) return;
        IntVector sum(f.lattice_dim());
        for (auto r : p) sum = sum + f.rays()[r];
        if (!is_zero(sum)) return;
        total += p.size() - 1;
        expected_cones *= p.size();
      }
      if (total != f.lattice_dim() || expected_cones != cones.size()) return;
      // every choice of omitted rays must be a listed cone
      std::vector<std::size_t> pick(blocks, 0);
      while (true) {
        std::vector<std::size_t> cone;
        for (std::size_t r = 0; r < n; ++r)
          if (parts[label[r]][pick[label[r]]] != r) cone.push_back(r);
        if (!cones.count(cone)) return;
        std::size_t b = 0;
        while (b < blocks && ++pick[b] == parts[b].size()) pick[b++] = 0;
        if (b == blocks) break;
      }
      std::vector<std::size_t> dims;
      for (const auto& p : parts) dims.push_back(p.size() - 1);
      std::sort(dims.begin(), dims.end());
      found = dims;
      return;
    }
    for (std::size_t b = 0; b <= blocks; ++b) {
      label[i] = b;
      rec(i + 1, std::max(blocks, b + 1));
    }
  };
  rec(0, 0);
  return found;
}

}  // namespace

TEST_CASE("fan validation") {
  CHECK(kind_of([] { Fan(2, {{2, 0}, {0, 1}}, {{0, 1}}); }) == ErrorKind::Validation);
  CHECK(kind_of([] { Fan(2, {{1, 0}, {0, 1}}, {{0, 2}}); }) == ErrorKind::Validation);
  CHECK(kind_of([] { Fan(2, {{1, 0}, {0, 1}, {-1, 0}}, {{0, 1}}); }) == ErrorKind::Validation);
  CHECK(kind_of([] { Fan(2, {{1, 0}, {-1, 0}}, {{0, 1}}); }) == ErrorKind::Validation);
  CHECK(kind_of([] { face_fan({{0, 0}, {1, 0}, {0, 1}}); }) == ErrorKind::OriginNotInterior);
  CHECK(kind_of([] { face_fan({{1, 0}, {0, 1}, {1, 1}}); }) == ErrorKind::OriginNotInterior);
}

TEST_CASE("incomplete fans are detected") {
  Fan quadrant(2, {{1, 0}, {0, 1}}, {{0, 1}});
  CHECK(!quadrant.is_complete());
  CHECK(kind_of([&] { walls(quadrant); }) == ErrorKind::NotComplete);
  CHECK(kind_of([&] { pseudo_index(quadrant); }) == ErrorKind::NotComplete);
}

TEST_CASE("projective spaces") {
  for (std::size_t n = 1; n <= 5; ++n) {
    Fan f = projective_space(n);
    CAPTURE(n);
    CHECK(f.is_complete());
    CHECK(f.is_smooth());
    CHECK(walls(f).size() == n * (n + 1) / 2);
    CHECK(class_group(f).free_rank == 1);
    CHECK(class_group(f).torsion.empty());
    CHECK(picard_rank(f) == 1);
    CHECK(pseudo_index(f) == Rational(n + 1));
    CHECK(is_fano(f));
    CHECK(anticanonical(f).gorenstein);
    CHECK(nef_cone(f).rays().size() == 1);
  }
}

TEST_CASE("O(1) on the projective line has degree one on a point") {
  Fan p1 = projective_space(1);
  auto d = cartier_data(p1, {1, 0});
  REQUIRE(d);
  auto ws = walls(p1);
  REQUIRE(ws.size() == 1);
  CHECK(intersect_divisor_curve(*d, ws[0], p1) == 1);
  auto k = cartier_data(p1, {1, 1});
  CHECK(intersect_divisor_curve(*k, ws[0], p1) == 2);
}

TEST_CASE("surfaces: P1xP1 and Hirzebruch") {
  Fan q = product_of_projective_spaces({1, 1});
  CHECK(q.max_cones().size() == 4);
  CHECK(picard_rank(q) == 2);
  CHECK(pseudo_index(q) == 2);
  CHECK(nef_cone(q).rays().size() == 2);

  Fan f1 = hirzebruch(1);
  CHECK(is_fano(f1));
  CHECK(pseudo_index(f1) == 1);
  CHECK(picard_rank(f1) == 2);

  Fan f2 = hirzebruch(2);
  CHECK(f2.is_smooth());
  CHECK(!is_fano(f2));
  CHECK(pseudo_index(f2) == 0);
  CHECK(picard_rank(f2) == 2);
}

TEST_CASE("torsion in the class group") {
  // rays (2,-1), (-1,2), (-1,-1) span an index-3 sublattice
  Fan f(2, {{2, -1}, {-1, 2}, {-1, -1}}, {{0, 1}, {0, 2}, {1, 2}});
  auto cl = class_group(f);
  CHECK(cl.free_rank == 1);
  CHECK(cl.torsion == IntVector{3});
  CHECK(is_q_factorial(f));
  CHECK(!f.is_smooth());
}

TEST_CASE("reflexive polytope with a hexagonal facet") {
  Fan f = hexagon_facet_fan();
  CHECK(f.rays().size() == 7);
  CHECK(f.max_cones().size() == 7);
  CHECK(walls(f).size() == 12);
  CHECK(!f.is_simplicial());
  CHECK(!is_q_factorial(f));
  CHECK(class_group(f).free_rank == 4);
  CHECK(picard_rank(f) == 1);
  CHECK(pseudo_index(f) == 2);
  CHECK(is_fano(f));
  CHECK(anticanonical(f).gorenstein);
}

TEST_CASE("fan of the ten-ray fourfold") {
  Fan f = vk();
  CHECK(f.is_smooth());
  CHECK(f.max_cones().size() == 30);
  CHECK(is_fano(f));
  CHECK(picard_rank(f) == 6);
  CHECK(class_group(f).free_rank == 6);
  CHECK(pseudo_index(f) == 1);
  CHECK(nef_cone(f).rays().size() == 12);
}

TEST_CASE("property: principal divisors have zero class") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> u(-5, 5);
  for (const Fan& f : {vk(), hexagon_facet_fan(), hirzebruch(3), product_of_projective_spaces({2, 1})}) {
    PicardLattice pic(f);
    for (int t = 0; t < 20; ++t) {
      IntVector m(f.lattice_dim());
      for (auto& x : m) x = u(rng);
      IntVector div;
      for (const auto& r : f.rays()) div.push_back(dot(m, r));
      CHECK(is_zero(pic.class_coordinates(div)));
    }
    // Cartier basis divisors really are Cartier with the expected classes.
    for (std::size_t i = 0; i < pic.rank(); ++i) {
      auto c = cartier_data(f, pic.basis_divisors()[i]);
      REQUIRE(c);
      CHECK(c->integral);
      auto coords = pic.coordinates(pic.basis_divisors()[i]);
      REQUIRE(coords);
      RatVector e(pic.rank());
      e[i] = 1;
      CHECK(*coords == e);
    }
  }
}

TEST_CASE("property: invariants are unchanged by lattice automorphisms") {
  std::mt19937 rng(32);
  for (const Fan& f : {hexagon_facet_fan(), vk(), hirzebruch(1), projective_space(3)}) {
    const auto rho = picard_rank(f);
    const auto cl = class_group(f).free_rank;
    const auto iota = pseudo_index(f);
    const auto nef_rays = nef_cone(f).rays().size();
    for (int t = 0; t < 5; ++t) {
      Fan g = transform(f, oracle::random_unimodular(f.lattice_dim(), rng));
      CHECK(picard_rank(g) == rho);
      CHECK(class_group(g).free_rank == cl);
      CHECK(pseudo_index(g) == iota);
      CHECK(nef_cone(g).rays().size() == nef_rays);
      CHECK(is_fano(g) == is_fano(f));
    }
  }
}

TEST_CASE("product recogniser agrees with the set-partition oracle") {
  const std::vector<Fan> fans = {projective_space(1),
                                 projective_space(2),
                                 projective_space(4),
                                 product_of_projective_spaces({1, 1}),
                                 product_of_projective_spaces({1, 2}),
                                 product_of_projective_spaces({2, 2}),
                                 product_of_projective_spaces({1, 1, 1}),
                                 hirzebruch(1),
                                 hirzebruch(2),
                                 vk()};
  for (const auto& f : fans) {
    auto got = recognize_projective_space_product(f);
    auto want = recognise_by_partitions(f);
    CHECK(got == want);
  }
  CHECK(recognize_projective_space_product(product_of_projective_spaces({4, 4, 4})) == std::vector<std::size_t>{4, 4, 4});
  CHECK(!recognize_projective_space_product(vk()));
  CHECK(kind_of([] { recognize_projective_space_product(hexagon_facet_fan()); }) == ErrorKind::NotSmooth);
}
