#include "mukai/corpus.hpp"

namespace mukai {
namespace {

SphericalRecord conics_record(Integer m1) {
  SphericalRecord r;
  r.dim = 5;
  r.rank = 2;
  r.divisors = {{"X1", {-1, 0}, 1, false}, {"D1", {2, -1}, m1, true}, {"D2", {-1, 2}, 1, true}};
  r.valuation_cone_generators = {{-1, 0}, {0, -1}};
  return r;
}

std::vector<CorpusEntry> build() {
  std::vector<CorpusEntry> out;
  auto fan = [&](std::string name, std::string what, const Fan& f) {
    out.push_back({std::move(name), "fan", std::move(what), to_json(explicit_source(f))});
  };

  out.push_back({"conics", "spherical", "smooth conics in P^2 (wonderful variety, dim 5, rank 2)",
                 to_json(conics_record(1))});
  out.push_back({"conics_m2", "spherical", "the conics record with m(D1) raised to 2", to_json(conics_record(2))});
  {
    SphericalRecord r;
    r.dim = 3;
    r.rank = 1;
    r.divisors = {{"X1", {1}, 1, false}, {"D1", {-1}, 2, true}};
    r.valuation_cone_generators = {{1}, {-1}};
    out.push_back({"horospherical", "spherical", "rank one record whose valuation cone is the whole space", to_json(r)});
  }

  const std::vector<IntVector> vk_rays = {{1, 0, 0, 0},  {-1, 0, 0, 0}, {0, 1, 0, 0},  {0, -1, 0, 0},
                                          {0, 0, 1, 0},  {0, 0, -1, 0}, {0, 0, 0, 1},  {0, 0, 0, -1},
                                          {1, 1, 1, 1},  {-1, -1, -1, -1}};
  fan("vk4", "toric del Pezzo fourfold V4: face fan of the ten rays +-e_i, +-(1,1,1,1)", face_fan(vk_rays));

  {
    FanSource fig;
    fig.lattice_dim = 3;
    fig.polytope_vertices = std::vector<IntVector>{{-1, -1, -1}, {0, -1, -1}, {1, 0, -1}, {1, 1, -1},
                                                   {0, 1, -1},   {-1, 0, -1}, {0, 0, 1}};
    out.push_back({"fig1", "fan", "face fan of a reflexive 3-polytope with a hexagonal facet (not Q-factorial)",
                   to_json(fig)});
  }

  fan("p1", "projective line", projective_space(1));
  fan("p2", "projective plane", projective_space(2));
  fan("p5", "projective 5-space", projective_space(5));
  fan("p1xp1", "P^1 x P^1", product_of_projective_spaces({1, 1}));
  fan("p2xp2", "P^2 x P^2", product_of_projective_spaces({2, 2}));
  fan("p4xp4xp4", "P^4 x P^4 x P^4", product_of_projective_spaces({4, 4, 4}));
  fan("hirzebruch2", "Hirzebruch surface F_2 (smooth, not Fano)", hirzebruch(2));

  ConeSource c;
  c.ambient_dim = 2;
  c.generators = std::vector<IntVector>{{1, 0}, {1, 2}};
  out.push_back({"cone_1_0_1_2", "cone", "the cone spanned by (1,0) and (1,2)", to_json(c)});
  return out;
}

}  // namespace

FanSource explicit_source(const Fan& f) {
  FanSource s;
  s.lattice_dim = f.lattice_dim();
  s.rays = f.rays();
  s.max_cones = f.max_cones();
  return s;
}

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = build();
  return entries;
}

const CorpusEntry* find_corpus_entry(const std::string& name) {
  for (const auto& e : corpus())
    if (e.name == name) return &e;
  return nullptr;
}

}  // namespace mukai
