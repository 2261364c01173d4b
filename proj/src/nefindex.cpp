#include "mukai/nefindex.hpp"

#include <functional>
#include <map>
#include <set>

#include "mukai/error.hpp"
#include "mukai/optimize.hpp"

namespace mukai {

ClassPolytopeData class_polytope(const Fan& f) {
  if (!f.is_complete()) throw Error(ErrorKind::NotComplete, "class polytope requires a complete fan");
  if (!is_fano(f)) throw Error(ErrorKind::NotFano, "the anticanonical class is not ample");
  Anticanonical k = anticanonical(f);
  PicardLattice pic(f);
  auto coords = pic.coordinates(k.divisor);
  if (!coords || !is_integral(*coords))
    throw Error(ErrorKind::NotCartier, "the anticanonical divisor is not Cartier");

  ClassPolytopeData data{pic.description(), nef_cone(f, pic), to_integer(*coords), {}};
  const RatVector anti = to_rational(data.anticanonical_class);
  std::vector<Halfspace> hs;
  for (const auto& facet : data.nef_cone.facets()) {
    RatVector normal = to_rational(facet);
    hs.push_back({normal, 0});
    hs.push_back({Rational(-1) * normal, -dot(normal, anti)});
  }
  for (const auto& eq : data.nef_cone.equations()) {
    RatVector normal = to_rational(eq);
    hs.push_back({normal, 0});
    hs.push_back({Rational(-1) * normal, 0});
  }
  for (auto& p : lattice_points(Polytope(pic.rank(), std::move(hs))))
    if (!is_zero(p)) data.p_x.push_back(std::move(p));
  return data;
}

IntegerTotalIndex tau_z(const ClassPolytopeData& data) {
  if (data.p_x.empty()) throw Error(ErrorKind::NoPartition, "P_X is empty");
  // Every partial residual -K - (sum of chosen parts) lies in P_X ∪ {0}.
  std::set<IntVector> residuals(data.p_x.begin(), data.p_x.end());
  const IntVector zero(data.anticanonical_class.size());
  residuals.insert(zero);

  struct Best {
    Integer parts;
    std::size_t first_part;
  };
  std::map<IntVector, std::optional<Best>> memo;
  std::function<std::optional<Best>(const IntVector&)> search = [&](const IntVector& res) -> std::optional<Best> {
    if (res == zero) return Best{0, 0};
    if (auto it = memo.find(res); it != memo.end()) return it->second;
    std::optional<Best> best;
    for (std::size_t i = 0; i < data.p_x.size(); ++i) {
      IntVector rest = res - data.p_x[i];
      if (!residuals.count(rest)) continue;
      auto sub = search(rest);
      if (sub && (!best || sub->parts + 1 > best->parts)) best = Best{sub->parts + 1, i};
    }
    memo[res] = best;
    return best;
  };

  auto top = search(data.anticanonical_class);
  if (!top) throw Error(ErrorKind::NoPartition, "-K is not a sum of elements of P_X");
  IntegerTotalIndex out{top->parts, {}};
  IntVector res = data.anticanonical_class;
  while (res != zero) {
    auto step = *search(res);
    out.witness.classes.push_back(data.p_x[step.first_part]);
    out.witness.coefficients.push_back(1);
    res = res - data.p_x[step.first_part];
  }
  return out;
}

RationalTotalIndex tau_q(const ClassPolytopeData& data) {
  if (data.p_x.empty()) throw Error(ErrorKind::NoPartition, "P_X is empty");
  LpSolution sol = solve_equality_form(data.p_x, data.anticanonical_class);
  RationalTotalIndex out{sol.value, {}};
  for (std::size_t i = 0; i < data.p_x.size(); ++i) {
    if (sol.argmax[i] == 0) continue;
    out.witness.classes.push_back(data.p_x[i]);
    out.witness.coefficients.push_back(sol.argmax[i]);
  }
  return out;
}

std::vector<std::vector<std::size_t>> integer_nef_partitions(const ClassPolytopeData& data) {
  std::set<IntVector> residuals(data.p_x.begin(), data.p_x.end());
  const IntVector zero(data.anticanonical_class.size());
  residuals.insert(zero);
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> current;
  std::function<void(const IntVector&, std::size_t)> walk = [&](const IntVector& res, std::size_t from) {
    if (res == zero) {
      out.push_back(current);
      return;
    }
    for (std::size_t i = from; i < data.p_x.size(); ++i) {
      IntVector rest = res - data.p_x[i];
      if (!residuals.count(rest)) continue;
      current.push_back(i);
      walk(rest, i);
      current.pop_back();
    }
  };
  walk(data.anticanonical_class, 0);
  return out;
}

MukaiTypeMargin mukai_type_margin(const Fan& f, const ClassPolytopeData& data, const Rational& tau_q_value) {
  MukaiTypeMargin m;
  const std::size_t rho = data.nef_cone.ambient_dim();
  m.margin = Rational(f.lattice_dim() + rho) - tau_q_value;
  m.equality = m.margin == 0;
  if (f.is_smooth()) {
    m.recognized_factors = recognize_projective_space_product(f);
    m.consistent = m.equality == m.recognized_factors.has_value();
  }
  if (m.margin < 0) m.consistent = false;
  return m;
}

}  // namespace mukai
