#include "mukai/report.hpp"

#include <sstream>

#include "mukai/error.hpp"
#include "mukai/nefindex.hpp"

namespace mukai {
namespace {

std::string join_factors(const std::vector<std::size_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::string vec_string(const RatVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s + ")";
}

std::string vec_string(const IntVector& v) { return vec_string(to_rational(v)); }

template <class T>
Json opt(const std::optional<T>& x) {
  if (!x) return nullptr;
  if constexpr (std::is_same_v<T, Rational>)
    return rational_to_json(*x);
  else
    return Json(*x);
}

}  // namespace

MukaiReport report_fan(const Fan& f) {
  if (!f.is_complete()) throw Error(ErrorKind::NotComplete, "the fan is not complete");
  MukaiReport r;
  r.source = "fan";
  r.dim = f.lattice_dim();
  r.mukai_rhs = r.dim;
  r.flags.toric_detected = true;
  r.flags.smooth = f.is_smooth();
  r.flags.q_factorial = is_q_factorial(f);

  const DivisorClassGroup cl = class_group(f);
  r.class_rank = cl.free_rank;
  r.picard_rank = picard_rank(f);
  r.nef_cone_rays = nef_cone(f).rays().size();
  r.derivation["class_rank"] = "free rank of Z^rays / image of the lattice";
  r.derivation["picard_rank"] = "rank of Cartier divisors modulo characters";
  r.derivation["nef_cone_rays"] = "extreme rays of the cone of classes nonnegative on all wall curves";
  if (!cl.torsion.empty()) r.notes.push_back("Cl(X) has torsion");

  const Anticanonical k = anticanonical(f);
  r.flags.gorenstein = k.gorenstein;
  r.flags.fano = false;
  if (!k.q_cartier) {
    r.notes.push_back("-K is not Q-Cartier: pseudo-index and Fano property undefined");
    return r;
  }
  r.pseudo_index = pseudo_index(f);
  r.flags.fano = is_fano(f);
  r.derivation["pseudo_index"] = "min of -K . C over torus-invariant wall curves C";

  const Rational iota_minus_one = *r.pseudo_index - 1;
  r.mukai_lhs = iota_minus_one * Rational(*r.picard_rank);
  r.mukai_lhs_class_rank = iota_minus_one * Rational(*r.class_rank);
  r.margin = Rational(r.dim) - *r.mukai_lhs;
  r.derivation["mukai_lhs"] = "(iota - 1) * rho, generalised Mukai inequality";
  r.derivation["mukai_lhs_class_rank"] = "(iota - 1) * rk Cl";
  r.derivation["margin"] = "dim - (iota - 1) * rho";

  const bool fano = *r.flags.fano, q_factorial = *r.flags.q_factorial;
  if (fano && q_factorial && *r.mukai_lhs > Rational(r.dim))
    throw Error(ErrorKind::Inconsistency, "(iota - 1) rho = " + to_string(*r.mukai_lhs) + " exceeds dim = " +
                                              std::to_string(r.dim) + " on a Q-factorial Fano fan");
  if (fano && !q_factorial && *r.mukai_lhs_class_rank > Rational(r.dim))
    r.notes.push_back("(iota - 1) rk Cl exceeds dim: the class-group form of the inequality fails without Q-factoriality");

  if (*r.mukai_lhs == Rational(r.dim)) {
    if (*r.flags.smooth) r.equality_case = recognize_projective_space_product(f);
    r.derivation["equality_case"] = "factor dimensions of a product of projective spaces";
    if (!r.equality_case) r.notes.push_back("equality holds but the fan is not a product of projective spaces");
  }

  if (fano && *r.flags.gorenstein) {
    const ClassPolytopeData data = class_polytope(f);
    TotalIndexFields t;
    t.p_x_size = data.p_x.size();
    t.tau_z = tau_z(data).value;
    const RationalTotalIndex tq = tau_q(data);
    t.tau_q = tq.value;
    for (std::size_t i = 0; i < tq.witness.classes.size(); ++i)
      t.tau_q_witness.emplace_back(tq.witness.classes[i], tq.witness.coefficients[i]);
    const MukaiTypeMargin m = mukai_type_margin(f, data, t.tau_q);
    t.type_margin = m.margin;
    t.type_equality = m.equality;
    if (!m.consistent) r.notes.push_back("Mukai-type margin and product recognition disagree");
    r.total_index = std::move(t);
    r.derivation["tau_z"] = "max parts of an integral nef partition of -K within P_X";
    r.derivation["tau_q"] = "LP optimum of rational nef partitions of -K within P_X";
    r.derivation["mukai_type_margin"] = "dim + rho - tau_Q";
  }
  return r;
}

MukaiReport report_spherical(const SphericalRecord& rec, std::optional<std::size_t> rho,
                             std::optional<Rational> iota) {
  MukaiReport r;
  r.source = "spherical";
  r.notes = rec.validate();
  r.dim = rec.dim;
  r.mukai_rhs = rec.dim;
  r.picard_rank = rho;
  r.pseudo_index = iota;

  const PFunctionResult p = p_tilde(rec);
  SphericalFields s;
  s.rank = rec.rank;
  s.q_star_vertices = q_star(rec).vertices();
  s.lp_value = p.lp_value;
  s.argmax_theta = p.argmax_theta;
  s.witness_terms = p.witness_divisor;
  s.witness_divisor = format_divisor(p.witness_divisor);
  r.spherical = std::move(s);
  r.p_tilde = p.value;
  r.flags.toric_detected = p.toric_flag;
  r.derivation["p_tilde"] = "dim - rk - max over Q* ∩ T of sum (m_D - 1 + <rho(D), theta>)";
  r.derivation["upper_bound"] = "dim - P~ bounds (iota - 1) * rho";
  r.derivation["toric_detected"] = "P~ < 1";

  const MukaiBound b = mukai_bound(rec, p, rho, iota);
  r.upper_bound = b.upper_bound;
  r.mukai_lhs = b.lhs;
  for (const auto& n : b.notes) r.notes.push_back(n);
  if (b.lhs) {
    r.margin = b.upper_bound - *b.lhs;
    r.derivation["mukai_lhs"] = "(iota - 1) * rho from the supplied values";
    r.derivation["margin"] = "dim - P~ - (iota - 1) * rho";
  }
  if (b.violated)
    throw Error(ErrorKind::Inconsistency, "supplied (iota - 1) rho = " + to_string(*b.lhs) +
                                              " exceeds dim - P~ = " + to_string(b.upper_bound));
  if (b.equality_case) {
    const Rational n = *iota - 1;
    if (denominator(n) == 1 && n > 0)
      r.equality_case = std::vector<std::size_t>(*rho, static_cast<std::size_t>(numerator(n)));
    r.derivation["equality_case"] = "rho copies of iota - 1";
  }
  return r;
}

Json to_json(const MukaiReport& r) {
  Json j;
  j["source"] = r.source;
  j["dim"] = r.dim;
  j["class_rank"] = opt(r.class_rank);
  j["picard_rank"] = opt(r.picard_rank);
  j["pseudo_index"] = opt(r.pseudo_index);
  j["p_tilde"] = opt(r.p_tilde);
  j["tau_z"] = r.total_index ? integer_to_json(r.total_index->tau_z) : Json(nullptr);
  j["tau_q"] = r.total_index ? rational_to_json(r.total_index->tau_q) : Json(nullptr);
  j["nef_cone_rays"] = opt(r.nef_cone_rays);
  j["mukai_lhs"] = opt(r.mukai_lhs);
  j["mukai_lhs_class_rank"] = opt(r.mukai_lhs_class_rank);
  j["mukai_rhs"] = r.mukai_rhs;
  j["upper_bound"] = opt(r.upper_bound);
  j["margin"] = opt(r.margin);
  j["equality_case"] = opt(r.equality_case);

  if (r.spherical) {
    const auto& s = *r.spherical;
    Json d;
    d["rank"] = s.rank;
    Json verts = Json::array();
    for (const auto& v : s.q_star_vertices) verts.push_back(to_json(v));
    d["q_star_vertices"] = std::move(verts);
    d["lp_value"] = rational_to_json(s.lp_value);
    d["argmax_theta"] = to_json(s.argmax_theta);
    d["witness_divisor"] = s.witness_divisor;
    Json terms = Json::object();
    for (const auto& t : s.witness_terms) terms[t.name] = rational_to_json(t.coefficient);
    d["witness_coefficients"] = std::move(terms);
    j["spherical_details"] = std::move(d);
  } else {
    j["spherical_details"] = nullptr;
  }

  if (r.total_index) {
    const auto& t = *r.total_index;
    Json d;
    d["p_x_size"] = t.p_x_size;
    Json w = Json::array();
    for (const auto& [cls, coef] : t.tau_q_witness) w.push_back(Json{{"class", to_json(cls)}, {"coefficient", rational_to_json(coef)}});
    d["tau_q_witness"] = std::move(w);
    d["mukai_type_margin"] = rational_to_json(t.type_margin);
    d["mukai_type_equality"] = t.type_equality;
    j["total_index_details"] = std::move(d);
  } else {
    j["total_index_details"] = nullptr;
  }

  j["flags"] = Json{{"q_factorial", opt(r.flags.q_factorial)},
                    {"gorenstein", opt(r.flags.gorenstein)},
                    {"fano", opt(r.flags.fano)},
                    {"toric_detected", opt(r.flags.toric_detected)},
                    {"smooth", opt(r.flags.smooth)}};
  Json der = Json::object();
  for (const auto& [k, v] : r.derivation) der[k] = v;
  j["derivation"] = std::move(der);
  j["notes"] = r.notes;
  return j;
}

std::string to_text(const MukaiReport& r) {
  std::ostringstream out;
  auto line = [&](const std::string& key, const std::string& value) { out << key << ": " << value << "\n"; };
  line("source", r.source);
  line("dim", std::to_string(r.dim));
  if (r.class_rank) line("class_rank", std::to_string(*r.class_rank));
  if (r.picard_rank) line("picard_rank", std::to_string(*r.picard_rank));
  if (r.pseudo_index) line("pseudo_index", to_string(*r.pseudo_index));
  if (r.spherical) {
    const auto& s = *r.spherical;
    line("rank", std::to_string(s.rank));
    std::string verts;
    for (const auto& v : s.q_star_vertices) verts += (verts.empty() ? "" : " ") + vec_string(v);
    line("q_star_vertices", verts);
    line("lp_value", to_string(s.lp_value) + " at theta = " + vec_string(s.argmax_theta));
    line("witness_divisor", s.witness_divisor);
  }
  if (r.p_tilde) line("p_tilde", to_string(*r.p_tilde));
  if (r.nef_cone_rays) line("nef_cone_rays", std::to_string(*r.nef_cone_rays));
  if (r.total_index) {
    const auto& t = *r.total_index;
    line("p_x_size", std::to_string(t.p_x_size));
    line("tau_z", to_string(t.tau_z));
    line("tau_q", to_string(t.tau_q));
    for (const auto& [cls, coef] : t.tau_q_witness) line("  tau_q part", to_string(coef) + " * " + vec_string(cls));
    line("mukai_type_margin", to_string(t.type_margin));
  }
  if (r.mukai_lhs) line("mukai_lhs", to_string(*r.mukai_lhs));
  if (r.mukai_lhs_class_rank) line("mukai_lhs_class_rank", to_string(*r.mukai_lhs_class_rank));
  line("mukai_rhs", std::to_string(r.mukai_rhs));
  if (r.upper_bound) line("upper_bound", to_string(*r.upper_bound));
  if (r.margin) line("margin", to_string(*r.margin));
  if (r.equality_case) line("equality_case", join_factors(*r.equality_case));
  std::string flags;
  for (const auto& [name, value] : {std::pair{"q_factorial", r.flags.q_factorial}, std::pair{"gorenstein", r.flags.gorenstein},
                                    std::pair{"fano", r.flags.fano}, std::pair{"toric_detected", r.flags.toric_detected},
                                    std::pair{"smooth", r.flags.smooth}})
    if (value) flags += std::string(flags.empty() ? "" : " ") + name + "=" + (*value ? "true" : "false");
  line("flags", flags);
  for (const auto& n : r.notes) line("note", n);
  return out.str();
}

}  // namespace mukai
