#include "mukai/toric.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

#include "mukai/error.hpp"

namespace mukai {

namespace {

std::string format_indices(const std::vector<std::size_t>& idx) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < idx.size(); ++i) os << (i ? "," : "") << idx[i];
  os << '}';
  return os.str();
}

bool cone_is_smooth(const IntMatrix& m) {
  SmithForm snf = smith_normal_form(m);
  if (snf.rank() != m.rows()) return false;
  for (const auto& d : snf.diagonal())
    if (d != 1) return false;
  return true;
}

}  // namespace

Fan::Fan(std::size_t lattice_dim, std::vector<IntVector> rays, std::vector<std::vector<std::size_t>> max_cones)
    : dim_(lattice_dim), rays_(std::move(rays)), cones_(std::move(max_cones)) {
  if (dim_ == 0) throw Error(ErrorKind::Validation, "lattice dimension must be positive");
  std::set<IntVector> seen;
  for (std::size_t i = 0; i < rays_.size(); ++i) {
    const auto& r = rays_[i];
    if (r.size() != dim_) throw Error(ErrorKind::Validation, "ray " + std::to_string(i) + " has wrong length");
    if (is_zero(r)) throw Error(ErrorKind::Validation, "ray " + std::to_string(i) + " is zero");
    if (content(r) != 1) throw Error(ErrorKind::Validation, "ray " + std::to_string(i) + " is not primitive");
    if (!seen.insert(r).second) throw Error(ErrorKind::Validation, "ray " + std::to_string(i) + " is repeated");
  }
  if (cones_.empty()) throw Error(ErrorKind::Validation, "fan has no maximal cones");
  std::vector<bool> used(rays_.size(), false);
  for (std::size_t c = 0; c < cones_.size(); ++c) {
    auto& cone = cones_[c];
    std::sort(cone.begin(), cone.end());
    cone.erase(std::unique(cone.begin(), cone.end()), cone.end());
    if (cone.empty()) throw Error(ErrorKind::Validation, "maximal cone " + std::to_string(c) + " is empty");
    for (auto i : cone) {
      if (i >= rays_.size())
        throw Error(ErrorKind::Validation, "maximal cone " + std::to_string(c) + " references missing ray " + std::to_string(i));
      used[i] = true;
    }
    IntMatrix m = cone_matrix(c);
    if (rank(m) == cone.size()) continue;
    std::vector<IntVector> gens;
    for (auto i : cone) gens.push_back(rays_[i]);
    Cone sigma = Cone::from_generators(dim_, gens);
    if (!sigma.is_pointed())
      throw Error(ErrorKind::Validation, "maximal cone " + std::to_string(c) + " is not strongly convex");
    if (sigma.rays().size() != cone.size())
      throw Error(ErrorKind::Validation, "maximal cone " + std::to_string(c) + " lists a ray that is not extreme");
  }
  for (std::size_t i = 0; i < used.size(); ++i)
    if (!used[i]) throw Error(ErrorKind::Validation, "ray " + std::to_string(i) + " lies in no maximal cone");
}

IntMatrix Fan::cone_matrix(std::size_t cone) const {
  const auto& idx = cones_.at(cone);
  IntMatrix m(idx.size(), dim_);
  for (std::size_t k = 0; k < idx.size(); ++k)
    for (std::size_t j = 0; j < dim_; ++j) m(k, j) = rays_[idx[k]][j];
  return m;
}

bool Fan::is_simplicial() const {
  for (std::size_t c = 0; c < cones_.size(); ++c)
    if (rank(cone_matrix(c)) != cones_[c].size()) return false;
  return true;
}

bool Fan::is_smooth() const {
  for (std::size_t c = 0; c < cones_.size(); ++c)
    if (!cone_is_smooth(cone_matrix(c))) return false;
  return true;
}

namespace {

// Facets of maximal cone c as sorted global ray-index sets.
std::vector<std::vector<std::size_t>> cone_facets(const Fan& f, std::size_t c) {
  const auto& idx = f.max_cones()[c];
  std::vector<std::vector<std::size_t>> out;
  if (rank(f.cone_matrix(c)) == idx.size()) {
    for (std::size_t drop = 0; drop < idx.size(); ++drop) {
      std::vector<std::size_t> face;
      for (std::size_t k = 0; k < idx.size(); ++k)
        if (k != drop) face.push_back(idx[k]);
      out.push_back(std::move(face));
    }
    return out;
  }
  std::vector<IntVector> gens;
  for (auto i : idx) gens.push_back(f.rays()[i]);
  Cone sigma = Cone::from_generators(f.lattice_dim(), gens);
  for (std::size_t k = 0; k < sigma.facets().size(); ++k) {
    std::vector<std::size_t> face;
    for (auto i : idx)
      if (dot(sigma.facets()[k], f.rays()[i]) == 0) face.push_back(i);
    out.push_back(std::move(face));
  }
  return out;
}

using FacetMap = std::map<std::vector<std::size_t>, std::vector<std::size_t>>;

// Empty when some maximal cone is not full-dimensional.
std::optional<FacetMap> facet_map(const Fan& f) {
  FacetMap map;
  for (std::size_t c = 0; c < f.max_cones().size(); ++c) {
    if (rank(f.cone_matrix(c)) != f.lattice_dim()) return std::nullopt;
    for (auto& face : cone_facets(f, c)) map[face].push_back(c);
  }
  return map;
}

}  // namespace

bool Fan::is_complete() const {
  auto map = facet_map(*this);
  if (!map) return false;
  return std::all_of(map->begin(), map->end(), [](const auto& kv) { return kv.second.size() == 2; });
}

std::vector<Wall> walls(const Fan& f) {
  auto map = facet_map(f);
  if (!map) throw Error(ErrorKind::NotComplete, "a maximal cone is not full-dimensional");
  std::vector<Wall> out;
  for (const auto& [face, cones] : *map) {
    if (cones.size() != 2)
      throw Error(ErrorKind::NotComplete, "facet " + format_indices(face) + " lies in " +
                                              std::to_string(cones.size()) + " maximal cone(s)");
    Wall w{std::min(cones[0], cones[1]), std::max(cones[0], cones[1]), face, {}};
    IntMatrix shared(face.size(), f.lattice_dim());
    for (std::size_t k = 0; k < face.size(); ++k)
      for (std::size_t j = 0; j < f.lattice_dim(); ++j) shared(k, j) = f.rays()[face[k]][j];
    auto kernel = integer_kernel(shared);
    if (kernel.size() != 1) throw Error(ErrorKind::Validation, "wall " + format_indices(face) + " is not codimension one");
    IntVector normal = primitive(kernel[0]);
    for (auto i : f.max_cones()[w.second]) {
      Integer s = dot(normal, f.rays()[i]);
      if (s == 0) continue;
      if (s < 0) normal = -normal;
      break;
    }
    w.normal = std::move(normal);
    out.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end(), [](const Wall& a, const Wall& b) {
    return std::tie(a.first, a.second, a.shared_rays) < std::tie(b.first, b.second, b.shared_rays);
  });
  return out;
}

// ---------------------------------------------------------------------------
// Constructions

Fan face_fan(const std::vector<IntVector>& polytope_vertices) {
  if (polytope_vertices.empty()) throw Error(ErrorKind::Validation, "face fan needs at least one vertex");
  const std::size_t d = polytope_vertices.front().size();
  std::vector<IntVector> lifted;
  for (const auto& v : polytope_vertices) {
    if (v.size() != d) throw Error(ErrorKind::Validation, "vertices have differing lengths");
    IntVector w = v;
    w.push_back(1);
    lifted.push_back(std::move(w));
  }
  Cone hull = Cone::from_generators(d + 1, lifted);
  if (!hull.is_full_dimensional())
    throw Error(ErrorKind::OriginNotInterior, "polytope is not full-dimensional");
  for (const auto& facet : hull.facets())
    if (facet[d] <= 0) throw Error(ErrorKind::OriginNotInterior, "origin is not strictly inside the polytope");

  // Keep extreme input points, in input order.
  std::set<IntVector> extreme(hull.rays().begin(), hull.rays().end());
  std::vector<IntVector> vertices;
  for (const auto& w : lifted) {
    if (!extreme.count(primitive(w))) continue;
    IntVector v(w.begin(), w.end() - 1);
    if (std::find(vertices.begin(), vertices.end(), v) == vertices.end()) vertices.push_back(std::move(v));
  }
  std::vector<IntVector> rays;
  for (const auto& v : vertices) rays.push_back(primitive(v));

  std::vector<std::vector<std::size_t>> cones;
  for (const auto& facet : hull.facets()) {
    IntVector normal(facet.begin(), facet.end() - 1);
    std::vector<std::size_t> cone;
    for (std::size_t i = 0; i < vertices.size(); ++i)
      if (dot(normal, vertices[i]) + facet[d] == 0) cone.push_back(i);
    cones.push_back(std::move(cone));
  }
  std::sort(cones.begin(), cones.end());
  return Fan(d, std::move(rays), std::move(cones));
}

Fan projective_space(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::Validation, "projective space dimension must be positive");
  std::vector<IntVector> rays;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n);
    e[i] = 1;
    rays.push_back(std::move(e));
  }
  rays.push_back(IntVector(n, Integer(-1)));
  std::vector<std::vector<std::size_t>> cones;
  for (std::size_t skip = 0; skip <= n; ++skip) {
    std::vector<std::size_t> cone;
    for (std::size_t i = 0; i <= n; ++i)
      if (i != skip) cone.push_back(i);
    cones.push_back(std::move(cone));
  }
  return Fan(n, std::move(rays), std::move(cones));
}

Fan product(const Fan& a, const Fan& b) {
  const std::size_t da = a.lattice_dim(), db = b.lattice_dim();
  std::vector<IntVector> rays;
  for (const auto& r : a.rays()) {
    IntVector v = r;
    v.resize(da + db);
    rays.push_back(std::move(v));
  }
  for (const auto& r : b.rays()) {
    IntVector v(da);
    v.insert(v.end(), r.begin(), r.end());
    rays.push_back(std::move(v));
  }
  std::vector<std::vector<std::size_t>> cones;
  for (const auto& ca : a.max_cones())
    for (const auto& cb : b.max_cones()) {
      std::vector<std::size_t> cone = ca;
      for (auto i : cb) cone.push_back(i + a.rays().size());
      cones.push_back(std::move(cone));
    }
  return Fan(da + db, std::move(rays), std::move(cones));
}

Fan product_of_projective_spaces(const std::vector<std::size_t>& dims) {
  if (dims.empty()) throw Error(ErrorKind::Validation, "empty factor list");
  Fan out = projective_space(dims.front());
  for (std::size_t i = 1; i < dims.size(); ++i) out = product(out, projective_space(dims[i]));
  return out;
}

Fan hirzebruch(int a) {
  std::vector<IntVector> rays = {{1, 0}, {0, 1}, {-1, a}, {0, -1}};
  return Fan(2, std::move(rays), {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
}

// ---------------------------------------------------------------------------
// Divisors

DivisorClassGroup class_group(const Fan& f) {
  const std::size_t r = f.rays().size();
  IntMatrix rel(f.lattice_dim(), r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < f.lattice_dim(); ++j) rel(j, i) = f.rays()[i][j];
  SmithForm snf = smith_normal_form(rel);
  DivisorClassGroup g{r, rel, r - snf.rank(), {}};
  for (const auto& d : snf.diagonal())
    if (d > 1) g.torsion.push_back(d);
  return g;
}

std::optional<CartierData> cartier_data(const Fan& f, const IntVector& divisor) {
  if (divisor.size() != f.rays().size()) throw Error(ErrorKind::DimensionMismatch, "divisor length differs from ray count");
  CartierData out{divisor, {}, true};
  for (std::size_t c = 0; c < f.max_cones().size(); ++c) {
    RatMatrix m = to_rational(f.cone_matrix(c));
    RatVector rhs;
    for (auto i : f.max_cones()[c]) rhs.push_back(-Rational(divisor[i]));
    auto chi = solve_linear(m, rhs);
    if (!chi) return std::nullopt;
    if (!is_integral(*chi)) out.integral = false;
    out.characters.push_back(std::move(*chi));
  }
  return out;
}

Anticanonical anticanonical(const Fan& f) {
  Anticanonical k;
  k.divisor.assign(f.rays().size(), Integer(1));
  k.cartier = cartier_data(f, k.divisor);
  k.q_cartier = k.cartier.has_value();
  k.gorenstein = k.q_cartier && k.cartier->integral;
  return k;
}

Rational intersect_divisor_curve(const CartierData& d, const Wall& w, const Fan& f) {
  if (d.characters.size() != f.max_cones().size() || w.first >= d.characters.size() || w.second >= d.characters.size())
    throw Error(ErrorKind::NotCartierOnWall, "divisor has no characters on the cones of this wall");
  // m_first - m_second is a multiple c * normal; c is the intersection number.
  RatVector diff = d.characters[w.first] - d.characters[w.second];
  for (auto i : f.max_cones()[w.second]) {
    Integer s = dot(w.normal, f.rays()[i]);
    if (s != 0) return dot(f.rays()[i], diff) / Rational(s);
  }
  throw Error(ErrorKind::Validation, "wall cone lies inside its own wall");
}

bool is_q_factorial(const Fan& f) { return f.is_simplicial(); }

// ---------------------------------------------------------------------------
// Picard lattice

PicardLattice::PicardLattice(const Fan& f) {
  const std::size_t r = f.rays().size();
  const std::size_t n = f.lattice_dim();

  std::optional<std::size_t> smooth_cone;
  for (std::size_t c = 0; c < f.max_cones().size() && !smooth_cone; ++c)
    if (f.max_cones()[c].size() == n && cone_is_smooth(f.cone_matrix(c))) smooth_cone = c;

  if (smooth_cone) {
    const auto& base = f.max_cones()[*smooth_cone];
    RatMatrix base_inv = *inverse(to_rational(f.cone_matrix(*smooth_cone)));
    std::vector<bool> in_base(r, false);
    for (auto i : base) in_base[i] = true;
    class_map_ = IntMatrix(r - n, r);
    std::size_t row = 0;
    for (std::size_t i = 0; i < r; ++i) {
      if (in_base[i]) continue;
      // a_i - <v_i, B^{-1} a_base>
      class_map_(row, i) = 1;
      RatVector w = base_inv.transpose() * to_rational(f.rays()[i]);
      for (std::size_t k = 0; k < n; ++k) class_map_(row, base[k]) -= numerator(w[k]);
      ++row;
    }
    description_ = "classes of the divisors D_i for rays i outside maximal cone " + std::to_string(*smooth_cone) +
                   " " + format_indices(base);
  } else {
    IntMatrix v(r, n);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < n; ++j) v(i, j) = f.rays()[i][j];
    SmithForm snf = smith_normal_form(v);
    const std::size_t rk = snf.rank();
    class_map_ = IntMatrix(r - rk, r);
    for (std::size_t i = rk; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) class_map_(i - rk, j) = snf.U(i, j);
    description_ = "free part of Z^rays modulo characters, Smith coordinates";
  }

  // Cartier lattice: a|_s in im(V_s) for every maximal cone s. Congruences
  // get one slack variable each.
  std::vector<std::vector<Integer>> rows;
  std::vector<std::pair<std::size_t, Integer>> slacks;  // (row, modulus)
  for (std::size_t c = 0; c < f.max_cones().size(); ++c) {
    IntMatrix m = f.cone_matrix(c);
    if (cone_is_smooth(m)) continue;
    SmithForm snf = smith_normal_form(m);
    const auto& idx = f.max_cones()[c];
    IntVector diag = snf.diagonal();
    for (std::size_t i = 0; i < idx.size(); ++i) {
      Integer modulus = i < diag.size() ? diag[i] : Integer(0);
      if (modulus == 1) continue;
      std::vector<Integer> row(r);
      for (std::size_t k = 0; k < idx.size(); ++k) row[idx[k]] = snf.U(i, k);
      if (modulus != 0) slacks.emplace_back(rows.size(), modulus);
      rows.push_back(std::move(row));
    }
  }
  std::vector<IntVector> cartier_gens;
  if (rows.empty()) {
    for (std::size_t i = 0; i < r; ++i) {
      IntVector e(r);
      e[i] = 1;
      cartier_gens.push_back(std::move(e));
    }
  } else {
    IntMatrix sys(rows.size(), r + slacks.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < r; ++j) sys(i, j) = rows[i][j];
    for (std::size_t s = 0; s < slacks.size(); ++s) sys(slacks[s].first, r + s) = -slacks[s].second;
    for (const auto& k : integer_kernel(sys)) cartier_gens.emplace_back(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(r));
  }

  IntMatrix images(cartier_gens.size(), class_map_.rows());
  for (std::size_t g = 0; g < cartier_gens.size(); ++g) {
    IntVector c = class_map_ * cartier_gens[g];
    for (std::size_t j = 0; j < c.size(); ++j) images(g, j) = c[j];
  }
  HermiteForm h = hermite_normal_form(images);
  for (std::size_t j = 0; j < h.basis.rows(); ++j) {
    basis_.push_back(h.basis.row(j));
    IntVector d(r);
    for (std::size_t g = 0; g < cartier_gens.size(); ++g)
      if (h.transform(j, g) != 0) d = d + h.transform(j, g) * cartier_gens[g];
    basis_divisors_.push_back(std::move(d));
  }
}

IntVector PicardLattice::class_coordinates(const IntVector& divisor) const { return class_map_ * divisor; }

std::optional<RatVector> PicardLattice::coordinates(const IntVector& divisor) const {
  if (basis_.empty()) {
    if (is_zero(class_coordinates(divisor))) return RatVector{};
    return std::nullopt;
  }
  RatMatrix bt = to_rational(IntMatrix::from_rows(basis_, class_map_.rows())).transpose();
  return solve_linear(bt, to_rational(class_coordinates(divisor)));
}

IntVector PicardLattice::divisor(const IntVector& coordinates) const {
  if (coordinates.size() != basis_.size()) throw Error(ErrorKind::DimensionMismatch, "Pic coordinate length mismatch");
  IntVector d(class_map_.cols());
  for (std::size_t j = 0; j < coordinates.size(); ++j) d = d + coordinates[j] * basis_divisors_[j];
  return d;
}

std::vector<RatVector> wall_functionals(const Fan& f, const PicardLattice& pic, const std::vector<Wall>& ws) {
  std::vector<CartierData> data;
  for (const auto& d : pic.basis_divisors()) {
    auto c = cartier_data(f, d);
    if (!c) throw Error(ErrorKind::Inconsistency, "Picard basis divisor is not Cartier");
    data.push_back(std::move(*c));
  }
  std::vector<RatVector> out;
  for (const auto& w : ws) {
    RatVector row;
    for (const auto& d : data) row.push_back(intersect_divisor_curve(d, w, f));
    out.push_back(std::move(row));
  }
  return out;
}

std::size_t picard_rank(const Fan& f) {
  if (!f.is_complete()) throw Error(ErrorKind::NotComplete, "Picard rank requires a complete fan");
  return PicardLattice(f).rank();
}

Cone nef_cone(const Fan& f, const PicardLattice& pic) {
  std::vector<Wall> ws = walls(f);
  std::set<IntVector> rows;
  for (const auto& row : wall_functionals(f, pic, ws))
    if (!is_zero(row)) rows.insert(primitive(row));
  return Cone::from_inequalities(pic.rank(), {rows.begin(), rows.end()});
}

Cone nef_cone(const Fan& f) {
  if (!f.is_complete()) throw Error(ErrorKind::NotComplete, "nef cone requires a complete fan");
  return nef_cone(f, PicardLattice(f));
}

namespace {

std::vector<Rational> anticanonical_degrees(const Fan& f) {
  if (!f.is_complete()) throw Error(ErrorKind::NotComplete, "curve degrees require a complete fan");
  Anticanonical k = anticanonical(f);
  if (!k.q_cartier) throw Error(ErrorKind::NotQGorenstein, "the anticanonical divisor is not Q-Cartier");
  std::vector<Rational> out;
  for (const auto& w : walls(f)) out.push_back(intersect_divisor_curve(*k.cartier, w, f));
  return out;
}

}  // namespace

Rational pseudo_index(const Fan& f) {
  auto degrees = anticanonical_degrees(f);
  return *std::min_element(degrees.begin(), degrees.end());
}

bool is_fano(const Fan& f) {
  auto degrees = anticanonical_degrees(f);
  return std::all_of(degrees.begin(), degrees.end(), [](const Rational& d) { return d > 0; });
}

// ---------------------------------------------------------------------------
// Products of projective spaces

std::optional<std::vector<std::size_t>> recognize_projective_space_product(const Fan& f) {
  if (!f.is_smooth()) throw Error(ErrorKind::NotSmooth, "recogniser requires a smooth fan");
  const std::size_t r = f.rays().size();
  const auto& cones = f.max_cones();

  // Rays of one factor are never missing from the same maximal cone together.
  std::vector<std::size_t> parent(r);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::vector<bool>> in_cone(cones.size(), std::vector<bool>(r, false));
  for (std::size_t c = 0; c < cones.size(); ++c)
    for (auto i : cones[c]) in_cone[c][i] = true;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) {
      bool co_missing = false;
      for (std::size_t c = 0; c < cones.size() && !co_missing; ++c) co_missing = !in_cone[c][i] && !in_cone[c][j];
      if (!co_missing) parent[find(i)] = find(j);
    }
  std::map<std::size_t, std::vector<std::size_t>> blocks;
  for (std::size_t i = 0; i < r; ++i) blocks[find(i)].push_back(i);

  std::size_t expected_cones = 1;
  for (const auto& [root, block] : blocks) {
    IntVector sum(f.lattice_dim());
    for (auto i : block) sum = sum + f.rays()[i];
    if (!is_zero(sum) || block.size() < 2) return std::nullopt;
    expected_cones *= block.size();
    for (std::size_t c = 0; c < cones.size(); ++c) {
      std::size_t missing = 0;
      for (auto i : block) missing += in_cone[c][i] ? 0 : 1;
      if (missing != 1) return std::nullopt;
    }
  }
  std::set<std::vector<std::size_t>> distinct(cones.begin(), cones.end());
  if (distinct.size() != cones.size() || cones.size() != expected_cones) return std::nullopt;

  std::vector<std::size_t> dims;
  for (const auto& [root, block] : blocks) dims.push_back(block.size() - 1);
  std::sort(dims.begin(), dims.end());
  return dims;
}

}  // namespace mukai
