#include "mukai/optimize.hpp"

#include <algorithm>
#include <optional>

#include "mukai/error.hpp"

namespace mukai {

LpSolution solve(const LinearProgram& lp) {
  if (lp.objective.size() != lp.feasible.ambient_dim())
    throw Error(ErrorKind::DimensionMismatch, "objective length differs from the feasible region's dimension");
  std::vector<RatVector> verts;
  try {
    verts = lp.feasible.vertices();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Empty) throw Error(ErrorKind::Infeasible, "feasible region is empty");
    throw;
  }
  // vertices() is sorted, so the first maximiser is the lexicographic minimum.
  std::size_t best = 0;
  Rational best_value = dot(lp.objective, verts[0]);
  for (std::size_t i = 1; i < verts.size(); ++i) {
    Rational v = dot(lp.objective, verts[i]);
    if (v > best_value) {
      best_value = v;
      best = i;
    }
  }
  return LpSolution{best_value, verts[best], true};
}

namespace {

class Tableau {
 public:
  Tableau(RatMatrix body, RatVector rhs, std::vector<std::size_t> basis)
      : t_(std::move(body)), rhs_(std::move(rhs)), basis_(std::move(basis)) {}

  std::size_t rows() const { return t_.rows(); }
  std::size_t cols() const { return t_.cols(); }
  const std::vector<std::size_t>& basis() const { return basis_; }
  const RatVector& rhs() const { return rhs_; }
  const Rational& at(std::size_t i, std::size_t j) const { return t_(i, j); }

  void pivot(std::size_t r, std::size_t c) {
    Rational inv = 1 / t_(r, c);
    for (std::size_t j = 0; j < cols(); ++j) t_(r, j) *= inv;
    rhs_[r] *= inv;
    for (std::size_t i = 0; i < rows(); ++i) {
      if (i == r || t_(i, c) == 0) continue;
      Rational f = t_(i, c);
      for (std::size_t j = 0; j < cols(); ++j) t_(i, j) -= f * t_(r, j);
      rhs_[i] -= f * rhs_[r];
    }
    basis_[r] = c;
  }

  void drop_row(std::size_t r) {
    RatMatrix smaller(rows() - 1, cols());
    RatVector rhs;
    std::vector<std::size_t> basis;
    for (std::size_t i = 0, k = 0; i < rows(); ++i) {
      if (i == r) continue;
      for (std::size_t j = 0; j < cols(); ++j) smaller(k, j) = t_(i, j);
      rhs.push_back(rhs_[i]);
      basis.push_back(basis_[i]);
      ++k;
    }
    t_ = std::move(smaller);
    rhs_ = std::move(rhs);
    basis_ = std::move(basis);
  }

  /// Maximise <cost, x> using only columns < allowed as entering variables.
  /// Returns false when unbounded.
  bool optimise(const RatVector& cost, std::size_t allowed) {
    while (true) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < allowed && !entering; ++j) {
        Rational reduced = cost[j];
        for (std::size_t i = 0; i < rows(); ++i) reduced -= cost[basis_[i]] * t_(i, j);
        if (reduced > 0) entering = j;
      }
      if (!entering) return true;
      std::optional<std::size_t> leaving;
      Rational best_ratio;
      for (std::size_t i = 0; i < rows(); ++i) {
        if (t_(i, *entering) <= 0) continue;
        Rational ratio = rhs_[i] / t_(i, *entering);
        if (!leaving || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[*leaving])) {
          leaving = i;
          best_ratio = ratio;
        }
      }
      if (!leaving) return false;
      pivot(*leaving, *entering);
    }
  }

 private:
  RatMatrix t_;
  RatVector rhs_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LpSolution simplex_standard_form(const RatMatrix& a, const RatVector& b, const RatVector& c) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (b.size() != m || c.size() != n) throw Error(ErrorKind::DimensionMismatch, "LP data shapes disagree");

  // Phase 1 on [A | I] with artificial slacks, rows sign-normalised.
  RatMatrix body(m, n + m);
  RatVector rhs(m);
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const int sign = b[i] < 0 ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) body(i, j) = sign * a(i, j);
    body(i, n + i) = 1;
    rhs[i] = sign * b[i];
    basis[i] = n + i;
  }
  Tableau tab(std::move(body), std::move(rhs), std::move(basis));
  RatVector phase1(n + m);
  for (std::size_t j = n; j < n + m; ++j) phase1[j] = -1;
  tab.optimise(phase1, n + m);
  Rational infeasibility = 0;
  for (std::size_t i = 0; i < tab.rows(); ++i)
    if (tab.basis()[i] >= n) infeasibility += tab.rhs()[i];
  if (infeasibility != 0) throw Error(ErrorKind::Infeasible, "no nonnegative solution of the equality system");

  // Drive remaining (zero-level) artificials out, dropping redundant rows.
  for (std::size_t i = 0; i < tab.rows();) {
    if (tab.basis()[i] < n) {
      ++i;
      continue;
    }
    std::optional<std::size_t> col;
    for (std::size_t j = 0; j < n && !col; ++j)
      if (tab.at(i, j) != 0) col = j;
    if (col) {
      tab.pivot(i, *col);
      ++i;
    } else {
      tab.drop_row(i);
    }
  }

  RatVector phase2(n + m);
  for (std::size_t j = 0; j < n; ++j) phase2[j] = c[j];
  if (!tab.optimise(phase2, n)) throw Error(ErrorKind::Unbounded, "objective is unbounded on the feasible set");

  LpSolution sol;
  sol.argmax.assign(n, Rational(0));
  for (std::size_t i = 0; i < tab.rows(); ++i) sol.argmax[tab.basis()[i]] = tab.rhs()[i];
  sol.value = dot(c, sol.argmax);
  sol.vertex_witness = true;
  return sol;
}

LpSolution solve_equality_form(const std::vector<IntVector>& generators, const IntVector& target) {
  if (generators.empty()) throw Error(ErrorKind::Validation, "equality-form LP needs at least one generator");
  const std::size_t d = target.size();
  for (const auto& g : generators)
    if (g.size() != d) throw Error(ErrorKind::DimensionMismatch, "generator length differs from target length");
  RatMatrix a(d, generators.size());
  for (std::size_t j = 0; j < generators.size(); ++j)
    for (std::size_t i = 0; i < d; ++i) a(i, j) = generators[j][i];
  RatVector ones(generators.size(), Rational(1));
  return simplex_standard_form(a, to_rational(target), ones);
}

}  // namespace mukai
