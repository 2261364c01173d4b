#include "mukai/exactmath.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <utility>

namespace mukai {

template <typename T>
Matrix<T> Matrix<T>::from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

template <typename T>
std::vector<T> Matrix<T>::row(std::size_t i) const {
  return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                        data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

template <typename T>
std::vector<T> Matrix<T>::col(std::size_t j) const {
  std::vector<T> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

template <typename T>
Matrix<T> Matrix<T>::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

template class Matrix<Integer>;
template class Matrix<Rational>;

namespace {

template <typename T>
Matrix<T> multiply(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
  Matrix<T> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

template <typename T>
std::vector<T> apply(const Matrix<T>& a, const std::vector<T>& x) {
  if (a.cols() != x.size()) throw std::invalid_argument("matrix-vector shape mismatch");
  std::vector<T> y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
  return y;
}

template <typename T>
void check_same_size(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
}

}  // namespace

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) { return multiply(a, b); }
RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) { return multiply(a, b); }
IntVector operator*(const IntMatrix& a, const IntVector& x) { return apply(a, x); }
RatVector operator*(const RatMatrix& a, const RatVector& x) { return apply(a, x); }

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

RatVector to_rational(const IntVector& v) { return RatVector(v.begin(), v.end()); }

Integer dot(const IntVector& a, const IntVector& b) {
  check_same_size(a, b);
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const RatVector& a, const RatVector& b) {
  check_same_size(a, b);
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const IntVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * b[i];
  return s;
}

IntVector operator+(const IntVector& a, const IntVector& b) {
  check_same_size(a, b);
  IntVector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

IntVector operator-(const IntVector& a, const IntVector& b) {
  check_same_size(a, b);
  IntVector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

IntVector operator-(const IntVector& a) {
  IntVector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = -a[i];
  return c;
}

IntVector operator*(const Integer& s, const IntVector& a) {
  IntVector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = s * a[i];
  return c;
}

RatVector operator+(const RatVector& a, const RatVector& b) {
  check_same_size(a, b);
  RatVector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

RatVector operator-(const RatVector& a, const RatVector& b) {
  check_same_size(a, b);
  RatVector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

RatVector operator*(const Rational& s, const RatVector& a) {
  RatVector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = s * a[i];
  return c;
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

bool is_zero(const RatVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

Integer content(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) {
    if (x != 0) g = boost::multiprecision::gcd(g, x);
    if (g == 1) break;
  }
  return abs(g);
}

IntVector primitive(const IntVector& v) {
  Integer g = content(v);
  if (g == 0 || g == 1) return v;
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

IntVector primitive(const RatVector& v) {
  Integer l = 1;
  for (const auto& x : v) {
    if (x == 0) continue;
    l = boost::multiprecision::lcm(l, Integer(denominator(x)));
  }
  IntVector scaled(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) scaled[i] = Integer(numerator(Rational(v[i] * l)));
  return primitive(scaled);
}

bool is_integral(const RatVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return denominator(x) == 1; });
}

IntVector to_integer(const RatVector& v) {
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (denominator(v[i]) != 1) throw std::invalid_argument("vector is not integral");
    out[i] = numerator(v[i]);
  }
  return out;
}

Integer floor_div(const Integer& a, const Integer& b) {
  if (b == 0) throw std::domain_error("division by zero");
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

Integer floor(const Rational& q) { return floor_div(numerator(q), denominator(q)); }

Integer ceil(const Rational& q) { return -floor_div(-numerator(q), denominator(q)); }

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row[dst] += factor * row[src]
void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += factor * m(src, j);
}

void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += factor * m(i, src);
}

void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

}  // namespace

IntVector SmithForm::diagonal() const {
  IntVector d(std::min(S.rows(), S.cols()));
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = S(i, i);
  return d;
}

std::size_t SmithForm::rank() const {
  std::size_t r = 0;
  for (const auto& d : diagonal())
    if (d != 0) ++r;
  return r;
}

SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t R = m.rows();
  const std::size_t C = m.cols();
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(R);
  IntMatrix v = IntMatrix::identity(C);

  for (std::size_t t = 0; t < std::min(R, C); ++t) {
    bool exhausted = false;
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pi = 0, pj = 0;
      bool found = false;
      for (std::size_t i = t; i < R; ++i)
        for (std::size_t j = t; j < C; ++j)
          if (a(i, j) != 0 && (!found || abs(a(i, j)) < abs(a(pi, pj)))) {
            pi = i;
            pj = j;
            found = true;
          }
      if (!found) {
        exhausted = true;
        break;
      }
      swap_rows(a, t, pi);
      swap_rows(u, t, pi);
      swap_cols(a, t, pj);
      swap_cols(v, t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < R; ++i) {
        if (a(i, t) == 0) continue;
        Integer q = a(i, t) / a(t, t);
        add_row(a, i, t, -q);
        add_row(u, i, t, -q);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < C; ++j) {
        if (a(t, j) == 0) continue;
        Integer q = a(t, j) / a(t, t);
        add_col(a, j, t, -q);
        add_col(v, j, t, -q);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      bool divides = true;
      for (std::size_t i = t + 1; i < R && divides; ++i)
        for (std::size_t j = t + 1; j < C; ++j)
          if (a(i, j) % a(t, t) != 0) {
            add_row(a, t, i, Integer(1));
            add_row(u, t, i, Integer(1));
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (exhausted) break;
    if (a(t, t) < 0) {
      negate_row(a, t);
      negate_row(u, t);
    }
  }
  return SmithForm{std::move(u), std::move(a), std::move(v)};
}

// ---------------------------------------------------------------------------
// Hermite normal form

namespace {

// g = x*a + y*b with g = gcd(a, b) >= 0.
void extended_gcd(const Integer& a, const Integer& b, Integer& g, Integer& x, Integer& y) {
  Integer old_r = a, r = b;
  Integer old_s = 1, s = 0;
  Integer old_t = 0, t = 1;
  while (r != 0) {
    Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  g = old_r;
  x = old_s;
  y = old_t;
}

// Replace rows (p, q) by (x*p + y*q, -(b/g)*p + (a/g)*q); determinant 1.
void combine_rows(IntMatrix& m, std::size_t p, std::size_t q, const Integer& x, const Integer& y,
                  const Integer& bg, const Integer& ag) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Integer mp = m(p, j), mq = m(q, j);
    m(p, j) = x * mp + y * mq;
    m(q, j) = -bg * mp + ag * mq;
  }
}

}  // namespace

HermiteForm hermite_normal_form(const IntMatrix& m) {
  const std::size_t R = m.rows();
  const std::size_t C = m.cols();
  IntMatrix a = m;
  IntMatrix t = IntMatrix::identity(R);
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < C && row < R; ++col) {
    for (std::size_t i = row + 1; i < R; ++i) {
      if (a(i, col) == 0) continue;
      if (a(row, col) == 0) {
        swap_rows(a, row, i);
        swap_rows(t, row, i);
        continue;
      }
      Integer g, x, y;
      extended_gcd(a(row, col), a(i, col), g, x, y);
      Integer ag = a(row, col) / g;
      Integer bg = a(i, col) / g;
      combine_rows(a, row, i, x, y, bg, ag);
      combine_rows(t, row, i, x, y, bg, ag);
    }
    if (a(row, col) == 0) continue;
    if (a(row, col) < 0) {
      negate_row(a, row);
      negate_row(t, row);
    }
    for (std::size_t i = 0; i < row; ++i) {
      Integer q = floor_div(a(i, col), a(row, col));
      add_row(a, i, row, -q);
      add_row(t, i, row, -q);
    }
    pivots.push_back(col);
    ++row;
  }
  IntMatrix basis(row, C);
  for (std::size_t i = 0; i < row; ++i)
    for (std::size_t j = 0; j < C; ++j) basis(i, j) = a(i, j);
  return HermiteForm{std::move(basis), std::move(t), std::move(pivots)};
}

// ---------------------------------------------------------------------------
// Rational elimination

namespace {

struct Echelon {
  RatMatrix reduced;
  std::vector<std::size_t> pivots;
};

Echelon reduced_row_echelon(RatMatrix a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && a(p, col) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(row, j));
    Rational inv = 1 / a(row, col);
    for (std::size_t j = col; j < a.cols(); ++j) a(row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col) == 0) continue;
      Rational f = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= f * a(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return Echelon{std::move(a), std::move(pivots)};
}

}  // namespace

std::size_t rank(const RatMatrix& m) { return reduced_row_echelon(m).pivots.size(); }

std::size_t rank(const IntMatrix& m) { return rank(to_rational(m)); }

std::vector<RatVector> rational_kernel(const RatMatrix& m) {
  Echelon e = reduced_row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVector x(m.cols());
    x[f] = 1;
    for (std::size_t k = 0; k < e.pivots.size(); ++k) x[e.pivots[k]] = -e.reduced(k, f);
    basis.push_back(std::move(x));
  }
  return basis;
}

std::vector<RatVector> rational_kernel(const IntMatrix& m) { return rational_kernel(to_rational(m)); }

std::vector<IntVector> integer_kernel(const IntMatrix& m) {
  SmithForm snf = smith_normal_form(m);
  std::size_t r = snf.rank();
  std::vector<IntVector> gens;
  for (std::size_t j = r; j < m.cols(); ++j) gens.push_back(snf.V.col(j));
  return lattice_basis(gens, m.cols());
}

std::vector<IntVector> lattice_basis(const std::vector<IntVector>& vectors, std::size_t dim) {
  if (vectors.empty()) return {};
  HermiteForm h = hermite_normal_form(IntMatrix::from_rows(vectors, dim));
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < h.basis.rows(); ++i) out.push_back(h.basis.row(i));
  return out;
}

std::optional<RatVector> solve_linear(const RatMatrix& m, const RatVector& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("right-hand side length mismatch");
  RatMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  Echelon e = reduced_row_echelon(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  RatVector x(m.cols());
  for (std::size_t k = 0; k < e.pivots.size(); ++k) x[e.pivots[k]] = e.reduced(k, m.cols());
  return x;
}

Rational determinant(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  RatMatrix a = m;
  Rational det = 1;
  const std::size_t n = a.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && a(p, col) == 0) ++p;
    if (p == n) return 0;
    if (p != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(col, j));
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a(i, col) == 0) continue;
      Rational f = a(i, col) / a(col, col);
      for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
    }
  }
  return det;
}

Integer determinant(const IntMatrix& m) { return numerator(determinant(to_rational(m))); }

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  Echelon e = reduced_row_echelon(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

// ---------------------------------------------------------------------------
// Text form

std::string to_string(const Integer& z) { return z.str(); }

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

Integer parse_integer(std::string_view text) {
  text = trim(text);
  if (!is_integer_literal(text)) throw std::invalid_argument("malformed integer: '" + std::string(text) + "'");
  if (text.front() == '+') text.remove_prefix(1);
  return Integer(std::string(text));
}

Rational parse_rational(std::string_view text) {
  text = trim(text);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  std::string_view den_text = trim(text.substr(slash + 1));
  if (!den_text.empty() && den_text.front() == '-')
    throw std::invalid_argument("denominator must be positive: '" + std::string(text) + "'");
  Integer den = parse_integer(den_text);
  if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  return Rational(num, den);
}

}  // namespace mukai
