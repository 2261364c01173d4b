#pragma once

// Exact integer and rational linear algebra.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace mukai {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Dense row-major matrix. Values are immutable once handed out by the
/// algorithms below; the mutating accessors exist for construction.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  /// All rows must have length `cols`; `cols` is needed when `rows` is empty.
  static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols);
  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    return from_rows(rows, rows.empty() ? 0 : rows.front().size());
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const;
  std::vector<T> col(std::size_t j) const;
  Matrix transpose() const;

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
IntVector operator*(const IntMatrix& a, const IntVector& x);
RatVector operator*(const RatMatrix& a, const RatVector& x);

RatMatrix to_rational(const IntMatrix& m);
RatVector to_rational(const IntVector& v);

Integer dot(const IntVector& a, const IntVector& b);
Rational dot(const RatVector& a, const RatVector& b);
Rational dot(const IntVector& a, const RatVector& b);

IntVector operator+(const IntVector& a, const IntVector& b);
IntVector operator-(const IntVector& a, const IntVector& b);
IntVector operator-(const IntVector& a);
IntVector operator*(const Integer& s, const IntVector& a);
RatVector operator+(const RatVector& a, const RatVector& b);
RatVector operator-(const RatVector& a, const RatVector& b);
RatVector operator*(const Rational& s, const RatVector& a);

bool is_zero(const IntVector& v);
bool is_zero(const RatVector& v);

/// gcd of the absolute values of the entries; 0 for the zero vector.
Integer content(const IntVector& v);

/// v / content(v); the zero vector maps to itself.
IntVector primitive(const IntVector& v);

/// The primitive integer vector on the ray through v.
IntVector primitive(const RatVector& v);

/// True when every entry has denominator 1.
bool is_integral(const RatVector& v);
IntVector to_integer(const RatVector& v);  // requires is_integral

/// Floor division for integers, rounding towards negative infinity.
Integer floor_div(const Integer& a, const Integer& b);
Integer floor(const Rational& q);
Integer ceil(const Rational& q);

/// Smith normal form with transforms: U * m * V == S.
struct SmithForm {
  IntMatrix U;
  IntMatrix S;
  IntMatrix V;

  /// The diagonal d_1 | d_2 | ... of S, length min(rows, cols).
  IntVector diagonal() const;
  std::size_t rank() const;
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Row-style Hermite normal form of the lattice spanned by the rows of m.
/// `basis` holds the nonzero rows (echelon, positive pivots, entries above
/// each pivot reduced into [0, pivot)); `transform * m` reproduces the full
/// HNF including trailing zero rows, with `transform` unimodular.
struct HermiteForm {
  IntMatrix basis;
  IntMatrix transform;
  std::vector<std::size_t> pivot_cols;
};

HermiteForm hermite_normal_form(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);
std::size_t rank(const RatMatrix& m);

/// Basis of {x : m x = 0} over Q, from the reduced row echelon form.
std::vector<RatVector> rational_kernel(const RatMatrix& m);
std::vector<RatVector> rational_kernel(const IntMatrix& m);

/// Z-basis of the lattice {x in Z^n : m x = 0}.
std::vector<IntVector> integer_kernel(const IntMatrix& m);

/// Canonical Z-basis (Hermite rows) of the lattice spanned by `vectors`.
std::vector<IntVector> lattice_basis(const std::vector<IntVector>& vectors, std::size_t dim);

/// One solution of m x = b, or nothing when the system is inconsistent.
/// Free variables are set to zero.
std::optional<RatVector> solve_linear(const RatMatrix& m, const RatVector& b);

Rational determinant(const RatMatrix& m);
Integer determinant(const IntMatrix& m);

/// Inverse of a square nonsingular matrix; nothing if singular.
std::optional<RatMatrix> inverse(const RatMatrix& m);

/// "p/q", or "p" when q == 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Accepts "p", "-p", "p/q"; throws std::invalid_argument on malformed
/// input or zero denominator.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

}  // namespace mukai
