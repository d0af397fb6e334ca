#pragma once

// Exact integer and rational linear algebra.
//
// Everything here works over GMP integers and rationals. There is no floating
// point anywhere in the library; balancing has to hold exactly.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace msl {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Dense row-major matrix.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::initializer_list<std::initializer_list<long>> init);

  static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols_if_empty = 0);
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<T> row(std::size_t r) const;
  std::vector<T> col(std::size_t c) const;
  void append_row(std::span<const T> values);

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

RatMatrix to_rational(const IntMatrix& m);
RatVector to_rational(std::span<const Integer> v);

/// Exact determinant of a square integer matrix (fraction-free Bareiss elimination).
Integer determinant(const IntMatrix& m);

/// gcd of all k x k minors of a k x n matrix with k <= n; zero iff rank < k.
/// Columns subsets are visited lexicographically and the scan stops once the
/// running gcd reaches 1.
Integer gcd_maximal_minors(const IntMatrix& m);

std::size_t rank(const RatMatrix& m);
std::size_t rank(const IntMatrix& m);

struct PrimitiveLength {
  IntVector primitive;
  Integer length;
};

/// v = length * primitive with gcd(primitive) = 1; the zero vector gives (0, 0).
PrimitiveLength primitive_and_length(std::span<const Integer> v);

/// gcd of the entries, 0 for the zero vector.
Integer content(std::span<const Integer> v);

/// Reduced row echelon form with lexicographic (leftmost, topmost) pivoting.
/// Returns the pivot column of each nonzero row.
std::vector<std::size_t> row_reduce(RatMatrix& m);

/// Some solution x of A x = b, or nullopt. Free variables are set to zero, so
/// the result is a deterministic function of (A, b).
std::optional<RatVector> solve_rational(const RatMatrix& a, std::span<const Rational> b);

/// True iff v is in the rational span of the generators.
bool in_rational_span(std::span<const Rational> v, const std::vector<RatVector>& generators);

/// Basis (as columns) of the rational kernel of A.
RatMatrix rational_kernel(const RatMatrix& a);

/// Basis (as columns) of the saturated lattice Z^n cap ker(A), obtained by
/// unimodular column reduction. The column count equals n - rank(A).
IntMatrix integer_kernel(const IntMatrix& a);

/// Integer coefficients c with sum a_i c_i = gcd(a). Requires a != 0.
IntVector bezout_coefficients(std::span<const Integer> a);

/// Clears denominators: the smallest positive multiple of v with integer entries.
IntVector clear_denominators(std::span<const Rational> v);

IntVector mat_vec(const IntMatrix& m, std::span<const Integer> v);
RatVector mat_vec(const RatMatrix& m, std::span<const Rational> v);
IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b);

std::string to_string(const Rational& q);

}  // namespace msl
