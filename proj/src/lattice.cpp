#include "msl/lattice.hpp"

#include <algorithm>
#include <numeric>

#include "msl/error.hpp"

namespace msl {

template <typename T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<long>> init) {
  rows_ = init.size();
  cols_ = rows_ == 0 ? 0 : init.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : init) {
    if (r.size() != cols_) throw InputError("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

template <typename T>
Matrix<T> Matrix<T>::from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols_if_empty) {
  Matrix m(rows.size(), rows.empty() ? cols_if_empty : rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw InputError("ragged matrix rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

template <typename T>
Matrix<T> Matrix<T>::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

template <typename T>
std::vector<T> Matrix<T>::row(std::size_t r) const {
  return std::vector<T>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

template <typename T>
std::vector<T> Matrix<T>::col(std::size_t c) const {
  std::vector<T> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
  return out;
}

template <typename T>
void Matrix<T>::append_row(std::span<const T> values) {
  if (rows_ == 0 && cols_ == 0) cols_ = values.size();
  if (values.size() != cols_) throw InputError("row length mismatch");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

template class Matrix<Integer>;
template class Matrix<Rational>;

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = Rational(m(r, c));
  return out;
}

RatVector to_rational(std::span<const Integer> v) {
  RatVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

Integer determinant(const IntMatrix& in) {
  if (in.rows() != in.cols()) throw InputError("determinant of a non-square matrix");
  const std::size_t n = in.rows();
  if (n == 0) return 1;
  IntMatrix m = in;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(swap_row, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = t;
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

Integer gcd_maximal_minors(const IntMatrix& m) {
  const std::size_t k = m.rows();
  const std::size_t n = m.cols();
  if (k == 0) throw InputError("gcd of maximal minors needs at least one row");
  if (k > n) throw InputError("underdetermined minor shape");

  std::vector<std::size_t> cols(k);
  std::iota(cols.begin(), cols.end(), 0);
  Integer g = 0;
  IntMatrix minor(k, k);
  while (true) {
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c) minor(r, c) = m(r, cols[c]);
    Integer d = determinant(minor);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    if (g == 1) break;
    // next k-subset in lexicographic order
    std::size_t i = k;
    while (i > 0 && cols[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++cols[i - 1];
    for (std::size_t j = i; j < k; ++j) cols[j] = cols[j - 1] + 1;
  }
  return g;
}

std::vector<std::size_t> row_reduce(RatMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t prow = 0;
  for (std::size_t c = 0; c < m.cols() && prow < m.rows(); ++c) {
    std::size_t r = prow;
    while (r < m.rows() && m(r, c) == 0) ++r;
    if (r == m.rows()) continue;
    if (r != prow)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(prow, j));
    const Rational inv = 1 / m(prow, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(prow, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == prow || m(i, c) == 0) continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(prow, j);
    }
    pivots.push_back(c);
    ++prow;
  }
  return pivots;
}

std::size_t rank(const RatMatrix& m) {
  RatMatrix copy = m;
  return row_reduce(copy).size();
}

std::size_t rank(const IntMatrix& m) { return rank(to_rational(m)); }

Integer content(std::span<const Integer> v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

PrimitiveLength primitive_and_length(std::span<const Integer> v) {
  PrimitiveLength out{IntVector(v.begin(), v.end()), content(v)};
  if (out.length != 0)
    for (auto& x : out.primitive) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), out.length.get_mpz_t());
  return out;
}

std::optional<RatVector> solve_rational(const RatMatrix& a, std::span<const Rational> b) {
  if (b.size() != a.rows()) throw InputError("solve_rational: shape mismatch");
  RatMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  const auto pivots = row_reduce(aug);
  RatVector x(a.cols(), Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == a.cols()) return std::nullopt;
    x[pivots[r]] = aug(r, a.cols());
  }
  return x;
}

bool in_rational_span(std::span<const Rational> v, const std::vector<RatVector>& generators) {
  for (const auto& g : generators)
    if (g.size() != v.size()) throw InputError("in_rational_span: dimension mismatch");
  if (generators.empty()) return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
  // Solve G c = v where the generators are the columns of G.
  RatMatrix g(v.size(), generators.size());
  for (std::size_t c = 0; c < generators.size(); ++c)
    for (std::size_t r = 0; r < v.size(); ++r) g(r, c) = generators[c][r];
  return solve_rational(g, v).has_value();
}

RatMatrix rational_kernel(const RatMatrix& a) {
  RatMatrix m = a;
  const auto pivots = row_reduce(m);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < a.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  RatMatrix k(a.cols(), free_cols.size());
  for (std::size_t f = 0; f < free_cols.size(); ++f) {
    k(free_cols[f], f) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) k(pivots[r], f) = -m(r, free_cols[f]);
  }
  return k;
}

IntMatrix integer_kernel(const IntMatrix& a) {
  const std::size_t n = a.cols();
  IntMatrix w = a;
  IntMatrix u = IntMatrix::identity(n);
  auto col_axpy = [&](std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t r = 0; r < w.rows(); ++r) w(r, dst) -= q * w(r, src);
    for (std::size_t r = 0; r < n; ++r) u(r, dst) -= q * u(r, src);
  };
  auto col_swap = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < w.rows(); ++r) std::swap(w(r, i), w(r, j));
    for (std::size_t r = 0; r < n; ++r) std::swap(u(r, i), u(r, j));
  };

  std::size_t p = 0;
  for (std::size_t i = 0; i < w.rows() && p < n; ++i) {
    while (true) {
      std::size_t best = n;
      std::size_t nonzero = 0;
      for (std::size_t j = p; j < n; ++j) {
        if (w(i, j) == 0) continue;
        ++nonzero;
        if (best == n || abs(w(i, j)) < abs(w(i, best))) best = j;
      }
      if (nonzero == 0) break;
      if (nonzero == 1) {
        col_swap(best, p);
        ++p;
        break;
      }
      for (std::size_t j = p; j < n; ++j) {
        if (j == best || w(i, j) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), w(i, j).get_mpz_t(), w(i, best).get_mpz_t());
        col_axpy(j, best, q);
      }
    }
  }
  IntMatrix k(n, n - p);
  for (std::size_t c = p; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r) k(r, c - p) = u(r, c);
  return k;
}

IntVector bezout_coefficients(std::span<const Integer> a) {
  IntVector coeff(a.size(), Integer(0));
  Integer g = 0;
  bool started = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    if (!started) {
      g = a[i];
      coeff[i] = 1;
      started = true;
      continue;
    }
    Integer g2, s, t;
    mpz_gcdext(g2.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), g.get_mpz_t(), a[i].get_mpz_t());
    for (std::size_t j = 0; j < i; ++j) coeff[j] *= s;
    coeff[i] = t;
    g = g2;
  }
  if (!started) throw InputError("bezout_coefficients of the zero vector");
  if (g < 0)
    for (auto& c : coeff) c = -c;
  return coeff;
}

IntVector clear_denominators(std::span<const Rational> v) {
  Integer l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  IntVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(Integer(x * l));
  return out;
}

IntVector mat_vec(const IntMatrix& m, std::span<const Integer> v) {
  if (v.size() != m.cols()) throw InputError("mat_vec: shape mismatch");
  IntVector out(m.rows(), Integer(0));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r] += m(r, c) * v[c];
  return out;
}

RatVector mat_vec(const RatMatrix& m, std::span<const Rational> v) {
  if (v.size() != m.cols()) throw InputError("mat_vec: shape mismatch");
  RatVector out(m.rows(), Rational(0));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r] += m(r, c) * v[c];
  return out;
}

namespace {

template <typename T>
Matrix<T> mat_mul_impl(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw InputError("mat_mul: shape mismatch");
  Matrix<T> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

}  // namespace

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) { return mat_mul_impl(a, b); }
RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) { return mat_mul_impl(a, b); }

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

}  // namespace msl
