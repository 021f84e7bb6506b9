#pragma once

// Dense exact matrices over Z, Q and real quadratic fields Q(sqrt d),
// together with determinants, characteristic polynomials, Smith normal
// form and determinant divisors.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace nilgraph {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when matrix dimensions do not fit the requested operation.
class DimensionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// a + b*sqrt(d) with a, b rational and d a square-free integer > 1.
///
/// Elements with b == 0 are plain rationals and combine with any d; d == 0
/// marks such a rational that has not yet been tied to a field.
class QuadExt {
public:
  QuadExt() = default;
  QuadExt(long v) : a_(v) {}                      // NOLINT(google-explicit-constructor)
  QuadExt(const Integer &v) : a_(v) {}            // NOLINT(google-explicit-constructor)
  QuadExt(const Rational &v) : a_(v) {}           // NOLINT(google-explicit-constructor)
  QuadExt(Rational a, Rational b, long d);

  const Rational &rational_part() const { return a_; }
  const Rational &sqrt_part() const { return b_; }
  long radicand() const { return d_; }
  bool is_rational() const { return b_ == 0; }

  /// a^2 - d b^2
  Rational norm() const;
  QuadExt conjugate() const;
  QuadExt inverse() const;

  QuadExt &operator+=(const QuadExt &o);
  QuadExt &operator-=(const QuadExt &o);
  QuadExt &operator*=(const QuadExt &o);
  QuadExt &operator/=(const QuadExt &o);
  QuadExt operator-() const;

  friend QuadExt operator+(QuadExt x, const QuadExt &y) { return x += y; }
  friend QuadExt operator-(QuadExt x, const QuadExt &y) { return x -= y; }
  friend QuadExt operator*(QuadExt x, const QuadExt &y) { return x *= y; }
  friend QuadExt operator/(QuadExt x, const QuadExt &y) { return x /= y; }
  friend bool operator==(const QuadExt &x, const QuadExt &y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_ == 0 || x.d_ == y.d_);
  }
  friend bool operator!=(const QuadExt &x, const QuadExt &y) { return !(x == y); }
  friend std::ostream &operator<<(std::ostream &os, const QuadExt &x);

private:
  long merged_radicand(const QuadExt &o) const;

  Rational a_;
  Rational b_;
  long d_ = 0;
};

/// True when d > 1 has no square factor.
bool is_square_free(long d);

template <class T> struct ScalarTraits;

template <> struct ScalarTraits<Integer> {
  static constexpr bool is_field = false;
  static Integer zero() { return 0; }
  static Integer one() { return 1; }
  static bool is_zero(const Integer &x) { return sgn(x) == 0; }
};

template <> struct ScalarTraits<Rational> {
  static constexpr bool is_field = true;
  static Rational zero() { return 0; }
  static Rational one() { return 1; }
  static bool is_zero(const Rational &x) { return sgn(x) == 0; }
};

template <> struct ScalarTraits<QuadExt> {
  static constexpr bool is_field = true;
  static QuadExt zero() { return {}; }
  static QuadExt one() { return QuadExt(1L); }
  static bool is_zero(const QuadExt &x) { return x == QuadExt(); }
};

/// Row-major dense matrix. Entries are exact scalars.
template <class T> class Matrix {
public:
  using value_type = T;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, ScalarTraits<T>::zero()) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init);

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = ScalarTraits<T>::one();
    return m;
  }
  static Matrix from_rows(const std::vector<std::vector<T>> &rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T &operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
  }
  std::vector<T> col(std::size_t j) const {
    std::vector<T> c;
    c.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
    return c;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  Matrix &operator+=(const Matrix &o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix &operator-=(const Matrix &o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix &b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix &b) { return a -= b; }
  friend Matrix operator*(const Matrix &a, const Matrix &b) {
    if (a.cols_ != b.rows_) throw DimensionError("matrix product: inner dimensions differ");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T &aik = a(i, k);
        if (ScalarTraits<T>::is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }
  friend Matrix operator*(const T &s, Matrix m) {
    for (auto &x : m.data_) x = s * x;
    return m;
  }
  friend bool operator==(const Matrix &a, const Matrix &b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix &a, const Matrix &b) { return !(a == b); }

  std::vector<T> apply(const std::vector<T> &v) const {
    if (v.size() != cols_) throw DimensionError("matrix-vector product: size mismatch");
    std::vector<T> out(rows_, ScalarTraits<T>::zero());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  const std::vector<T> &data() const { return data_; }

private:
  void require_same_shape(const Matrix &o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix shapes differ");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<T>> init) {
  rows_ = init.size();
  cols_ = rows_ ? init.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto &r : init) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

template <class T> Matrix<T> Matrix<T>::from_rows(const std::vector<std::vector<T>> &rows) {
  Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw DimensionError("ragged matrix rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;
using QuadMatrix = Matrix<QuadExt>;

template <class T> std::ostream &operator<<(std::ostream &os, const Matrix<T> &m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
    os << ']';
  }
  return os << ']';
}

RatMatrix to_rational(const IntMatrix &m);
QuadMatrix to_quad(const RatMatrix &m);
/// Throws std::domain_error when some entry is not an integer.
IntMatrix to_integer(const RatMatrix &m);
bool is_integral(const RatMatrix &m);

/// Block diagonal matrix from square blocks.
template <class T> Matrix<T> block_diagonal(const std::vector<Matrix<T>> &blocks) {
  std::size_t n = 0;
  for (const auto &b : blocks) n += b.rows();
  Matrix<T> out(n, n);
  std::size_t off = 0;
  for (const auto &b : blocks) {
    if (!b.is_square()) throw DimensionError("block_diagonal: non-square block");
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) out(off + i, off + j) = b(i, j);
    off += b.rows();
  }
  return out;
}

/// Diagonal matrix diag(values).
template <class T> Matrix<T> diagonal(const std::vector<T> &values) {
  Matrix<T> m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

// ---------------------------------------------------------------------------
// Polynomials

/// Dense univariate polynomial, coefficients lowest degree first.
/// The zero polynomial has no coefficients.
template <class T> class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { normalize(); }
  Polynomial(std::initializer_list<T> coeffs) : c_(coeffs) { normalize(); }

  static Polynomial monomial(std::size_t degree, T coeff = ScalarTraits<T>::one()) {
    std::vector<T> c(degree + 1, ScalarTraits<T>::zero());
    c[degree] = std::move(coeff);
    return Polynomial(std::move(c));
  }

  const std::vector<T> &coefficients() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  T coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : ScalarTraits<T>::zero(); }
  T leading() const { return c_.empty() ? ScalarTraits<T>::zero() : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == ScalarTraits<T>::one(); }

  T eval(const T &x) const { return (*this)(x); }
  T operator()(const T &x) const {
    T acc = ScalarTraits<T>::zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// x^deg * p(1/x)
  Polynomial reversed() const {
    return Polynomial(std::vector<T>(c_.rbegin(), c_.rend()));
  }

  friend Polynomial operator+(const Polynomial &a, const Polynomial &b) {
    std::vector<T> c(std::max(a.c_.size(), b.c_.size()), ScalarTraits<T>::zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator-(const Polynomial &a, const Polynomial &b) {
    std::vector<T> c(std::max(a.c_.size(), b.c_.size()), ScalarTraits<T>::zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator*(const Polynomial &a, const Polynomial &b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> c(a.c_.size() + b.c_.size() - 1, ScalarTraits<T>::zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(c));
  }
  friend bool operator==(const Polynomial &a, const Polynomial &b) { return a.c_ == b.c_; }
  friend bool operator!=(const Polynomial &a, const Polynomial &b) { return !(a == b); }

private:
  void normalize() {
    while (!c_.empty() && ScalarTraits<T>::is_zero(c_.back())) c_.pop_back();
  }

  std::vector<T> c_;
};

using IntPoly = Polynomial<Integer>;
using RatPoly = Polynomial<Rational>;

/// Human-readable form in the variable x, e.g. "x^2 - 3x + 1".
std::string to_string(const IntPoly &p);
std::string to_string(const RatPoly &p);
IntPoly to_integer(const RatPoly &p);

/// Product of a list of polynomials.
IntPoly product(const std::vector<IntPoly> &factors);

// ---------------------------------------------------------------------------
// Determinants and characteristic polynomials

namespace detail {

// Fraction-free Bareiss elimination; exact division at every step.
inline Integer bareiss_det(IntMatrix a) {
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(a(p, k)) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = std::move(t);
      }
    prev = a(k, k);
  }
  return sign > 0 ? Integer(a(n - 1, n - 1)) : Integer(-a(n - 1, n - 1));
}

template <class T> T gauss_det(Matrix<T> a) {
  const std::size_t n = a.rows();
  T det = ScalarTraits<T>::one();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && ScalarTraits<T>::is_zero(a(p, k))) ++p;
    if (p == n) return ScalarTraits<T>::zero();
    if (p != k) {
      a.swap_rows(k, p);
      det = -det;
    }
    det *= a(k, k);
    const T inv = ScalarTraits<T>::one() / a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (ScalarTraits<T>::is_zero(a(i, k))) continue;
      const T f = a(i, k) * inv;
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

} // namespace detail

template <class T> T det(const Matrix<T> &m) {
  if (!m.is_square()) throw DimensionError("det: matrix is not square");
  if constexpr (std::is_same_v<T, Integer>)
    return detail::bareiss_det(m);
  else
    return detail::gauss_det(m);
}

/// det(x*I - M) via the division-free Berkowitz recursion; exact over any
/// commutative ring.
template <class T> Polynomial<T> char_poly(const Matrix<T> &m) {
  if (!m.is_square()) throw DimensionError("char_poly: matrix is not square");
  const std::size_t n = m.rows();
  // coefficients of det(x I - A_k), highest degree first, for the leading
  // k x k principal submatrix
  std::vector<T> p{ScalarTraits<T>::one()};
  for (std::size_t k = 0; k < n; ++k) {
    // Toeplitz column: 1, -a_kk, -R C, -R A C, ..., length k + 2
    std::vector<T> col(k + 2, ScalarTraits<T>::zero());
    col[0] = ScalarTraits<T>::one();
    col[1] = -m(k, k);
    std::vector<T> c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = m(i, k);
    for (std::size_t step = 2; step < k + 2; ++step) {
      T s = ScalarTraits<T>::zero();
      for (std::size_t i = 0; i < k; ++i) s += m(k, i) * c[i];
      col[step] = -s;
      std::vector<T> next(k, ScalarTraits<T>::zero());
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) next[i] += m(i, j) * c[j];
      c = std::move(next);
    }
    std::vector<T> q(k + 2, ScalarTraits<T>::zero());
    for (std::size_t i = 0; i < k + 2; ++i)
      for (std::size_t j = 0; j <= i && j < p.size(); ++j) q[i] += col[i - j] * p[j];
    p = std::move(q);
  }
  return Polynomial<T>(std::vector<T>(p.rbegin(), p.rend()));
}

/// Characteristic polynomial with integral coefficients and constant term +-1.
bool is_integer_like(const RatMatrix &m);
bool is_integer_like(const IntMatrix &m);

template <class T> bool has_eigenvalue_one(const Matrix<T> &m) {
  if (!m.is_square()) throw DimensionError("has_eigenvalue_one: matrix is not square");
  return ScalarTraits<T>::is_zero(det(m - Matrix<T>::identity(m.rows())));
}

// ---------------------------------------------------------------------------
// Elimination over fields

template <class T> struct RowEchelon {
  Matrix<T> reduced;               // reduced row echelon form
  std::vector<std::size_t> pivots; // pivot column per nonzero row
};

template <class T> RowEchelon<T> row_echelon(Matrix<T> a) {
  static_assert(ScalarTraits<T>::is_field, "row_echelon needs a field");
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && ScalarTraits<T>::is_zero(a(p, c))) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(r, p);
    const T inv = ScalarTraits<T>::one() / a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || ScalarTraits<T>::is_zero(a(i, c))) continue;
      const T f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), std::move(pivots)};
}

template <class T> std::size_t rank(const Matrix<T> &m) {
  if constexpr (std::is_same_v<T, Integer>)
    return row_echelon(to_rational(m)).pivots.size();
  else
    return row_echelon(m).pivots.size();
}

/// Inverse over a field; throws std::domain_error when singular.
template <class T> Matrix<T> inverse(const Matrix<T> &m) {
  if (!m.is_square()) throw DimensionError("inverse: matrix is not square");
  const std::size_t n = m.rows();
  Matrix<T> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = ScalarTraits<T>::one();
  }
  auto ech = row_echelon(std::move(aug));
  if (ech.pivots.size() < n || ech.pivots[n - 1] != n - 1)
    throw std::domain_error("inverse: matrix is singular");
  Matrix<T> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = ech.reduced(i, n + j);
  return inv;
}

/// Basis of {x : M x = 0} over a field (columns of the result).
template <class T> Matrix<T> nullspace(const Matrix<T> &m) {
  auto ech = row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : ech.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix<T> basis(m.cols(), free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    basis(free_cols[k], k) = ScalarTraits<T>::one();
    for (std::size_t r = 0; r < ech.pivots.size(); ++r)
      basis(ech.pivots[r], k) = -ech.reduced(r, free_cols[k]);
  }
  return basis;
}

// ---------------------------------------------------------------------------
// Smith normal form and determinant divisors

struct SNFResult {
  IntMatrix S; // diagonal, s_1 | s_2 | ..., nonnegative, zeros trailing
  IntMatrix U; // unimodular, rows x rows
  IntMatrix V; // unimodular, cols x cols
  std::size_t rank = 0;

  /// Nonzero diagonal entries s_1..s_rank.
  std::vector<Integer> invariant_factors() const;
};

/// U * M * V == S.
SNFResult smith_normal_form(const IntMatrix &m);

/// gcd of all l x l minors (0 when every such minor vanishes). Uses minor
/// enumeration for min(rows, cols) <= 6 and the Smith form otherwise.
Integer determinant_divisor(const IntMatrix &m, std::size_t l);

/// Minor enumeration only.
Integer determinant_divisor_by_minors(const IntMatrix &m, std::size_t l);

/// Integer basis (rows) of {z in Z^rows : z M = 0}.
IntMatrix left_integer_kernel(const IntMatrix &m);

/// Resultant via the Sylvester determinant.
Integer resultant(const IntPoly &p, const IntPoly &q);

/// Companion matrix of a monic polynomial: first row holds the negated
/// coefficients from x^{d-1} down to x^0, ones on the subdiagonal.
IntMatrix companion_matrix(const IntPoly &p);

} // namespace nilgraph
