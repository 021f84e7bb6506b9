#include "nilgraph/exact_linalg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace nilgraph {

// ---------------------------------------------------------------------------
// QuadExt

bool is_square_free(long d) {
  if (d < 2) return false;
  for (long p = 2; p * p <= d; ++p)
    if (d % (p * p) == 0) return false;
  return true;
}

QuadExt::QuadExt(Rational a, Rational b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
  a_.canonicalize();
  b_.canonicalize();
  if (b_ != 0 && !is_square_free(d_))
    throw std::invalid_argument("QuadExt: radicand must be square-free and > 1");
}

long QuadExt::merged_radicand(const QuadExt &o) const {
  if (b_ == 0) return o.b_ == 0 ? std::max(d_, o.d_) : o.d_;
  if (o.b_ == 0 || o.d_ == d_) return d_;
  throw std::invalid_argument("QuadExt: mixing different quadratic fields");
}

Rational QuadExt::norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }

QuadExt QuadExt::conjugate() const {
  QuadExt r = *this;
  r.b_ = -b_;
  return r;
}

QuadExt QuadExt::inverse() const {
  const Rational n = norm();
  if (n == 0) throw std::domain_error("QuadExt: inverse of zero");
  QuadExt r;
  r.a_ = a_ / n;
  r.b_ = -b_ / n;
  r.d_ = d_;
  return r;
}

QuadExt &QuadExt::operator+=(const QuadExt &o) {
  d_ = merged_radicand(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadExt &QuadExt::operator-=(const QuadExt &o) {
  d_ = merged_radicand(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadExt &QuadExt::operator*=(const QuadExt &o) {
  const long d = merged_radicand(o);
  Rational a = a_ * o.a_ + Rational(d) * b_ * o.b_;
  Rational b = a_ * o.b_ + o.a_ * b_;
  a_ = std::move(a);
  b_ = std::move(b);
  d_ = d;
  return *this;
}

QuadExt &QuadExt::operator/=(const QuadExt &o) {
  merged_radicand(o);
  return *this *= o.inverse();
}

QuadExt QuadExt::operator-() const {
  QuadExt r = *this;
  r.a_ = -a_;
  r.b_ = -b_;
  return r;
}

std::ostream &operator<<(std::ostream &os, const QuadExt &x) {
  if (x.b_ == 0) return os << x.a_;
  if (x.a_ != 0) os << x.a_ << (x.b_ > 0 ? "+" : "");
  return os << x.b_ << "*sqrt(" << x.d_ << ")";
}

// ---------------------------------------------------------------------------
// Conversions

RatMatrix to_rational(const IntMatrix &m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

QuadMatrix to_quad(const RatMatrix &m) {
  QuadMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = QuadExt(m(i, j));
  return r;
}

bool is_integral(const RatMatrix &m) {
  return std::all_of(m.data().begin(), m.data().end(),
                     [](const Rational &x) { return x.get_den() == 1; });
}

IntMatrix to_integer(const RatMatrix &m) {
  if (!is_integral(m)) throw std::domain_error("to_integer: non-integral entry");
  IntMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).get_num();
  return r;
}

// ---------------------------------------------------------------------------
// Polynomials

namespace {

template <class T> std::string poly_string(const Polynomial<T> &p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long i = p.degree(); i >= 0; --i) {
    const T &c = p.coefficients()[static_cast<std::size_t>(i)];
    if (sgn(c) == 0) continue;
    T mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag;
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

} // namespace

std::string to_string(const IntPoly &p) { return poly_string(p); }
std::string to_string(const RatPoly &p) { return poly_string(p); }

IntPoly to_integer(const RatPoly &p) {
  std::vector<Integer> c;
  for (const auto &x : p.coefficients()) {
    if (x.get_den() != 1) throw std::domain_error("to_integer: non-integral coefficient");
    c.emplace_back(x.get_num());
  }
  return IntPoly(std::move(c));
}

IntPoly product(const std::vector<IntPoly> &factors) {
  IntPoly acc{Integer(1)};
  for (const auto &f : factors) acc = acc * f;
  return acc;
}

bool is_integer_like(const RatMatrix &m) {
  const RatPoly p = char_poly(m);
  for (const auto &c : p.coefficients())
    if (c.get_den() != 1) return false;
  const Rational c0 = p.coefficient(0);
  return c0 == 1 || c0 == -1;
}

bool is_integer_like(const IntMatrix &m) { return is_integer_like(to_rational(m)); }

// ---------------------------------------------------------------------------
// Smith normal form

std::vector<Integer> SNFResult::invariant_factors() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < rank; ++i) out.push_back(S(i, i));
  return out;
}

namespace {

// Row/column operations mirrored into U (rows) and V (columns).
struct SnfState {
  IntMatrix a, u, v;

  void swap_rows(std::size_t i, std::size_t j) {
    a.swap_rows(i, j);
    u.swap_rows(i, j);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    a.swap_cols(i, j);
    v.swap_cols(i, j);
  }
  // row_i += f * row_j
  void add_row(std::size_t i, std::size_t j, const Integer &f) {
    for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) += f * a(j, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u(i, c) += f * u(j, c);
  }
  // col_i += f * col_j
  void add_col(std::size_t i, std::size_t j, const Integer &f) {
    for (std::size_t r = 0; r < a.rows(); ++r) a(r, i) += f * a(r, j);
    for (std::size_t r = 0; r < v.rows(); ++r) v(r, i) += f * v(r, j);
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) = -a(i, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u(i, c) = -u(i, c);
  }
};

} // namespace

SNFResult smith_normal_form(const IntMatrix &m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  SnfState st{m, IntMatrix::identity(rows), IntMatrix::identity(cols)};
  std::size_t t = 0;
  for (; t < std::min(rows, cols); ++t) {
    for (;;) {
      // smallest nonzero entry of the trailing block becomes the pivot
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (sgn(st.a(i, j)) == 0) continue;
          if (pi == rows || mpz_cmpabs(st.a(i, j).get_mpz_t(), st.a(pi, pj).get_mpz_t()) < 0) {
            pi = i;
            pj = j;
          }
        }
      if (pi == rows) goto done;
      st.swap_rows(t, pi);
      st.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (sgn(st.a(i, t)) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), st.a(i, t).get_mpz_t(), st.a(t, t).get_mpz_t());
        st.add_row(i, t, -q);
        if (sgn(st.a(i, t)) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (sgn(st.a(t, j)) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), st.a(t, j).get_mpz_t(), st.a(t, t).get_mpz_t());
        st.add_col(j, t, -q);
        if (sgn(st.a(t, j)) != 0) clean = false;
      }
      if (!clean) continue;

      // pivot must divide the whole trailing block
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(st.a(i, j).get_mpz_t(), st.a(t, t).get_mpz_t())) {
            st.add_row(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (sgn(st.a(t, t)) < 0) st.negate_row(t);
  }
done:
  SNFResult res{std::move(st.a), std::move(st.u), std::move(st.v), t};
  return res;
}

// ---------------------------------------------------------------------------
// Determinant divisors

namespace {

// Calls f(indices) for every increasing l-subset of {0..n-1}.
template <class F> void for_each_subset(std::size_t n, std::size_t l, F &&f) {
  std::vector<std::size_t> idx(l);
  std::iota(idx.begin(), idx.end(), 0);
  if (l > n) return;
  for (;;) {
    f(idx);
    std::size_t k = l;
    while (k > 0 && idx[k - 1] == n - l + (k - 1)) --k;
    if (k == 0) return;
    ++idx[k - 1];
    for (std::size_t j = k; j < l; ++j) idx[j] = idx[j - 1] + 1;
  }
}

void check_divisor_index(const IntMatrix &m, std::size_t l) {
  if (l < 1 || l > std::min(m.rows(), m.cols()))
    throw std::out_of_range("determinant divisor index out of range");
}

} // namespace

Integer determinant_divisor_by_minors(const IntMatrix &m, std::size_t l) {
  check_divisor_index(m, l);
  Integer g = 0;
  for_each_subset(m.rows(), l, [&](const std::vector<std::size_t> &ri) {
    for_each_subset(m.cols(), l, [&](const std::vector<std::size_t> &ci) {
      IntMatrix sub(l, l);
      for (std::size_t a = 0; a < l; ++a)
        for (std::size_t b = 0; b < l; ++b) sub(a, b) = m(ri[a], ci[b]);
      Integer d = det(sub);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    });
  });
  return g;
}

Integer determinant_divisor(const IntMatrix &m, std::size_t l) {
  check_divisor_index(m, l);
  if (std::min(m.rows(), m.cols()) <= 6) return determinant_divisor_by_minors(m, l);
  const SNFResult snf = smith_normal_form(m);
  Integer prod = 1;
  for (std::size_t i = 0; i < l; ++i) prod *= snf.S(i, i);
  return prod;
}

IntMatrix left_integer_kernel(const IntMatrix &m) {
  const SNFResult snf = smith_normal_form(m);
  // U M V = S, so rows of U beyond the rank annihilate M
  IntMatrix k(m.rows() - snf.rank, m.rows());
  for (std::size_t i = snf.rank; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.rows(); ++j) k(i - snf.rank, j) = snf.U(i, j);
  return k;
}

Integer resultant(const IntPoly &p, const IntPoly &q) {
  if (p.is_zero() || q.is_zero()) return 0;
  const auto m = static_cast<std::size_t>(p.degree());
  const auto n = static_cast<std::size_t>(q.degree());
  if (m + n == 0) return 1;
  IntMatrix syl(m + n, m + n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k <= m; ++k) syl(r, r + k) = p.coefficient(m - k);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t k = 0; k <= n; ++k) syl(n + r, r + k) = q.coefficient(n - k);
  return det(syl);
}

IntMatrix companion_matrix(const IntPoly &p) {
  if (!p.is_monic() || p.degree() < 1)
    throw std::invalid_argument("companion_matrix: need a monic polynomial of degree >= 1");
  const auto d = static_cast<std::size_t>(p.degree());
  IntMatrix c(d, d);
  for (std::size_t j = 0; j < d; ++j) c(0, j) = -p.coefficient(d - 1 - j);
  for (std::size_t i = 1; i < d; ++i) c(i, i - 1) = 1;
  return c;
}

} // namespace nilgraph
