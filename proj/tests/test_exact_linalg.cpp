#include "nilgraph/catalog.hpp"
#include "nilgraph/exact_linalg.hpp"

#include <doctest.h>

using namespace nilgraph;

namespace {

IntPoly poly(std::initializer_list<long> low_first) {
  std::vector<Integer> c;
  for (long x : low_first) c.emplace_back(x);
  return IntPoly(c);
}

} // namespace

TEST_CASE("det examples") {
  CHECK(det(IntMatrix{{2, 1}, {1, 1}}) == 1);
  CHECK(det(IntMatrix::identity(3)) == 1);
  CHECK(det(IntMatrix{{2, 4}, {6, 8}}) == -8);
  CHECK(det(RatMatrix{{Rational(1, 2), 1}, {3, 4}}) == Rational(-1));
  CHECK(det(IntMatrix(0, 0)) == 1);
}

TEST_CASE("char_poly examples") {
  CHECK(char_poly(IntMatrix{{2, 1}, {1, 1}}) == poly({1, -3, 1}));
  CHECK(char_poly(IntMatrix{{5}}) == poly({-5, 1}));
  CHECK(char_poly(catalog::main_counterexample_B()) == catalog::main_counterexample_char_B());
  CHECK(char_poly(catalog::main_counterexample_C()) == catalog::main_counterexample_char_C());
  CHECK(to_string(poly({1, -3, 1})) == "x^2 - 3x + 1");
}

TEST_CASE("char_poly agrees with det(xI - M) at sample points") {
  const IntMatrix M{{3, -1, 4}, {1, 5, -9}, {2, 6, 5}};
  const auto p = char_poly(M);
  for (long x = -3; x <= 3; ++x) CHECK(p(Integer(x)) == det(Integer(x) * IntMatrix::identity(3) - M));
}

TEST_CASE("is_integer_like and has_eigenvalue_one") {
  CHECK(is_integer_like(IntMatrix{{2, 1}, {1, 1}}));
  CHECK_FALSE(is_integer_like(IntMatrix{{2, 0}, {0, 2}}));
  CHECK(is_integer_like(IntMatrix{{1, 0}, {0, -1}}));
  CHECK_FALSE(is_integer_like(RatMatrix{{Rational(1, 2), 0}, {0, 2}}));
  CHECK(has_eigenvalue_one(IntMatrix::identity(3)));
  CHECK_FALSE(has_eigenvalue_one(IntMatrix{{1, 1}, {1, 0}}));
  const auto bc = block_diagonal<Integer>({catalog::main_counterexample_B(), catalog::main_counterexample_C()});
  CHECK_FALSE(has_eigenvalue_one(bc));
}

TEST_CASE("smith normal form examples") {
  const IntMatrix M{{2, 4}, {6, 8}};
  const auto r = smith_normal_form(M);
  CHECK(r.S == IntMatrix{{2, 0}, {0, 4}});
  CHECK(r.U * M * r.V == r.S);
  CHECK(abs(det(r.U)) == 1);
  CHECK(abs(det(r.V)) == 1);
  CHECK(smith_normal_form(IntMatrix::identity(3)).S == IntMatrix::identity(3));
  const auto z = smith_normal_form(IntMatrix(2, 3));
  CHECK(z.S == IntMatrix(2, 3));
  CHECK(z.rank == 0);
  const IntMatrix R{{0, 6, 0}, {10, 0, 15}};
  const auto rr = smith_normal_form(R);
  CHECK(rr.invariant_factors() == std::vector<Integer>{1, 30});
  CHECK(rr.U * R * rr.V == rr.S);
}

TEST_CASE("determinant divisors examples") {
  const IntMatrix D = diagonal<Integer>({2, 6});
  CHECK(determinant_divisor(D, 1) == 2);
  CHECK(determinant_divisor(D, 2) == 12);
  const IntMatrix M{{2, 4}, {6, 8}};
  CHECK(determinant_divisor(M, 1) == 2);
  CHECK(determinant_divisor(M, 2) == 8);
  CHECK(determinant_divisor_by_minors(M, 2) == 8);
  for (std::size_t l = 1; l <= 4; ++l) CHECK(determinant_divisor(IntMatrix::identity(4), l) == 1);
  CHECK(determinant_divisor(IntMatrix{{1, 2}, {2, 4}}, 2) == 0);
}

TEST_CASE("inverse, nullspace and rank over Q") {
  const RatMatrix A{{2, 1}, {1, 1}};
  CHECK(inverse(A) == RatMatrix{{1, -1}, {-1, 2}});
  CHECK_THROWS_AS(inverse(RatMatrix{{1, 2}, {2, 4}}), std::domain_error);
  const RatMatrix S{{1, 2, 3}, {2, 4, 6}};
  CHECK(rank(S) == 1);
  const auto N = nullspace(S);
  CHECK(N.cols() == 2);
  CHECK(S * N == RatMatrix(2, 2));
}

TEST_CASE("left integer kernel") {
  const IntMatrix M{{1, 2}, {2, 4}, {0, 1}};
  const auto K = left_integer_kernel(M);
  REQUIRE(K.rows() == 1);
  CHECK(K * M == IntMatrix(1, 2));
  CHECK(K == Integer(sgn(K(0, 0))) * IntMatrix{{2, -1, 0}});
}

TEST_CASE("resultant and companion matrix") {
  // res(x^2 - 1, x - 2) = 3, res(x^2 - 3x + 1, reversed) = 0 (reciprocal)
  CHECK(resultant(poly({-1, 0, 1}), poly({-2, 1})) == 3);
  const auto p = poly({1, -3, 1});
  CHECK(resultant(p, p.reversed()) == 0);
  const auto q = poly({-1, -1, 1});
  CHECK(resultant(q, q.reversed()) != 0);
  CHECK(char_poly(companion_matrix(poly({-1, 0, 2, 1}))) == poly({-1, 0, 2, 1}));
  CHECK(companion_matrix(q) == IntMatrix{{1, 1}, {1, 0}});
}

TEST_CASE("quadratic extension arithmetic") {
  const QuadExt r2(Rational(0), Rational(1), 2);
  CHECK(r2 * r2 == QuadExt(2));
  const QuadExt x(Rational(1), Rational(1), 2);
  CHECK(x * x.inverse() == QuadExt(1));
  CHECK(x.norm() == -1);
  CHECK(det(QuadMatrix{{r2, 1}, {1, r2}}) == QuadExt(1));
  CHECK(is_square_free(2));
  CHECK_FALSE(is_square_free(12));
  const QuadExt r3(Rational(0), Rational(1), 3);
  CHECK_THROWS(r2 + r3);
}
