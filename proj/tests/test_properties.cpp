#include "properties.hpp"

#include <doctest.h>

using namespace nilgraph::properties;

namespace {

void require_ok(const SuiteResult &r) {
  MESSAGE(r.summary);
  for (const auto &f : r.failures) FAIL_CHECK(f);
  CHECK(r.checked > 0);
}

} // namespace

TEST_CASE("Smith form matches gcd of minors") { require_ok(snf_vs_minors(500, 101)); }

TEST_CASE("group axioms") { require_ok(group_axioms(1000, 202)); }

TEST_CASE("validated automorphisms preserve class determinant divisors") { require_ok(divisor_invariants(100, 303)); }

TEST_CASE("induced degree-2 matrix is functorial") { require_ok(functoriality(200, 404)); }

TEST_CASE("permutation matrices lift to signed edge permutations") { require_ok(permutation_lift(505)); }

TEST_CASE("case (i) sweep") {
  const auto r = case_i_sweep(40, 606);
  MESSAGE(r.summary);
  for (const auto &f : r.failures) FAIL_CHECK(f);
}
