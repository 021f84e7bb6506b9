#pragma once

// Randomized property suites shared by the property tests and the
// acceptance binary. Each suite returns how many instances it checked and a
// description of every failure.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace nilgraph::properties {

struct SuiteResult {
  std::size_t checked = 0;
  std::vector<std::string> failures;
  std::string summary;

  bool ok() const { return failures.empty() && checked > 0; }
};

/// Smith form against the gcd-of-minors oracle on random integer matrices.
SuiteResult snf_vs_minors(std::size_t count, std::uint64_t seed);

/// Associativity, identity, inverses and central commutators on random
/// triples, for every presentation of a fixed corpus.
SuiteResult group_axioms(std::size_t triples_per_presentation, std::uint64_t seed);

/// Validated candidates on random weighted graphs preserve every class
/// determinant divisor.
SuiteResult divisor_invariants(std::size_t graphs, std::uint64_t seed);

/// induced(F G) = induced(F) induced(G) on random composable pairs.
SuiteResult functoriality(std::size_t pairs, std::uint64_t seed);

/// induced(P(sigma)) = P(sigma_E) D(epsilon) for every automorphism of every
/// graph of a fixed corpus.
SuiteResult permutation_lift(std::uint64_t seed);

/// Witness search on graphs without edges between singleton components.
/// Misses are reported in the summary, not as failures.
SuiteResult case_i_sweep(std::size_t graphs, std::uint64_t seed);

} // namespace nilgraph::properties
