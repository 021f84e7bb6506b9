#pragma once

// Edge weights, class-level determinant divisors and the automorphism
// subgroup that preserves them.

#include "nilgraph/exact_linalg.hpp"
#include "nilgraph/graph.hpp"

#include <vector>

namespace nilgraph {

/// Graph with a strictly positive weight per edge id.
struct WeightedGraph {
  Graph graph;
  std::vector<Integer> weights;

  WeightedGraph() = default;
  /// Throws GraphError on size mismatch or a weight < 1.
  WeightedGraph(Graph g, std::vector<Integer> k);
  /// All weights equal to one.
  static WeightedGraph unweighted(Graph g);

  const Integer &weight(EdgeId e) const { return weights.at(e); }
  bool is_unweighted() const;
};

/// D(k) in the edge total order of `s`.
IntMatrix weight_matrix(const WeightedGraph &wg, const GraphStructure &s);

/// d_l(mu): gcd of all l-fold products of weights in `mu`. 1 <= l <= |mu|.
Integer class_determinant_divisor(const WeightedGraph &wg, const std::vector<EdgeId> &mu, std::size_t l);

/// (d_1(mu), ..., d_|mu|(mu)), read off the Smith form of D(k|mu).
std::vector<Integer> divisor_profile(const WeightedGraph &wg, const std::vector<EdgeId> &mu);

/// True when d_l(mu) = d_l(sigma_E(mu)) for every edge class and every l.
bool preserves_divisors(const WeightedGraph &wg, const GraphStructure &s, const GraphAutomorphism &a);

/// Aut(Gamma(k)) as a subset of the enumerated Aut(Gamma).
std::vector<GraphAutomorphism> weighted_automorphism_group(const WeightedGraph &wg, const GraphStructure &s,
                                                           std::size_t bound = kDefaultAutomorphismBound);

/// Weight m on e0, 1 elsewhere. Both endpoints of e0 must lie in coherent
/// components of size one and m >= 2.
WeightedGraph counterexample_weights(const Graph &g, EdgeId e0, const Integer &m);

/// Product of all weights: the index of G_Gamma inside G_Gamma(k).
Integer weight_product(const WeightedGraph &wg);

} // namespace nilgraph
