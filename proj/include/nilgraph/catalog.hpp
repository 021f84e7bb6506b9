#pragma once

// Named graphs and matrices used by the reproduction driver, the tests and
// the acceptance suite.

#include "nilgraph/exact_linalg.hpp"
#include "nilgraph/graph.hpp"
#include "nilgraph/lie_ring.hpp"
#include "nilgraph/nilpotent_group.hpp"
#include "nilgraph/weighted_graph.hpp"

#include <map>
#include <string>

namespace nilgraph::catalog {

/// Six vertices v1..v6, edges v1v5, v2v5, v3v6, v4v6, v1v2, v5v6.
Graph figure1_graph();

/// Nine vertices v1..v9, edges e1..e8 = v1v7, v2v7, v3v8, v4v8, v5v9, v6v9, v7v8, v8v9.
Graph main_counterexample_graph();
/// Weight n on v7v8, one elsewhere.
WeightedGraph main_counterexample_weighted(const Integer &n);

/// K_2 on v1, v2 with weight n.
WeightedGraph heisenberg_graph(const Integer &n);

/// Path v1 - v2 - ... - vn.
Graph path_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph edgeless_graph(std::size_t n);

/// The 9x9 vertex matrix and the 8x8 edge matrix of the counterexample
/// automorphism, in the orders v1..v9 and e1..e8.
IntMatrix main_counterexample_B();
IntMatrix main_counterexample_C();
/// (x^2-3x+1)(x^4-3x^2+1)(x+1)(x^2+1) and (x^2+3x+1)(x^4+3x^2+1)(x^2+1).
IntPoly main_counterexample_char_B();
IntPoly main_counterexample_char_C();

/// 3x3 upper unitriangular image of v1^z1 v2^z2 e^t in H_n.
IntMatrix heisenberg_matrix(const Integer &n, const Integer &z1, const Integer &z2, const Integer &t);

/// Automorphism of remark_group_H(): x1 -> x1^-1 x2, x2 -> x1^2 x2^-1,
/// x3 -> x3^-1 x4, x4 -> x3^2 x4^-1.
IntMatrix remark_H_B();
IntMatrix remark_H_C();

/// x1 -> v1+v4, x2 -> sqrt(d)(v1-v4), x3 -> v2+v3, x4 -> sqrt(d)(v2-v3),
/// in the vertex order of `s` (a structure of path_graph(4)).
QuadMatrix remark_quadext_map(const GraphStructure &s, long d);

/// Matrix whose column pos(v) is sum_w images[v][w] * e_pos(w).
IntMatrix matrix_from_images(const GraphStructure &s, const std::map<std::string, std::map<std::string, long>> &images);

} // namespace nilgraph::catalog
