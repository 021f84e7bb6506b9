#pragma once

// Torsion-free 2-step nilpotent groups given by structure constants
//   [x_i, x_j] = prod_l y_l^{c_{ij,l}},  y central,
// with normal forms prod x_i^{z_i} prod y_l^{t_l} and [x,y] = x^-1 y^-1 x y.

#include "nilgraph/exact_linalg.hpp"
#include "nilgraph/graph.hpp"
#include "nilgraph/weighted_graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nilgraph {

class TwoStepPresentation {
public:
  TwoStepPresentation() = default;
  TwoStepPresentation(std::size_t n, std::size_t m);

  std::size_t n() const { return n_; }
  std::size_t m() const { return m_; }

  /// c_{ij} for i < j.
  const std::vector<Integer> &structure(std::size_t i, std::size_t j) const;
  void set_structure(std::size_t i, std::size_t j, std::vector<Integer> c);
  void set_structure(std::size_t i, std::size_t j, std::size_t l, const Integer &value);

  /// Coefficient vector of [x_i, x_j] for any i, j (antisymmetric, zero on i == j).
  std::vector<Integer> bracket(std::size_t i, std::size_t j) const;

  /// Rows are c_{ij} for i < j in lexicographic pair order.
  IntMatrix commutator_matrix() const;
  /// Pair (i, j) belonging to a row of commutator_matrix().
  std::pair<std::size_t, std::size_t> pair_of_row(std::size_t row) const;

  std::vector<std::string> x_names;
  std::vector<std::string> y_names;

  friend bool operator==(const TwoStepPresentation &a, const TwoStepPresentation &b) {
    return a.n_ == b.n_ && a.m_ == b.m_ && a.c_ == b.c_;
  }

private:
  std::size_t index(std::size_t i, std::size_t j) const;

  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::vector<Integer>> c_; // upper-triangular pairs, row-major
};

/// Normal form prod x_i^{z_i} prod y_l^{t_l}.
struct GroupElement {
  std::vector<Integer> z;
  std::vector<Integer> t;
  friend bool operator==(const GroupElement &, const GroupElement &) = default;
};

GroupElement identity_element(const TwoStepPresentation &p);
GroupElement x_generator(const TwoStepPresentation &p, std::size_t i);
GroupElement y_generator(const TwoStepPresentation &p, std::size_t l);

GroupElement multiply(const TwoStepPresentation &p, const GroupElement &a, const GroupElement &b);
GroupElement inverse(const TwoStepPresentation &p, const GroupElement &a);
GroupElement power(const TwoStepPresentation &p, const GroupElement &a, long k);
/// a^-1 b^-1 a b
GroupElement commutator(const TwoStepPresentation &p, const GroupElement &a, const GroupElement &b);

/// Generators x = vertices, y = edges, both in the total orders of `s`;
/// c_{ij,l} = k(e_l) when {v_i, v_j} = e_l.
TwoStepPresentation presentation_from_graph(const WeightedGraph &wg, const GraphStructure &s);

/// The 4+3 generator group with [x1,x3]=y1, [x1,x4]=y2, [x3,x4]=y3,
/// [x2,x4]=y1^2, [x2,x3]=y2, [x1,x2]=1.
TwoStepPresentation remark_group_H();

struct StructureReport {
  IntMatrix center_x_basis;        // rows: x-parts of central elements
  std::size_t center_rank = 0;     // x-kernel rank + m
  IntMatrix gamma2_basis;          // rows in y coordinates
  IntMatrix sqrt_gamma2_basis;     // saturation of gamma2, rows in y coordinates
  Integer gamma2_index;            // [sqrt(gamma2) : gamma2]
  std::size_t abelianization_free_rank = 0;
  std::vector<Integer> abelianization_torsion; // invariant factors > 1
  std::size_t hirsch = 0;
  std::optional<Integer> unweighted_index;     // graph-built groups only
  std::optional<std::vector<VertexId>> isolated_vertices;
};

/// Lattice computations from the structure constants alone. When `origin`
/// is given the graph-level data (index of G_Gamma, isolated vertices) is
/// filled in as well.
StructureReport structural_subgroups(const TwoStepPresentation &p, const WeightedGraph *origin = nullptr);

/// Integer matrices B (x-part, column i = z of the image of x_i) and C (column
/// l = image of y_l) define an automorphism iff both are unimodular and every
/// relation is respected. Returns a description of the first defect, if any.
std::optional<std::string> automorphism_defect(const TwoStepPresentation &p, const IntMatrix &B, const IntMatrix &C);

} // namespace nilgraph
