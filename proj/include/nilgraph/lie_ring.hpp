#pragma once

// The graded Lie ring L = L_1 + L_2 of a 2-step nilpotent group: brackets,
// degree-2 maps induced by degree-1 maps, the block shape of graded
// automorphisms of a graph Lie ring, and isomorphism checks over Q(sqrt d).

#include "nilgraph/exact_linalg.hpp"
#include "nilgraph/graph.hpp"
#include "nilgraph/nilpotent_group.hpp"
#include "nilgraph/weighted_graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nilgraph {

/// Coordinates on the degree-2 part: edges e ({e} basis of sqrt(gamma2)),
/// weighted edges e^{k(e)} (basis of gamma2), or an abstract y-basis.
enum class Chart { E, Ek, Generic };

const char *chart_name(Chart c);

struct GradedLie2 {
  std::vector<std::string> deg1_names;
  std::vector<std::string> deg2_names;
  Chart chart = Chart::Generic;
  TwoStepPresentation table; // [x_i, x_j] for i < j in deg-2 coordinates

  std::size_t dim1() const { return table.n(); }
  std::size_t dim2() const { return table.m(); }
};

GradedLie2 graded_lie_ring(const TwoStepPresentation &p);
/// Lie ring of G_Gamma(k) with vertex and edge bases in the orders of `s`.
GradedLie2 graded_lie_ring(const WeightedGraph &wg, const GraphStructure &s, Chart chart = Chart::Ek);

template <class T> std::vector<T> bracket_deg1(const GradedLie2 &L, const std::vector<T> &u, const std::vector<T> &w) {
  const std::size_t n = L.dim1(), m = L.dim2();
  if (u.size() != n || w.size() != n) throw DimensionError("bracket: degree-1 vectors have the wrong length");
  std::vector<T> out(m, ScalarTraits<T>::zero());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      const T minor = u[a] * w[b] - u[b] * w[a];
      if (ScalarTraits<T>::is_zero(minor)) continue;
      const auto &c = L.table.structure(a, b);
      for (std::size_t l = 0; l < m; ++l)
        if (sgn(c[l]) != 0) out[l] += minor * T(c[l]);
    }
  return out;
}

/// Matrices S (columns [x_i, x_j], i < j) and T (columns [F x_i, F x_j]) of
/// the degree-2 parts of `src` and the images under F inside `dst`.
template <class T> std::pair<Matrix<T>, Matrix<T>> bracket_images(const GradedLie2 &src, const GradedLie2 &dst,
                                                                  const Matrix<T> &F) {
  const std::size_t n = src.dim1();
  if (F.rows() != dst.dim1() || F.cols() != n) throw DimensionError("degree-1 map has the wrong shape");
  const std::size_t pairs = n * (n > 0 ? n - 1 : 0) / 2;
  Matrix<T> S(src.dim2(), pairs), Tm(dst.dim2(), pairs);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++k) {
      const auto &c = src.table.structure(i, j);
      for (std::size_t l = 0; l < src.dim2(); ++l) S(l, k) = T(c[l]);
      const auto img = bracket_deg1(dst, F.col(i), F.col(j));
      for (std::size_t l = 0; l < dst.dim2(); ++l) Tm(l, k) = img[l];
    }
  return {std::move(S), std::move(Tm)};
}

/// The degree-2 map C with C [x_i, x_j] = [F x_i, F x_j] on L -> L. Needs a
/// field scalar type; throws std::domain_error when the brackets do not span
/// L_2 or F does not respect the bracket relations.
template <class T> Matrix<T> induced_deg2_matrix(const GradedLie2 &L, const Matrix<T> &F) {
  static_assert(ScalarTraits<T>::is_field, "induced_deg2_matrix needs a field");
  if (!F.is_square() || F.rows() != L.dim1()) throw DimensionError("degree-1 map has the wrong shape");
  auto [S, Tm] = bracket_images(L, L, F);
  const std::size_t m = L.dim2();
  // pick columns of S forming a basis of L_2
  auto ech = row_echelon(S);
  if (ech.pivots.size() != m) throw std::domain_error("brackets do not span the degree-2 part");
  Matrix<T> Sb(m, m), Tb(m, m);
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t l = 0; l < m; ++l) {
      Sb(l, k) = S(l, ech.pivots[k]);
      Tb(l, k) = Tm(l, ech.pivots[k]);
    }
  Matrix<T> C = Tb * inverse(Sb);
  if (C * S != Tm) throw std::domain_error("degree-1 map does not respect the bracket relations");
  return C;
}

// ---------------------------------------------------------------------------
// Graph Lie rings

/// P(sigma) on vertex positions: column pos(v) has its one in row pos(sigma(v)).
IntMatrix permutation_matrix(const GraphStructure &s, const Permutation &sigma);
/// P(sigma_E) on edge positions.
IntMatrix edge_permutation_matrix(const GraphStructure &s, const Permutation &sigma_E);
/// D(epsilon) on edge positions.
IntMatrix sign_matrix(const GraphStructure &s, const std::vector<int> &epsilon);

/// Raw 2x2 minors of B on edge rows and edge columns: the E^k-chart matrix.
IntMatrix induced_deg2_minors(const GraphStructure &s, const IntMatrix &B);

struct EndomorphismCheck {
  bool ok = false;
  IntMatrix C;                                      // E^k chart
  std::optional<std::pair<VertexId, VertexId>> witness; // offending non-edge
  std::string reason;
};

/// B must send every non-edge bracket to zero and induce C in GL(Z).
EndomorphismCheck check_graded_endomorphism(const GraphStructure &s, const IntMatrix &B);

struct IntegralityCheck {
  bool ok = false;
  RatMatrix conjugate; // D(k) C D(k)^-1, the E-chart matrix
};

IntegralityCheck weighted_integrality(const WeightedGraph &wg, const GraphStructure &s, const IntMatrix &C);

struct MembershipResult {
  bool member = false;
  std::optional<Permutation> p_sigma;
  std::vector<Permutation> sigmas; // every sigma realizing the shape
  std::string reason;
};

/// Block-shape test for the image of graded automorphisms. With `wg` the
/// permutation part must lie in Aut(Gamma(k)).
MembershipResult g_gamma_membership(const GraphStructure &s, const RatMatrix &M, const WeightedGraph *wg = nullptr,
                                    std::size_t bound = kDefaultAutomorphismBound);

struct QuadIsoResult {
  bool iso = false;
  std::string reason;
};

/// F : src_1 -> dst_1 over Q(sqrt d) extends to a graded Lie isomorphism.
QuadIsoResult quad_ext_iso_check(const GradedLie2 &src, const GradedLie2 &dst, const QuadMatrix &F);

} // namespace nilgraph
