#include "nilgraph/lie_ring.hpp"

#include <algorithm>

namespace nilgraph {

const char *chart_name(Chart c) {
  switch (c) {
  case Chart::E: return "E";
  case Chart::Ek: return "E^k";
  case Chart::Generic: return "generic";
  }
  return "?";
}

GradedLie2 graded_lie_ring(const TwoStepPresentation &p) {
  return {p.x_names, p.y_names, Chart::Generic, p};
}

GradedLie2 graded_lie_ring(const WeightedGraph &wg, const GraphStructure &s, Chart chart) {
  if (chart == Chart::Generic) throw std::invalid_argument("graph Lie rings use the E or E^k chart");
  auto p = chart == Chart::E ? presentation_from_graph(wg, s)
                              : presentation_from_graph(WeightedGraph::unweighted(wg.graph), s);
  return {p.x_names, p.y_names, chart, std::move(p)};
}

IntMatrix permutation_matrix(const GraphStructure &s, const Permutation &sigma) {
  const auto n = s.graph.vertex_count();
  if (sigma.size() != n) throw DimensionError("vertex permutation has the wrong length");
  IntMatrix P(n, n);
  for (VertexId v = 0; v < n; ++v) P(s.vertex_position(sigma[v]), s.vertex_position(v)) = 1;
  return P;
}

IntMatrix edge_permutation_matrix(const GraphStructure &s, const Permutation &sigma_E) {
  const auto m = s.graph.edge_count();
  if (sigma_E.size() != m) throw DimensionError("edge permutation has the wrong length");
  IntMatrix P(m, m);
  for (EdgeId e = 0; e < m; ++e) P(s.edge_position(sigma_E[e]), s.edge_position(e)) = 1;
  return P;
}

IntMatrix sign_matrix(const GraphStructure &s, const std::vector<int> &epsilon) {
  const auto m = s.graph.edge_count();
  if (epsilon.size() != m) throw DimensionError("sign vector has the wrong length");
  IntMatrix D(m, m);
  for (EdgeId e = 0; e < m; ++e) D(s.edge_position(e), s.edge_position(e)) = epsilon[e];
  return D;
}

namespace {

// endpoints of the edge at position `pos`, as (smaller, larger) vertex positions
std::pair<std::size_t, std::size_t> edge_positions(const GraphStructure &s, std::size_t pos) {
  const Edge &e = s.graph.edge(s.orders.edges[pos]);
  auto a = s.vertex_position(e.u), b = s.vertex_position(e.v);
  if (a > b) std::swap(a, b);
  return {a, b};
}

Integer minor2(const IntMatrix &B, std::size_t r1, std::size_t r2, std::size_t c1, std::size_t c2) {
  return B(r1, c1) * B(r2, c2) - B(r2, c1) * B(r1, c2);
}

} // namespace

IntMatrix induced_deg2_minors(const GraphStructure &s, const IntMatrix &B) {
  const auto n = s.graph.vertex_count(), m = s.graph.edge_count();
  if (B.rows() != n || B.cols() != n) throw DimensionError("B must be |V| x |V|");
  IntMatrix C(m, m);
  for (std::size_t col = 0; col < m; ++col) {
    const auto [v, w] = edge_positions(s, col);
    for (std::size_t row = 0; row < m; ++row) {
      const auto [vp, wp] = edge_positions(s, row);
      C(row, col) = minor2(B, vp, wp, v, w);
    }
  }
  return C;
}

EndomorphismCheck check_graded_endomorphism(const GraphStructure &s, const IntMatrix &B) {
  EndomorphismCheck r;
  const auto n = s.graph.vertex_count(), m = s.graph.edge_count();
  if (B.rows() != n || B.cols() != n) {
    r.reason = "B must be |V| x |V|";
    return r;
  }
  const Integer d = det(B);
  if (d != 1 && d != -1) {
    r.reason = "B is not unimodular (det " + d.get_str() + ")";
    return r;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const VertexId a = s.orders.vertices[i], b = s.orders.vertices[j];
      if (s.graph.adjacent(a, b)) continue;
      for (std::size_t row = 0; row < m; ++row) {
        const auto [vp, wp] = edge_positions(s, row);
        if (sgn(minor2(B, vp, wp, i, j)) != 0) {
          r.witness = std::make_pair(a, b);
          r.reason = "non-edge {" + s.graph.label(a) + "," + s.graph.label(b) + "} is sent to a nonzero bracket";
          return r;
        }
      }
    }
  r.C = induced_deg2_minors(s, B);
  const Integer dc = det(r.C);
  if (dc != 1 && dc != -1) {
    r.reason = "induced C is not unimodular (det " + dc.get_str() + ")";
    return r;
  }
  r.ok = true;
  return r;
}

IntegralityCheck weighted_integrality(const WeightedGraph &wg, const GraphStructure &s, const IntMatrix &C) {
  const auto m = wg.graph.edge_count();
  if (C.rows() != m || C.cols() != m) throw DimensionError("C must be |E| x |E|");
  IntegralityCheck r;
  r.conjugate = RatMatrix(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    const Integer &ki = wg.weight(s.orders.edges[i]);
    for (std::size_t j = 0; j < m; ++j) {
      Rational x(C(i, j) * ki, wg.weight(s.orders.edges[j]));
      x.canonicalize();
      r.conjugate(i, j) = x;
    }
  }
  r.ok = is_integral(r.conjugate);
  return r;
}

MembershipResult g_gamma_membership(const GraphStructure &s, const RatMatrix &M, const WeightedGraph *wg,
                                    std::size_t bound) {
  MembershipResult r;
  const auto n = s.graph.vertex_count();
  if (M.rows() != n || M.cols() != n) throw DimensionError("M must be |V| x |V|");
  const auto &p = s.components;
  std::vector<std::size_t> class_at(n);
  for (std::size_t pos = 0; pos < n; ++pos) class_at[pos] = p.class_of[s.orders.vertices[pos]];

  const auto group = wg ? weighted_automorphism_group(*wg, s, bound) : automorphism_group(s, bound);
  for (const auto &a : group) {
    const RatMatrix U = to_rational(permutation_matrix(s, a.sigma)).transpose() * M;
    bool shape = true;
    for (std::size_t i = 0; i < n && shape; ++i)
      for (std::size_t j = 0; j < n && shape; ++j) {
        if (sgn(U(i, j)) == 0) continue;
        const auto ci = class_at[i], cj = class_at[j];
        if (ci != cj && !p.precedes(ci, cj)) shape = false;
      }
    if (!shape) continue;
    bool invertible = true;
    for (const auto &cls : p.classes) {
      RatMatrix blk(cls.size(), cls.size());
      for (std::size_t x = 0; x < cls.size(); ++x)
        for (std::size_t y = 0; y < cls.size(); ++y)
          blk(x, y) = U(s.vertex_position(cls[x]), s.vertex_position(cls[y]));
      if (sgn(det(blk)) == 0) {
        invertible = false;
        break;
      }
    }
    if (!invertible) continue;
    r.sigmas.push_back(a.sigma);
    if (!r.p_sigma) r.p_sigma = a.p_sigma;
    else if (*r.p_sigma != a.p_sigma) throw std::logic_error("block decomposition gives two different p(sigma)");
  }
  r.member = !r.sigmas.empty();
  if (!r.member) r.reason = "no automorphism sigma makes P(sigma)^-1 M block upper triangular with invertible diagonal";
  return r;
}

QuadIsoResult quad_ext_iso_check(const GradedLie2 &src, const GradedLie2 &dst, const QuadMatrix &F) {
  if (src.dim1() != dst.dim1()) throw DimensionError("degree-1 dimensions differ");
  if (F.rows() != dst.dim1() || F.cols() != src.dim1()) throw DimensionError("map has the wrong shape");
  for (const auto &x : F.data())
    if (!x.is_rational() && !is_square_free(x.radicand()))
      throw std::invalid_argument("radicand must be square-free");
  QuadIsoResult r;
  if (ScalarTraits<QuadExt>::is_zero(det(F))) {
    r.reason = "degree-1 map is singular";
    return r;
  }
  if (src.dim2() != dst.dim2()) {
    r.reason = "degree-2 dimensions differ";
    return r;
  }
  auto [S, T] = bracket_images(src, dst, F);
  const auto rs = rank(S), rt = rank(T);
  Matrix<QuadExt> stacked(S.rows() + T.rows(), S.cols());
  for (std::size_t j = 0; j < S.cols(); ++j) {
    for (std::size_t i = 0; i < S.rows(); ++i) stacked(i, j) = S(i, j);
    for (std::size_t i = 0; i < T.rows(); ++i) stacked(S.rows() + i, j) = T(i, j);
  }
  const auto rst = rank(stacked);
  if (rs != src.dim2() || rt != dst.dim2()) {
    r.reason = "brackets do not span the degree-2 part";
    return r;
  }
  if (rst != rs) {
    r.reason = "bracket relations are not carried over";
    return r;
  }
  r.iso = true;
  return r;
}

} // namespace nilgraph
