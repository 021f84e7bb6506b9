#include "nilgraph/catalog.hpp"

namespace nilgraph::catalog {

namespace {

std::vector<std::string> labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back("v" + std::to_string(i));
  return out;
}

IntPoly poly(std::initializer_list<long> low_first) {
  std::vector<Integer> c;
  for (long x : low_first) c.emplace_back(x);
  return IntPoly(c);
}

} // namespace

Graph figure1_graph() {
  return Graph(labels(6), std::vector<std::pair<std::string, std::string>>{
                              {"v1", "v5"}, {"v2", "v5"}, {"v3", "v6"}, {"v4", "v6"}, {"v1", "v2"}, {"v5", "v6"}});
}

Graph main_counterexample_graph() {
  return Graph(labels(9), std::vector<std::pair<std::string, std::string>>{{"v1", "v7"},
                                                                           {"v2", "v7"},
                                                                           {"v3", "v8"},
                                                                           {"v4", "v8"},
                                                                           {"v5", "v9"},
                                                                           {"v6", "v9"},
                                                                           {"v7", "v8"},
                                                                           {"v8", "v9"}});
}

WeightedGraph main_counterexample_weighted(const Integer &n) {
  const Graph g = main_counterexample_graph();
  std::vector<Integer> k(g.edge_count(), Integer(1));
  k[*g.edge_id(g.vertex_id("v7"), g.vertex_id("v8"))] = n;
  return {g, std::move(k)};
}

WeightedGraph heisenberg_graph(const Integer &n) {
  return {Graph(labels(2), std::vector<std::pair<std::string, std::string>>{{"v1", "v2"}}), {n}};
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph(labels(n), e);
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) e.push_back({i, j});
  return Graph(labels(n), e);
}

Graph cycle_graph(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  if (n >= 3) e.push_back({0, n - 1});
  return Graph(labels(n), e);
}

Graph edgeless_graph(std::size_t n) { return Graph(labels(n), std::vector<Edge>{}); }

IntMatrix main_counterexample_B() {
  return IntMatrix{
      {0, 0, 0, 0, 2, 1, 0, 0, 0},  //
      {0, 0, 0, 0, 1, 1, 0, 0, 0},  //
      {0, 0, 2, 1, 0, 0, 0, 0, 0},  //
      {0, 0, 1, 1, 0, 0, 0, 0, 0},  //
      {1, 0, 0, 0, 0, 0, 0, 0, 0},  //
      {0, 1, 0, 0, 0, 0, 0, 0, 0},  //
      {0, 0, 0, 0, 0, 0, 0, 0, -1}, //
      {0, 0, 0, 0, 0, 0, 0, -1, 0}, //
      {0, 0, 0, 0, 0, 0, 1, 0, 0},  //
  };
}

IntMatrix main_counterexample_C() {
  return IntMatrix{
      {0, 0, 0, 0, -2, -1, 0, 0}, //
      {0, 0, 0, 0, -1, -1, 0, 0}, //
      {0, 0, -2, -1, 0, 0, 0, 0}, //
      {0, 0, -1, -1, 0, 0, 0, 0}, //
      {1, 0, 0, 0, 0, 0, 0, 0},   //
      {0, 1, 0, 0, 0, 0, 0, 0},   //
      {0, 0, 0, 0, 0, 0, 0, -1},  //
      {0, 0, 0, 0, 0, 0, 1, 0},   //
  };
}

IntPoly main_counterexample_char_B() {
  return product({poly({1, -3, 1}), poly({1, 0, -3, 0, 1}), poly({1, 1}), poly({1, 0, 1})});
}

IntPoly main_counterexample_char_C() {
  return product({poly({1, 3, 1}), poly({1, 0, 3, 0, 1}), poly({1, 0, 1})});
}

IntMatrix heisenberg_matrix(const Integer &n, const Integer &z1, const Integer &z2, const Integer &t) {
  IntMatrix m = IntMatrix::identity(3);
  m(0, 1) = n * z1;
  m(1, 2) = z2;
  m(0, 2) = n * z1 * z2 + t;
  return m;
}

IntMatrix remark_H_B() {
  return IntMatrix{
      {-1, 2, 0, 0}, //
      {1, -1, 0, 0}, //
      {0, 0, -1, 2}, //
      {0, 0, 1, -1}, //
  };
}

IntMatrix remark_H_C() {
  return IntMatrix{
      {3, -4, 0},  //
      {-2, 3, 0},  //
      {0, 0, -1},  //
  };
}

QuadMatrix remark_quadext_map(const GraphStructure &s, long d) {
  const auto &g = s.graph;
  if (g.vertex_count() != 4) throw DimensionError("expected the path on four vertices");
  auto pos = [&](const char *l) { return s.vertex_position(g.vertex_id(l)); };
  const QuadExt r(Rational(0), Rational(1), d);
  QuadMatrix F(4, 4);
  F(pos("v1"), 0) = 1;
  F(pos("v4"), 0) = 1;
  F(pos("v1"), 1) = r;
  F(pos("v4"), 1) = -r;
  F(pos("v2"), 2) = 1;
  F(pos("v3"), 2) = 1;
  F(pos("v2"), 3) = r;
  F(pos("v3"), 3) = -r;
  return F;
}

IntMatrix matrix_from_images(const GraphStructure &s,
                             const std::map<std::string, std::map<std::string, long>> &images) {
  const auto n = s.graph.vertex_count();
  IntMatrix M(n, n);
  for (const auto &[v, img] : images)
    for (const auto &[w, coeff] : img)
      M(s.vertex_position(s.graph.vertex_id(w)), s.vertex_position(s.graph.vertex_id(v))) = coeff;
  return M;
}

} // namespace nilgraph::catalog
