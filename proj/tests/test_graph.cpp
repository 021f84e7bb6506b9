#include "nilgraph/catalog.hpp"
#include "nilgraph/graph.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

using namespace nilgraph;

namespace {

std::set<std::set<std::string>> label_classes(const Graph &g, const std::vector<std::vector<VertexId>> &classes) {
  std::set<std::set<std::string>> out;
  for (const auto &c : classes) {
    std::set<std::string> s;
    for (auto v : c) s.insert(g.label(v));
    out.insert(s);
  }
  return out;
}

std::set<std::string> edge_labels(const Graph &g, const std::vector<EdgeId> &es) {
  std::set<std::string> out;
  for (auto e : es) out.insert(g.edge_label(e));
  return out;
}

std::size_t class_of(const GraphStructure &s, const char *label) {
  return s.components.class_of[s.graph.vertex_id(label)];
}

// every vertex permutation, tested edge by edge
std::vector<Permutation> brute_force_automorphisms(const Graph &g) {
  Permutation p(g.vertex_count());
  std::iota(p.begin(), p.end(), 0);
  std::vector<Permutation> out;
  do {
    bool ok = true;
    for (const auto &e : g.edges()) ok = ok && g.adjacent(p[e.u], p[e.v]);
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Graph random_graph(std::mt19937_64 &rng, std::size_t n, double density) {
  std::bernoulli_distribution coin(density);
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng)) e.push_back({i, j});
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("v" + std::to_string(i));
  return Graph(labels, e);
}

} // namespace

TEST_CASE("neighborhoods") {
  const Graph g = catalog::figure1_graph();
  const auto n5 = neighborhoods(g, "v5");
  std::set<std::string> open;
  for (auto v : n5.open) open.insert(g.label(v));
  CHECK(open == std::set<std::string>{"v1", "v2", "v6"});
  const Graph e = catalog::edgeless_graph(3);
  CHECK(neighborhoods(e, "v2").open.empty());
  CHECK(neighborhoods(e, "v2").closed == std::vector<VertexId>{1});
  const Graph k2 = catalog::complete_graph(2);
  CHECK(neighborhoods(k2, "v1").open == std::vector<VertexId>{1});
}

TEST_CASE("figure 1 components, relations, edge classes and quotient") {
  const auto s = analyze(catalog::figure1_graph());
  const auto &g = s.graph;
  CHECK(label_classes(g, s.components.classes) ==
        std::set<std::set<std::string>>{{"v1", "v2"}, {"v3", "v4"}, {"v5"}, {"v6"}});
  const auto l1 = class_of(s, "v1"), l2 = class_of(s, "v3"), l3 = class_of(s, "v5"), l4 = class_of(s, "v6");
  std::set<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (i != j && s.components.precedes(i, j)) rel.insert({i, j});
  CHECK(rel == std::set<std::pair<std::size_t, std::size_t>>{{l1, l3}, {l2, l3}, {l2, l4}});

  std::set<std::set<std::string>> ec;
  for (const auto &c : s.edge_classes.classes) ec.insert(edge_labels(g, c));
  CHECK(ec == std::set<std::set<std::string>>{
                  {"{v1,v5}", "{v2,v5}"}, {"{v3,v6}", "{v4,v6}"}, {"{v1,v2}"}, {"{v5,v6}"}});

  CHECK(s.quotient.sizes == std::vector<std::size_t>{2, 2, 1, 1});
  std::size_t loops = 0;
  for (const auto &[a, b] : s.quotient.edges) loops += a == b;
  CHECK(loops == 1);
  CHECK(s.quotient.has_edge(l1, l1));
  CHECK(s.quotient.has_edge(l1, l3));
  CHECK(s.quotient.has_edge(l3, l4));
  CHECK(s.quotient.has_edge(l2, l4));
  CHECK(s.quotient.edges.size() == 4);
}

TEST_CASE("small component examples") {
  CHECK(analyze(catalog::edgeless_graph(4)).components.size() == 1);
  CHECK(analyze(catalog::edgeless_graph(4)).quotient.edges.empty());
  const auto k2 = analyze(catalog::complete_graph(2));
  CHECK(k2.components.size() == 1);
  CHECK(k2.edge_classes.size() == 1);
  const Graph star({"c", "a", "b", "d"}, std::vector<std::pair<std::string, std::string>>{{"c", "a"}, {"c", "b"}, {"c", "d"}});
  const auto st = analyze(star);
  CHECK(st.edge_classes.size() == 1);
  CHECK(st.edge_classes.classes[0].size() == 3);
}

TEST_CASE("counterexample quotient") {
  const auto s = analyze(catalog::main_counterexample_graph());
  CHECK(s.quotient.sizes == std::vector<std::size_t>{2, 2, 2, 1, 1, 1});
  CHECK(s.quotient.edges.size() == 5);
  std::vector<std::string> order;
  for (auto v : s.orders.vertices) order.push_back(s.graph.label(v));
  CHECK(order == std::vector<std::string>{"v1", "v2", "v3", "v4", "v5", "v6", "v7", "v8", "v9"});
  std::vector<std::string> eorder;
  for (auto e : s.orders.edges) eorder.push_back(s.graph.edge_label(e));
  CHECK(eorder == std::vector<std::string>{"{v1,v7}", "{v2,v7}", "{v3,v8}", "{v4,v8}", "{v5,v9}", "{v6,v9}",
                                           "{v7,v8}", "{v8,v9}"});
}

TEST_CASE("admissible orders") {
  const Graph g = catalog::figure1_graph();
  const auto s = analyze(g);
  CHECK(admissibility_violation(g, s.components, s.edge_classes, s.orders).empty());
  auto pos = [&](const char *l) { return g.vertex_id(l); };
  const std::vector<VertexId> swapped{pos("v3"), pos("v4"), pos("v1"), pos("v2"), pos("v5"), pos("v6")};
  CHECK_NOTHROW(analyze(g, TotalOrders::from_sequences(swapped, s.orders.edges)));
  const std::vector<VertexId> bad{pos("v5"), pos("v1"), pos("v2"), pos("v3"), pos("v4"), pos("v6")};
  CHECK_THROWS_AS(analyze(g, TotalOrders::from_sequences(bad, s.orders.edges)), GraphError);
}

TEST_CASE("automorphism group examples") {
  const auto f = analyze(catalog::figure1_graph());
  const auto a = automorphism_group(f);
  CHECK(a.size() == 4);
  std::set<std::string> cyc;
  for (const auto &x : a) cyc.insert(cycle_notation(x.sigma, f.graph.labels()));
  CHECK(cyc == std::set<std::string>{"id", "(v1 v2)", "(v3 v4)", "(v1 v2)(v3 v4)"});

  const auto m = analyze(catalog::main_counterexample_graph());
  const auto am = automorphism_group(m);
  CHECK(am.size() == 16);
  const auto it = std::find_if(am.begin(), am.end(), [&](const GraphAutomorphism &x) {
    return cycle_notation(x.sigma, m.graph.labels()) == "(v1 v5)(v2 v6)(v7 v9)";
  });
  REQUIRE(it != am.end());
  // sigma_E = (e1 e5)(e2 e6)(e7 e8), epsilon = -1 exactly on e7, e8
  const Permutation expected_E{4, 5, 2, 3, 0, 1, 7, 6};
  CHECK(it->sigma_E == expected_E);
  CHECK(it->epsilon == std::vector<int>{1, 1, 1, 1, 1, 1, -1, -1});

  CHECK(automorphism_group(analyze(catalog::complete_graph(2))).size() == 2);
}

TEST_CASE("induced edge data on figure 1") {
  const auto s = analyze(catalog::figure1_graph());
  const auto &g = s.graph;
  const auto id = induced_edge_data(s, identity_permutation(6));
  CHECK(id.sigma_E == identity_permutation(6));
  CHECK(std::all_of(id.epsilon.begin(), id.epsilon.end(), [](int e) { return e == 1; }));
  Permutation sw = identity_permutation(6);
  std::swap(sw[0], sw[1]);
  const auto d = induced_edge_data(s, sw);
  const auto e1 = *g.edge_id(0, 4), e2 = *g.edge_id(1, 4), e5 = *g.edge_id(0, 1);
  CHECK(d.sigma_E[e1] == e2);
  CHECK(d.sigma_E[e2] == e1);
  for (EdgeId e = 0; e < g.edge_count(); ++e) CHECK(d.epsilon[e] == (e == e5 ? -1 : 1));
}

TEST_CASE("isolated vertices") {
  const Graph r({"a", "b", "c", "d", "z"}, std::vector<std::pair<std::string, std::string>>{{"a", "b"}, {"c", "d"}});
  const auto split = isolated_vertices(r);
  CHECK(split.isolated.size() == 1);
  CHECK(r.label(split.isolated[0]) == "z");
  CHECK(split.stripped.vertex_count() == 4);
  CHECK(isolated_vertices(catalog::edgeless_graph(3)).isolated.size() == 3);
  CHECK(isolated_vertices(catalog::edgeless_graph(3)).stripped.vertex_count() == 0);
  CHECK(isolated_vertices(catalog::figure1_graph()).isolated.empty());
}

TEST_CASE("graph input errors") {
  CHECK_THROWS_AS(Graph({"a", "a"}, std::vector<Edge>{}), GraphError);
  CHECK_THROWS_AS(Graph({"a", "b"}, std::vector<std::pair<std::string, std::string>>{{"a", "a"}}), GraphError);
  CHECK_THROWS_AS(Graph({"a", "b"}, std::vector<std::pair<std::string, std::string>>{{"a", "c"}}), GraphError);
  CHECK_THROWS_AS(enumerate_automorphisms(catalog::edgeless_graph(13)), EnumerationBoundError);
}

TEST_CASE("random graphs: enumeration matches brute force; classes match transpositions") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + trial % 6;
    const Graph g = random_graph(rng, n, 0.2 + 0.1 * (trial % 6));
    CHECK(enumerate_automorphisms(g) == brute_force_automorphisms(g));
    const auto s = analyze(g);
    for (VertexId v = 0; v < n; ++v)
      for (VertexId w = v + 1; w < n; ++w) {
        Permutation t = identity_permutation(n);
        std::swap(t[v], t[w]);
        CHECK((s.components.class_of[v] == s.components.class_of[w]) == is_graph_automorphism(g, t));
      }
    // p is a homomorphism into quotient automorphisms
    const auto aut = automorphism_group(s);
    const auto qa = quotient_automorphisms(s.quotient);
    for (const auto &a : aut) {
      CHECK(std::find(qa.begin(), qa.end(), a.p_sigma) != qa.end());
      for (const auto &b : aut) {
        const auto ab = induced_edge_data(s, compose(a.sigma, b.sigma));
        CHECK(ab.p_sigma == compose(a.p_sigma, b.p_sigma));
      }
    }
    // the edge class -> quotient edge map is a bijection
    std::set<std::size_t> images(s.quotient.edge_of_class.begin(), s.quotient.edge_of_class.end());
    CHECK(images.size() == s.edge_classes.size());
    CHECK(s.quotient.edges.size() == s.edge_classes.size());
  }
}
