#include "nilgraph/catalog.hpp"
#include "nilgraph/lie_ring.hpp"

#include <doctest.h>

#include <set>

using namespace nilgraph;

TEST_CASE("brackets in both charts") {
  const auto wg = catalog::heisenberg_graph(5);
  const auto s = analyze(wg.graph);
  const auto E = graded_lie_ring(wg, s, Chart::E);
  const auto Ek = graded_lie_ring(wg, s, Chart::Ek);
  const std::vector<Rational> v1{1, 0}, v2{0, 1};
  CHECK(bracket_deg1(E, v1, v2) == std::vector<Rational>{5});
  CHECK(bracket_deg1(Ek, v1, v2) == std::vector<Rational>{1});
  CHECK(bracket_deg1(E, v2, v1) == std::vector<Rational>{-5});
  CHECK(bracket_deg1(E, v1, v1) == std::vector<Rational>{0});

  const auto p = WeightedGraph::unweighted(catalog::path_graph(3));
  const auto ps = analyze(p.graph);
  const auto L = graded_lie_ring(p, ps, Chart::E);
  std::vector<Rational> a(3), c(3);
  a[ps.vertex_position(p.graph.vertex_id("v1"))] = 1;
  c[ps.vertex_position(p.graph.vertex_id("v3"))] = 1;
  CHECK(bracket_deg1(L, a, c) == std::vector<Rational>{0, 0});
}

TEST_CASE("induced degree-2 matrix examples") {
  const auto m = WeightedGraph::unweighted(catalog::main_counterexample_graph());
  const auto s = analyze(m.graph);
  const auto L = graded_lie_ring(m, s);
  CHECK(induced_deg2_matrix(L, to_rational(catalog::main_counterexample_B())) ==
        to_rational(catalog::main_counterexample_C()));
  CHECK(induced_deg2_minors(s, catalog::main_counterexample_B()) == catalog::main_counterexample_C());
  CHECK(induced_deg2_matrix(L, RatMatrix::identity(9)) == RatMatrix::identity(8));

  const auto k2 = WeightedGraph::unweighted(catalog::complete_graph(2));
  const auto L2 = graded_lie_ring(k2, analyze(k2.graph));
  CHECK(induced_deg2_matrix(L2, RatMatrix{{3, 5}, {1, 2}}) == RatMatrix{{1}});
  CHECK(induced_deg2_matrix(L2, RatMatrix{{2, 7}, {-1, 4}}) == RatMatrix{{15}});
}

TEST_CASE("graded endomorphism check") {
  const auto m = catalog::main_counterexample_graph();
  const auto s = analyze(m);
  const auto ok = check_graded_endomorphism(s, catalog::main_counterexample_B());
  CHECK(ok.ok);
  CHECK(ok.C == catalog::main_counterexample_C());
  CHECK(check_graded_endomorphism(s, IntMatrix::identity(9)).ok);

  const Graph p3({"a", "b", "c"}, std::vector<std::pair<std::string, std::string>>{{"a", "b"}, {"b", "c"}});
  const auto ps = analyze(p3);
  Permutation ab{1, 0, 2};
  const auto bad = check_graded_endomorphism(ps, permutation_matrix(ps, ab));
  CHECK_FALSE(bad.ok);
  REQUIRE(bad.witness);
  std::set<std::string> w{p3.label(bad.witness->first), p3.label(bad.witness->second)};
  CHECK(w == std::set<std::string>{"a", "c"});
}

TEST_CASE("weighted integrality") {
  const auto u = WeightedGraph::unweighted(catalog::main_counterexample_graph());
  const auto s = analyze(u.graph);
  const auto C = catalog::main_counterexample_C();
  const auto r1 = weighted_integrality(u, s, C);
  CHECK(r1.ok);
  CHECK(r1.conjugate == to_rational(C));
  for (long n = 2; n <= 5; ++n) {
    const auto wg = catalog::main_counterexample_weighted(n);
    const auto r = weighted_integrality(wg, s, C);
    CHECK_FALSE(r.ok);
    // e7 row, e8 column scales by n, e8 row, e7 column by 1/n
    CHECK(r.conjugate(6, 7) == Rational(-n));
    CHECK(r.conjugate(7, 6) == Rational(1, n));
  }
  const auto h = catalog::heisenberg_graph(4);
  const auto r = weighted_integrality(h, analyze(h.graph), IntMatrix{{-1}});
  CHECK(r.ok);
  CHECK(r.conjugate == RatMatrix{{-1}});
}

TEST_CASE("membership in the block-shape group") {
  const auto m = catalog::main_counterexample_graph();
  const auto s = analyze(m);
  const auto r = g_gamma_membership(s, to_rational(catalog::main_counterexample_B()));
  CHECK(r.member);
  REQUIRE(r.p_sigma);
  CHECK(cycle_notation(r.sigmas.front(), m.labels()) == "(v1 v5)(v2 v6)(v7 v9)");
  for (const auto &sigma : r.sigmas) CHECK(induced_edge_data(s, sigma).p_sigma == *r.p_sigma);

  const auto id = g_gamma_membership(s, RatMatrix::identity(9));
  CHECK(id.member);
  CHECK(*id.p_sigma == identity_permutation(s.components.size()));

  const auto f = analyze(catalog::figure1_graph());
  RatMatrix M = RatMatrix::identity(6);
  // block (lambda3 row, lambda1 column): v1 -> v1 + v5
  M(f.vertex_position(f.graph.vertex_id("v5")), f.vertex_position(f.graph.vertex_id("v1"))) = 1;
  CHECK_FALSE(g_gamma_membership(f, M).member);
  RatMatrix U = RatMatrix::identity(6);
  // block (lambda1 row, lambda3 column): v5 -> v5 + v1
  U(f.vertex_position(f.graph.vertex_id("v1")), f.vertex_position(f.graph.vertex_id("v5"))) = 1;
  CHECK(g_gamma_membership(f, U).member);

  const auto wg = catalog::main_counterexample_weighted(2);
  CHECK_FALSE(g_gamma_membership(s, to_rational(catalog::main_counterexample_B()), &wg).member);
}

TEST_CASE("quadratic extension isomorphism") {
  const auto p4 = WeightedGraph::unweighted(catalog::path_graph(4));
  const auto s = analyze(p4.graph);
  const auto src = graded_lie_ring(remark_group_H());
  const auto dst = graded_lie_ring(p4, s, Chart::E);
  CHECK(quad_ext_iso_check(src, dst, catalog::remark_quadext_map(s, 2)).iso);
  CHECK_FALSE(quad_ext_iso_check(src, dst, catalog::remark_quadext_map(s, 3)).iso);
  CHECK(quad_ext_iso_check(dst, dst, to_quad(RatMatrix::identity(4))).iso);
  CHECK_FALSE(quad_ext_iso_check(src, dst, to_quad(RatMatrix::identity(4))).iso);
}

TEST_CASE("induced matrix of a remark-group automorphism") {
  const auto L = graded_lie_ring(remark_group_H());
  CHECK(induced_deg2_matrix(L, to_rational(catalog::remark_H_B())) == to_rational(catalog::remark_H_C()));
}
