#include "nilgraph/catalog.hpp"
#include "nilgraph/io.hpp"
#include "nilgraph/reproduce.hpp"

#include <doctest.h>

using namespace nilgraph;

TEST_CASE("graph json round trip") {
  const auto j = Json::parse(R"({"vertices":["a","b","c"],"edges":[["b","c",3],["a","b"]]})");
  const auto wg = graph_from_json(j);
  CHECK(wg.graph.vertex_count() == 3);
  CHECK(wg.weights == std::vector<Integer>{3, 1});
  const auto canon = canonical_graph_json(wg);
  CHECK(canonical_graph_json(graph_from_json(Json::parse(canon))) == canon);
  CHECK(canonical_graph_json(graph_from_json(graph_to_json(wg))) == canon);
  const auto swapped = graph_from_json(Json::parse(R"({"vertices":["a","b","c"],"edges":[["a","b",1],["c","b",3]]})"));
  CHECK(canonical_graph_json(swapped) == canon);
}

TEST_CASE("big weights survive serialization") {
  const Integer big("123456789012345678901234567890");
  const WeightedGraph wg(catalog::complete_graph(2), {big});
  CHECK(graph_from_json(graph_to_json(wg)).weights[0] == big);
}

TEST_CASE("schema errors") {
  CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"edges":[]})")), SchemaError);
  CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"vertices":["a"],"edges":{}})")), SchemaError);
  CHECK_THROWS(graph_from_json(Json::parse(R"({"vertices":["a","b"],"edges":[["a","b",0]]})")));
  CHECK_THROWS(int_matrix_from_json(Json::parse("[[1,2],[3]]")));
}

TEST_CASE("matrix json round trip") {
  const IntMatrix M{{1, -2}, {3, 4}};
  CHECK(int_matrix_from_json(matrix_to_json(M)) == M);
  const RatMatrix R{{Rational(1, 3), 2}, {0, Rational(-5, 7)}};
  CHECK(rat_matrix_from_json(matrix_to_json(R)) == R);
  const auto s = analyze(catalog::path_graph(4));
  const auto Q = catalog::remark_quadext_map(s, 2);
  CHECK(quad_matrix_from_json(matrix_to_json(Q)) == Q);
}

TEST_CASE("presentation json round trip") {
  const auto h = remark_group_H();
  CHECK(presentation_from_json(presentation_to_json(h)) == h);
  const auto wg = catalog::main_counterexample_weighted(3);
  const auto p = presentation_from_graph(wg, analyze(wg.graph));
  CHECK(presentation_from_json(presentation_to_json(p)) == p);
}

TEST_CASE("certificate json round trip") {
  const auto c = *certify_weighted_rinfty(catalog::main_counterexample_weighted(2)).certificate;
  const auto back = certificate_from_json(certificate_to_json(c));
  CHECK(certificate_to_json(back) == certificate_to_json(c));
  CHECK(verify_certificate(back).ok);
}

TEST_CASE("dot output") {
  const auto s = analyze(catalog::figure1_graph());
  const auto dot = quotient_dot(s);
  CHECK(dot.find("graph") != std::string::npos);
  CHECK(dot.find("l1 -- l1") != std::string::npos);
  CHECK(graph_dot(WeightedGraph::unweighted(catalog::figure1_graph())).find("v5") != std::string::npos);
}

TEST_CASE("reproduction transcripts") {
  for (const auto &id : reproduce_ids()) {
    const auto t = reproduce(id);
    CHECK_MESSAGE(t.ok(), id);
    CHECK_FALSE(t.checks.empty());
  }
  CHECK_THROWS_AS(reproduce("nope"), std::invalid_argument);
}
