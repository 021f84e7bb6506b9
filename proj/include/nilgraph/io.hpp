#pragma once

// JSON formats for graphs, matrices, presentations and certificates, plus
// Graphviz export.
//
//   graph:        {"vertices": ["v1", ...], "edges": [["v1", "v2", k], ...]}
//   matrix:       row-major array of rows; integers as numbers (or decimal
//                 strings beyond 64 bits), rationals as "p/q" strings
//   Q(sqrt d):    entries [a_num, a_den, b_num, b_den, d]
//   presentation: {"n", "m", "x_names", "y_names", "c": [[i, j, l, value], ...]}
//                 with 1-based i < j and l

#include "nilgraph/exact_linalg.hpp"
#include "nilgraph/graph.hpp"
#include "nilgraph/nilpotent_group.hpp"
#include "nilgraph/reidemeister.hpp"
#include "nilgraph/weighted_graph.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace nilgraph {

using Json = nlohmann::json;

class SchemaError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

Json integer_to_json(const Integer &x);
Integer integer_from_json(const Json &j);
Json rational_to_json(const Rational &x);
Rational rational_from_json(const Json &j);

WeightedGraph graph_from_json(const Json &j);
/// Edges in edge-id order.
Json graph_to_json(const WeightedGraph &wg);
/// Edges sorted by endpoint ids, weights always present, compact dump.
std::string canonical_graph_json(const WeightedGraph &wg);
WeightedGraph read_graph_file(const std::string &path);
Json read_json_file(const std::string &path);

IntMatrix int_matrix_from_json(const Json &j);
RatMatrix rat_matrix_from_json(const Json &j);
QuadMatrix quad_matrix_from_json(const Json &j);
Json matrix_to_json(const IntMatrix &m);
Json matrix_to_json(const RatMatrix &m);
Json matrix_to_json(const QuadMatrix &m);

Json polynomial_to_json(const IntPoly &p);

Json presentation_to_json(const TwoStepPresentation &p);
TwoStepPresentation presentation_from_json(const Json &j);

Json certificate_to_json(const RInftyCertificate &c);
RInftyCertificate certificate_from_json(const Json &j);

std::string graph_dot(const WeightedGraph &wg);
std::string quotient_dot(const GraphStructure &s);

} // namespace nilgraph
