#include "nilgraph/io.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

namespace nilgraph {

Json integer_to_json(const Integer &x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

Integer integer_from_json(const Json &j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_number_unsigned()) return Integer(std::to_string(j.get<unsigned long long>()));
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::invalid_argument &) {
    }
  }
  throw SchemaError("expected an integer, got " + j.dump());
}

Json rational_to_json(const Rational &x) {
  if (x.get_den() == 1) return integer_to_json(x.get_num());
  return x.get_str();
}

Rational rational_from_json(const Json &j) {
  if (j.is_string()) {
    try {
      Rational r(j.get<std::string>());
      if (r.get_den() == 0) throw SchemaError("zero denominator");
      r.canonicalize();
      return r;
    } catch (const std::invalid_argument &) {
      throw SchemaError("expected a rational, got " + j.dump());
    }
  }
  return Rational(integer_from_json(j));
}

// ---------------------------------------------------------------------------
// Graphs

WeightedGraph graph_from_json(const Json &j) {
  if (!j.is_object() || !j.contains("vertices") || !j.at("vertices").is_array())
    throw SchemaError("graph needs a \"vertices\" array");
  std::vector<std::string> labels;
  for (const auto &v : j.at("vertices")) {
    if (!v.is_string()) throw SchemaError("vertex labels must be strings");
    labels.push_back(v.get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<Integer> weights;
  if (j.contains("edges")) {
    if (!j.at("edges").is_array()) throw SchemaError("\"edges\" must be an array");
    for (const auto &e : j.at("edges")) {
      if (!e.is_array() || e.size() < 2 || e.size() > 3 || !e[0].is_string() || !e[1].is_string())
        throw SchemaError("edges are [\"u\", \"v\"] or [\"u\", \"v\", weight]");
      edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
      weights.push_back(e.size() == 3 ? integer_from_json(e[2]) : Integer(1));
    }
  }
  try {
    return WeightedGraph(Graph(std::move(labels), edges), std::move(weights));
  } catch (const GraphError &err) {
    throw SchemaError(err.what());
  }
}

Json graph_to_json(const WeightedGraph &wg) {
  Json j;
  j["vertices"] = wg.graph.labels();
  j["edges"] = Json::array();
  for (EdgeId e = 0; e < wg.graph.edge_count(); ++e) {
    const Edge &ed = wg.graph.edge(e);
    j["edges"].push_back({wg.graph.label(ed.u), wg.graph.label(ed.v), integer_to_json(wg.weight(e))});
  }
  return j;
}

std::string canonical_graph_json(const WeightedGraph &wg) {
  std::vector<EdgeId> order(wg.graph.edge_count());
  for (EdgeId e = 0; e < order.size(); ++e) order[e] = e;
  std::sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
    const Edge &x = wg.graph.edge(a), &y = wg.graph.edge(b);
    return std::tie(x.u, x.v) < std::tie(y.u, y.v);
  });
  Json j;
  j["vertices"] = wg.graph.labels();
  j["edges"] = Json::array();
  for (EdgeId e : order) {
    const Edge &ed = wg.graph.edge(e);
    j["edges"].push_back({wg.graph.label(ed.u), wg.graph.label(ed.v), integer_to_json(wg.weight(e))});
  }
  return j.dump();
}

Json read_json_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error &err) {
    throw SchemaError(path + ": " + err.what());
  }
}

WeightedGraph read_graph_file(const std::string &path) { return graph_from_json(read_json_file(path)); }

// ---------------------------------------------------------------------------
// Matrices

namespace {

template <class T, class F> Matrix<T> matrix_from_json(const Json &j, F entry) {
  if (!j.is_array()) throw SchemaError("matrix must be an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows ? j[0].size() : 0;
  Matrix<T> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw SchemaError("matrix rows must be arrays of equal length");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = entry(j[i][k]);
  }
  return m;
}

template <class T, class F> Json matrix_json(const Matrix<T> &m, F entry) {
  Json j = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(entry(m(i, k)));
    j.push_back(std::move(row));
  }
  return j;
}

QuadExt quad_from_json(const Json &j) {
  if (j.is_array() && j.size() == 5) {
    const Rational a(integer_from_json(j[0]), integer_from_json(j[1]));
    const Rational b(integer_from_json(j[2]), integer_from_json(j[3]));
    if (a.get_den() == 0 || b.get_den() == 0) throw SchemaError("zero denominator in quadratic entry");
    const long d = integer_from_json(j[4]).get_si();
    if (b == 0) return QuadExt(a);
    try {
      return QuadExt(a, b, d);
    } catch (const std::invalid_argument &err) {
      throw SchemaError(err.what());
    }
  }
  return QuadExt(rational_from_json(j));
}

Json quad_to_json(const QuadExt &x) {
  Rational a = x.rational_part(), b = x.sqrt_part();
  return {integer_to_json(a.get_num()), integer_to_json(a.get_den()), integer_to_json(b.get_num()),
          integer_to_json(b.get_den()), x.is_rational() ? 0 : x.radicand()};
}

} // namespace

IntMatrix int_matrix_from_json(const Json &j) { return matrix_from_json<Integer>(j, integer_from_json); }
RatMatrix rat_matrix_from_json(const Json &j) { return matrix_from_json<Rational>(j, rational_from_json); }
QuadMatrix quad_matrix_from_json(const Json &j) { return matrix_from_json<QuadExt>(j, quad_from_json); }
Json matrix_to_json(const IntMatrix &m) { return matrix_json(m, integer_to_json); }
Json matrix_to_json(const RatMatrix &m) { return matrix_json(m, rational_to_json); }
Json matrix_to_json(const QuadMatrix &m) { return matrix_json(m, quad_to_json); }

Json polynomial_to_json(const IntPoly &p) {
  Json c = Json::array();
  for (const auto &x : p.coefficients()) c.push_back(integer_to_json(x));
  return {{"coefficients", c}, {"text", to_string(p)}};
}

// ---------------------------------------------------------------------------
// Presentations

Json presentation_to_json(const TwoStepPresentation &p) {
  Json c = Json::array();
  for (std::size_t i = 0; i < p.n(); ++i)
    for (std::size_t j = i + 1; j < p.n(); ++j) {
      const auto &v = p.structure(i, j);
      for (std::size_t l = 0; l < p.m(); ++l)
        if (sgn(v[l]) != 0) c.push_back({i + 1, j + 1, l + 1, integer_to_json(v[l])});
    }
  return {{"n", p.n()}, {"m", p.m()}, {"x_names", p.x_names}, {"y_names", p.y_names}, {"c", c}};
}

TwoStepPresentation presentation_from_json(const Json &j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("m")) throw SchemaError("presentation needs n and m");
  const auto n = j.at("n").get<std::size_t>(), m = j.at("m").get<std::size_t>();
  TwoStepPresentation p(n, m);
  if (j.contains("x_names")) {
    auto names = j.at("x_names").get<std::vector<std::string>>();
    if (names.size() != n) throw SchemaError("x_names must have n entries");
    p.x_names = std::move(names);
  }
  if (j.contains("y_names")) {
    auto names = j.at("y_names").get<std::vector<std::string>>();
    if (names.size() != m) throw SchemaError("y_names must have m entries");
    p.y_names = std::move(names);
  }
  if (j.contains("c")) {
    for (const auto &e : j.at("c")) {
      if (!e.is_array() || e.size() != 4) throw SchemaError("structure constants are [i, j, l, value]");
      const auto i = e[0].get<std::size_t>(), k = e[1].get<std::size_t>(), l = e[2].get<std::size_t>();
      if (i < 1 || k <= i || k > n || l < 1 || l > m) throw SchemaError("structure constant index out of range");
      p.set_structure(i - 1, k - 1, l - 1, integer_from_json(e[3]));
    }
  }
  return p;
}

// ---------------------------------------------------------------------------
// Certificates

namespace {

Json edge_json(const Graph &g, EdgeId e) { return {g.label(g.edge(e).u), g.label(g.edge(e).v)}; }

EdgeId edge_from_json(const Graph &g, const Json &j) {
  if (!j.is_array() || j.size() != 2) throw SchemaError("edges are [\"u\", \"v\"]");
  const auto id = g.edge_id(g.vertex_id(j[0].get<std::string>()), g.vertex_id(j[1].get<std::string>()));
  if (!id) throw SchemaError("unknown edge " + j.dump());
  return *id;
}

Json permutation_json(const std::vector<std::string> &labels, const Permutation &p) {
  Json j = Json::array();
  for (auto x : p) j.push_back(labels.at(x));
  return j;
}

} // namespace

Json certificate_to_json(const RInftyCertificate &c) {
  const Graph &g = c.graph.graph;
  Json j;
  j["kind"] = kind_name(c.kind);
  j["has_rinfty"] = c.has_rinfty;
  j["graph"] = graph_to_json(c.graph);
  j["graph_hash"] = c.graph_hash;
  j["V0"] = Json::array();
  for (auto v : c.V0) j["V0"].push_back(g.label(v));
  j["E0"] = Json::array();
  for (auto e : c.E0) j["E0"].push_back(edge_json(g, e));
  if (c.pinned_edge) j["pinned_edge"] = edge_json(g, *c.pinned_edge);
  j["aut_order"] = c.aut_order;
  j["transcript"] = Json::array();
  std::vector<std::string> edge_labels;
  for (EdgeId e = 0; e < g.edge_count(); ++e) edge_labels.push_back(g.edge_label(e));
  for (const auto &t : c.transcript)
    j["transcript"].push_back({{"sigma", permutation_json(g.labels(), t.sigma)},
                               {"sigma_E", permutation_json(edge_labels, t.sigma_E)},
                               {"cycles", cycle_notation(t.sigma, g.labels())},
                               {"fixes_edge", t.fixes_edge}});
  if (c.bounds) j["bounds"] = {{"xi", c.bounds->xi}, {"Xi", c.bounds->Xi}};
  j["justification"] = c.justification;
  return j;
}

RInftyCertificate certificate_from_json(const Json &j) {
  try {
    RInftyCertificate c;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "transposition_free") c.kind = CertificateKind::TranspositionFree;
    else if (kind == "pinned_edge") c.kind = CertificateKind::PinnedEdge;
    else if (kind == "bounds") c.kind = CertificateKind::Bounds;
    else throw SchemaError("unknown certificate kind " + kind);
    c.has_rinfty = j.at("has_rinfty").get<bool>();
    c.graph = graph_from_json(j.at("graph"));
    const Graph &g = c.graph.graph;
    c.graph_hash = j.at("graph_hash").get<std::string>();
    for (const auto &v : j.at("V0")) c.V0.push_back(g.vertex_id(v.get<std::string>()));
    for (const auto &e : j.at("E0")) c.E0.push_back(edge_from_json(g, e));
    if (j.contains("pinned_edge")) c.pinned_edge = edge_from_json(g, j.at("pinned_edge"));
    c.aut_order = j.at("aut_order").get<std::size_t>();
    std::map<std::string, EdgeId> edge_by_label;
    for (EdgeId e = 0; e < g.edge_count(); ++e) edge_by_label[g.edge_label(e)] = e;
    for (const auto &t : j.at("transcript")) {
      SigmaCheck s;
      for (const auto &x : t.at("sigma")) s.sigma.push_back(g.vertex_id(x.get<std::string>()));
      for (const auto &x : t.at("sigma_E")) s.sigma_E.push_back(edge_by_label.at(x.get<std::string>()));
      s.fixes_edge = t.at("fixes_edge").get<bool>();
      c.transcript.push_back(std::move(s));
    }
    if (j.contains("bounds"))
      c.bounds = NilpotencyBounds{j.at("bounds").at("xi").get<std::size_t>(), j.at("bounds").at("Xi").get<std::size_t>()};
    c.justification = j.value("justification", "");
    return c;
  } catch (const Json::exception &err) {
    throw SchemaError(std::string("certificate: ") + err.what());
  } catch (const std::out_of_range &err) {
    throw SchemaError(std::string("certificate: ") + err.what());
  } catch (const GraphError &err) {
    throw SchemaError(std::string("certificate: ") + err.what());
  }
}

// ---------------------------------------------------------------------------
// Graphviz

namespace {

std::string quoted(const std::string &s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

} // namespace

std::string graph_dot(const WeightedGraph &wg) {
  std::ostringstream os;
  os << "graph G {\n";
  for (const auto &l : wg.graph.labels()) os << "  " << quoted(l) << ";\n";
  for (EdgeId e = 0; e < wg.graph.edge_count(); ++e) {
    const Edge &ed = wg.graph.edge(e);
    os << "  " << quoted(wg.graph.label(ed.u)) << " -- " << quoted(wg.graph.label(ed.v));
    if (wg.weight(e) != 1) os << " [label=" << quoted(wg.weight(e).get_str()) << "]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string quotient_dot(const GraphStructure &s) {
  std::ostringstream os;
  os << "graph Q {\n";
  const auto &p = s.components;
  for (std::size_t i = 0; i < p.size(); ++i) {
    std::string members;
    for (auto v : p.classes[i]) members += (members.empty() ? "" : ",") + s.graph.label(v);
    os << "  l" << i + 1 << " [label=" << quoted("{" + members + "} x" + std::to_string(p.class_size(i))) << "];\n";
  }
  for (const auto &[a, b] : s.quotient.edges) os << "  l" << a + 1 << " -- l" << b + 1 << ";\n";
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j)
      if (i != j && p.precedes(i, j)) os << "  l" << i + 1 << " -- l" << j + 1 << " [style=dashed, dir=forward];\n";
  os << "}\n";
  return os.str();
}

} // namespace nilgraph
