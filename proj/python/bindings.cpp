#include "nilgraph/io.hpp"
#include "nilgraph/reidemeister.hpp"
#include "nilgraph/reproduce.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>

namespace py = pybind11;
using namespace nilgraph;

namespace {

Json to_json(const py::object &o) { return Json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>()); }
py::object to_py(const Json &j) { return py::module_::import("json").attr("loads")(j.dump()); }

WeightedGraph graph_arg(const py::object &o) { return graph_from_json(to_json(o)); }
IntMatrix matrix_arg(const py::object &o) { return int_matrix_from_json(to_json(o)); }

Json labels(const Graph &g, const std::vector<VertexId> &vs) {
  Json out = Json::array();
  for (auto v : vs) out.push_back(g.label(v));
  return out;
}

Json edge_labels(const Graph &g, const std::vector<EdgeId> &es) {
  Json out = Json::array();
  for (auto e : es) out.push_back({g.label(g.edge(e).u), g.label(g.edge(e).v)});
  return out;
}

py::object analyze_py(const py::object &graph) {
  const auto wg = graph_arg(graph);
  const auto s = analyze(wg.graph);
  Json comps = Json::array(), edges = Json::array(), qedges = Json::array(), rel = Json::array();
  for (const auto &c : s.components.classes) comps.push_back(labels(wg.graph, c));
  for (const auto &c : s.edge_classes.classes) edges.push_back(edge_labels(wg.graph, c));
  for (const auto &[a, b] : s.quotient.edges) qedges.push_back({a, b});
  for (std::size_t i = 0; i < s.components.size(); ++i)
    for (std::size_t j = 0; j < s.components.size(); ++j)
      if (i != j && s.components.precedes(i, j)) rel.push_back({i, j});
  const auto rep = structural_subgroups(presentation_from_graph(wg, s), &wg);
  Json torsion = Json::array();
  for (const auto &t : rep.abelianization_torsion) torsion.push_back(integer_to_json(t));
  return to_py({{"components", comps},
                {"edge_classes", edges},
                {"quotient", {{"sizes", s.quotient.sizes}, {"edges", qedges}}},
                {"relations", rel},
                {"vertex_order", labels(wg.graph, s.orders.vertices)},
                {"edge_order", edge_labels(wg.graph, s.orders.edges)},
                {"hirsch", rep.hirsch},
                {"abelianization", {{"free_rank", rep.abelianization_free_rank}, {"torsion", torsion}}},
                {"index", integer_to_json(rep.gamma2_index)},
                {"case", case_label(classify_main_theorem(wg.graph).main_case)}});
}

py::object automorphisms_py(const py::object &graph) {
  const auto wg = graph_arg(graph);
  const auto s = analyze(wg.graph);
  const auto all = automorphism_group(s);
  const auto w = weighted_automorphism_group(wg, s);
  Json list = Json::array();
  for (const auto &a : all) {
    const bool kept = std::any_of(w.begin(), w.end(), [&](const GraphAutomorphism &b) { return b.sigma == a.sigma; });
    list.push_back({{"cycles", cycle_notation(a.sigma, wg.graph.labels())}, {"weighted", kept}});
  }
  return to_py({{"order", all.size()}, {"weighted_order", w.size()}, {"automorphisms", list}});
}

py::object check_py(const py::object &graph, const py::object &B) {
  const auto wg = graph_arg(graph);
  const auto s = analyze(wg.graph);
  const auto v = validate_automorphism(wg, s, matrix_arg(B));
  Json out{{"valid", v.valid}};
  if (!v.valid) {
    out["gate"] = gate_name(v.gate);
    out["reason"] = v.reason;
    return to_py(out);
  }
  const auto r = r_verdict(*v.pair);
  out["C"] = matrix_to_json(v.pair->C);
  out["finite"] = r.finite;
  out["char_B"] = polynomial_to_json(r.char_B);
  out["char_C"] = polynomial_to_json(r.char_C);
  return to_py(out);
}

py::object certify_py(const py::object &graph) {
  const auto wg = graph_arg(graph);
  if (auto b = bounds_certificate(wg)) return to_py(certificate_to_json(*b));
  const auto r = certify_weighted_rinfty(wg);
  if (r.certificate) return to_py(certificate_to_json(*r.certificate));
  return to_py({{"issued", false}, {"reason", r.reason}});
}

py::object verify_py(const py::object &cert) {
  const auto r = verify_certificate(certificate_from_json(to_json(cert)));
  return to_py({{"ok", r.ok}, {"failures", r.failures}});
}

py::object search_py(const py::object &graph, long budget, bool full) {
  const auto wg = graph_arg(graph);
  SearchOptions o;
  o.budget = budget;
  o.full_automorphism_group = full;
  const auto r = finite_r_witness_search(wg, analyze(wg.graph), o);
  Json out{{"found", r.found}, {"candidates", r.candidates_tried}, {"truncated", r.truncated}};
  if (r.found) {
    out["sigma"] = cycle_notation(r.candidate->sigma, wg.graph.labels());
    out["B"] = matrix_to_json(r.pair->B);
    out["C"] = matrix_to_json(r.pair->C);
  }
  return to_py(out);
}

py::object snf_py(const py::object &M) {
  const auto m = matrix_arg(M);
  const auto r = smith_normal_form(m);
  return to_py({{"S", matrix_to_json(r.S)}, {"U", matrix_to_json(r.U)}, {"V", matrix_to_json(r.V)}, {"rank", r.rank}});
}

py::object multiply_py(const py::object &presentation, const py::object &a, const py::object &b) {
  const auto p = presentation_from_json(to_json(presentation));
  auto element = [&](const py::object &o) {
    const Json j = to_json(o);
    GroupElement g;
    for (const auto &x : j.at("z")) g.z.push_back(integer_from_json(x));
    for (const auto &x : j.at("t")) g.t.push_back(integer_from_json(x));
    if (g.z.size() != p.n() || g.t.size() != p.m()) throw std::invalid_argument("element has the wrong length");
    return g;
  };
  const auto c = multiply(p, element(a), element(b));
  Json z = Json::array(), t = Json::array();
  for (const auto &x : c.z) z.push_back(integer_to_json(x));
  for (const auto &x : c.t) t.push_back(integer_to_json(x));
  return to_py({{"z", z}, {"t", t}});
}

py::object reproduce_py(const std::string &id) {
  const auto t = reproduce(id);
  Json checks = Json::array();
  for (const auto &c : t.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return to_py({{"id", t.id}, {"ok", t.ok()}, {"lines", t.lines}, {"checks", checks}});
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "2-step nilpotent groups of weighted graphs";
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);
  py::register_exception<SchemaError>(m, "SchemaError", PyExc_ValueError);

  m.def("analyze", &analyze_py, py::arg("graph"));
  m.def("automorphisms", &automorphisms_py, py::arg("graph"));
  m.def("check", &check_py, py::arg("graph"), py::arg("B"));
  m.def("bounds", [](const py::object &g) {
    const auto b = nilpotency_bounds(graph_arg(g).graph);
    return py::make_tuple(b.xi, b.Xi);
  }, py::arg("graph"));
  m.def("certify", &certify_py, py::arg("graph"));
  m.def("verify_certificate", &verify_py, py::arg("certificate"));
  m.def("search", &search_py, py::arg("graph"), py::arg("budget") = 3, py::arg("full_automorphism_group") = false);
  m.def("smith_normal_form", &snf_py, py::arg("M"));
  m.def("char_poly", [](const py::object &M) { return to_py(polynomial_to_json(char_poly(matrix_arg(M)))); }, py::arg("M"));
  m.def("multiply", &multiply_py, py::arg("presentation"), py::arg("a"), py::arg("b"));
  m.def("remark_group_H", [] { return to_py(presentation_to_json(remark_group_H())); });
  m.def("reproduce", &reproduce_py, py::arg("id"));
  m.def("reproduce_ids", &reproduce_ids);
}
