#include "nilgraph/io.hpp"
#include "nilgraph/reidemeister.hpp"
#include "nilgraph/reproduce.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <algorithm>

using namespace nilgraph;

namespace {

struct Options {
  bool json = false;
  bool dot = false;
  long budget = 3;
  std::string order_seed = "lexicographic";
  std::string orders_path;
};

std::vector<std::string> names(const Graph &g, const std::vector<VertexId> &vs) {
  std::vector<std::string> out;
  for (auto v : vs) out.push_back(g.label(v));
  return out;
}

std::string join(const std::vector<std::string> &xs, const char *sep = ", ") {
  std::string out;
  for (const auto &x : xs) out += (out.empty() ? "" : sep) + x;
  return out;
}

GraphStructure structure_for(const WeightedGraph &wg, const Options &opt) {
  if (opt.order_seed != "lexicographic") throw CLI::ValidationError("--order-seed", "only 'lexicographic' is supported");
  if (opt.orders_path.empty()) return analyze(wg.graph);
  const Json j = read_json_file(opt.orders_path);
  const Graph &g = wg.graph;
  std::vector<VertexId> vs;
  for (const auto &v : j.at("vertices")) vs.push_back(g.vertex_id(v.get<std::string>()));
  std::vector<EdgeId> es;
  for (const auto &e : j.at("edges")) {
    auto id = g.edge_id(g.vertex_id(e.at(0).get<std::string>()), g.vertex_id(e.at(1).get<std::string>()));
    if (!id) throw SchemaError("unknown edge in orders: " + e.dump());
    es.push_back(*id);
  }
  return analyze(g, TotalOrders::from_sequences(vs, es));
}

IntMatrix read_matrix(const std::string &path, const char *key = "B") {
  const Json j = read_json_file(path);
  if (j.is_object()) return int_matrix_from_json(j.at(key));
  return int_matrix_from_json(j);
}

Json classes_json(const GraphStructure &s) {
  Json out = Json::array();
  for (const auto &c : s.components.classes) out.push_back(names(s.graph, c));
  return out;
}

Json edge_classes_json(const GraphStructure &s) {
  Json out = Json::array();
  for (const auto &c : s.edge_classes.classes) {
    Json x = Json::array();
    for (auto e : c) x.push_back(s.graph.edge_label(e));
    out.push_back(x);
  }
  return out;
}

Json relations_json(const GraphStructure &s) {
  Json out = Json::array();
  for (std::size_t i = 0; i < s.components.size(); ++i)
    for (std::size_t j = 0; j < s.components.size(); ++j)
      if (i != j && s.components.precedes(i, j)) out.push_back({i + 1, j + 1});
  return out;
}

Json quotient_json(const GraphStructure &s) {
  Json edges = Json::array();
  for (const auto &[a, b] : s.quotient.edges) edges.push_back({a + 1, b + 1});
  return {{"sizes", s.quotient.sizes}, {"edges", edges}, {"relations", relations_json(s)}};
}

Json orders_json(const GraphStructure &s) {
  Json e = Json::array();
  for (auto id : s.orders.edges) e.push_back(s.graph.edge_label(id));
  return {{"vertices", names(s.graph, s.orders.vertices)}, {"edges", e}};
}

// ---------------------------------------------------------------------------

int cmd_analyze(const std::string &path, const Options &opt) {
  const auto wg = read_graph_file(path);
  const auto s = structure_for(wg, opt);
  if (opt.dot) {
    std::cout << quotient_dot(s);
    return 0;
  }
  const auto iso = isolated_vertices(wg.graph).isolated;
  const auto rep = structural_subgroups(presentation_from_graph(wg, s), &wg);
  const auto cls = classify_main_theorem(wg.graph);
  if (opt.json) {
    Json torsion = Json::array();
    for (const auto &t : rep.abelianization_torsion) torsion.push_back(integer_to_json(t));
    Json out{{"components", classes_json(s)},
             {"edge_classes", edge_classes_json(s)},
             {"quotient", quotient_json(s)},
             {"orders", orders_json(s)},
             {"isolated", names(wg.graph, iso)},
             {"hirsch", rep.hirsch},
             {"abelianization", {{"free_rank", rep.abelianization_free_rank}, {"torsion", torsion}}},
             {"index", integer_to_json(rep.gamma2_index)},
             {"center_rank", rep.center_rank},
             {"case", case_label(cls.main_case)}};
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "coherent components:\n";
  for (std::size_t i = 0; i < s.components.size(); ++i)
    std::cout << "  lambda" << i + 1 << " = {" << join(names(wg.graph, s.components.classes[i])) << "}  size "
              << s.components.class_size(i) << "\n";
  std::cout << "relations:";
  for (const auto &r : relations_json(s)) std::cout << " lambda" << r[0] << " < lambda" << r[1];
  std::cout << "\nedge classes:\n";
  for (std::size_t i = 0; i < s.edge_classes.size(); ++i) {
    std::vector<std::string> es;
    for (auto e : s.edge_classes.classes[i]) es.push_back(wg.graph.edge_label(e));
    std::cout << "  mu" << i + 1 << " = {" << join(es) << "}\n";
  }
  std::cout << "quotient edges:";
  for (const auto &[a, b] : s.quotient.edges) std::cout << " {lambda" << a + 1 << ",lambda" << b + 1 << "}";
  std::cout << "\nvertex order: " << join(names(wg.graph, s.orders.vertices), " < ") << "\n";
  std::vector<std::string> eo;
  for (auto e : s.orders.edges) eo.push_back(wg.graph.edge_label(e));
  std::cout << "edge order: " << join(eo, " < ") << "\n";
  std::cout << "isolated vertices: {" << join(names(wg.graph, iso)) << "}\n";
  std::cout << "hirsch number: " << rep.hirsch << "\n";
  std::cout << "abelianization: Z^" << rep.abelianization_free_rank;
  for (const auto &t : rep.abelianization_torsion) std::cout << " x Z/" << t;
  std::cout << "\nindex of G_Gamma in G_Gamma(k): " << rep.gamma2_index << "\n";
  std::cout << "main theorem case (" << case_label(cls.main_case) << "): " << case_statement(cls.main_case) << "\n";
  return 0;
}

int cmd_quotient(const std::string &path, const Options &opt) {
  const auto wg = read_graph_file(path);
  const auto s = structure_for(wg, opt);
  if (opt.dot) std::cout << quotient_dot(s);
  else if (opt.json) std::cout << Json{{"components", classes_json(s)}, {"quotient", quotient_json(s)}}.dump(2) << "\n";
  else {
    for (std::size_t i = 0; i < s.components.size(); ++i)
      std::cout << "lambda" << i + 1 << " {" << join(names(wg.graph, s.components.classes[i])) << "} x"
                << s.quotient.sizes[i] << "\n";
    for (const auto &[a, b] : s.quotient.edges)
      std::cout << "lambda" << a + 1 << " -- lambda" << b + 1 << (a == b ? "  (loop)" : "") << "\n";
  }
  return 0;
}

int cmd_aut(const std::string &path, const Options &opt) {
  const auto wg = read_graph_file(path);
  const auto s = structure_for(wg, opt);
  const auto all = automorphism_group(s);
  const auto weighted = weighted_automorphism_group(wg, s);
  const auto q = quotient_automorphisms(s.quotient);
  if (opt.json) {
    Json list = Json::array();
    for (const auto &a : all) {
      const bool w = std::any_of(weighted.begin(), weighted.end(), [&](const GraphAutomorphism &b) { return b.sigma == a.sigma; });
      list.push_back({{"cycles", cycle_notation(a.sigma, wg.graph.labels())}, {"weighted", w}, {"p_sigma", a.p_sigma}});
    }
    std::cout << Json{{"order", all.size()}, {"weighted_order", weighted.size()}, {"quotient_order", q.size()},
                      {"automorphisms", list}}
                     .dump(2)
              << "\n";
    return 0;
  }
  std::cout << "|Aut(Gamma)| = " << all.size() << ", |Aut(Gamma(k))| = " << weighted.size()
            << ", |Aut(quotient)| = " << q.size() << "\n";
  for (const auto &a : all) {
    const bool w = std::any_of(weighted.begin(), weighted.end(), [&](const GraphAutomorphism &b) { return b.sigma == a.sigma; });
    std::cout << "  " << cycle_notation(a.sigma, wg.graph.labels()) << (w ? "" : "   (breaks weights)") << "\n";
  }
  return 0;
}

int cmd_check(const std::string &graph_path, const std::string &matrix_path, const Options &opt) {
  const auto wg = read_graph_file(graph_path);
  const auto s = structure_for(wg, opt);
  const IntMatrix B = read_matrix(matrix_path);
  const auto v = validate_automorphism(wg, s, B);
  Json out{{"valid", v.valid}};
  if (!v.valid) {
    out["gate"] = gate_name(v.gate);
    out["reason"] = v.reason;
    if (v.witness) out["witness"] = {wg.graph.label(v.witness->first), wg.graph.label(v.witness->second)};
    if (v.conjugate) out["conjugate"] = matrix_to_json(*v.conjugate);
  } else {
    const auto verdict = r_verdict(*v.pair);
    out["C"] = matrix_to_json(v.pair->C);
    out["C_sqrt"] = matrix_to_json(v.pair->C_sqrt);
    out["finite"] = verdict.finite;
    out["char_B"] = polynomial_to_json(verdict.char_B);
    out["char_C"] = polynomial_to_json(verdict.char_C);
    if (verdict.witness) {
      Json w = Json::array();
      for (const auto &x : *verdict.witness) w.push_back(rational_to_json(x));
      out["witness"] = w;
    }
  }
  if (opt.json) {
    std::cout << out.dump(2) << "\n";
  } else if (!v.valid) {
    std::cout << "invalid at gate " << gate_name(v.gate) << ": " << v.reason << "\n";
  } else {
    std::cout << "valid automorphism\nC = " << v.pair->C << "\n";
    std::cout << "char_poly(B) = " << out["char_B"]["text"].get<std::string>() << "\n";
    std::cout << "char_poly(C) = " << out["char_C"]["text"].get<std::string>() << "\n";
    std::cout << "Reidemeister number " << (out["finite"].get<bool>() ? "finite" : "infinite") << "\n";
  }
  return 0;
}

int cmd_bounds(const std::string &path, const Options &opt) {
  const auto wg = read_graph_file(path);
  const auto b = nilpotency_bounds(wg.graph);
  if (opt.json) std::cout << Json{{"xi", b.xi}, {"Xi", b.Xi}}.dump(2) << "\n";
  else std::cout << "xi = " << b.xi << ", Xi = " << b.Xi << "\n";
  return 0;
}

int cmd_search(const std::string &path, const Options &opt, bool full) {
  const auto wg = read_graph_file(path);
  const auto s = structure_for(wg, opt);
  SearchOptions so;
  so.budget = opt.budget;
  so.full_automorphism_group = full;
  const auto r = finite_r_witness_search(wg, s, so);
  Json out{{"found", r.found}, {"candidates", r.candidates_tried}, {"valid_candidates", r.candidates_valid},
           {"truncated", r.truncated}};
  if (r.found) {
    out["sigma"] = cycle_notation(r.candidate->sigma, wg.graph.labels());
    out["B"] = matrix_to_json(r.pair->B);
    out["C"] = matrix_to_json(r.pair->C);
    out["char_B"] = polynomial_to_json(r.verdict->char_B);
    out["char_C"] = polynomial_to_json(r.verdict->char_C);
  }
  if (opt.json) std::cout << out.dump(2) << "\n";
  else if (r.found)
    std::cout << "finite-R automorphism found after " << r.candidates_tried << " candidates\nsigma = "
              << out["sigma"].get<std::string>() << "\nB = " << r.pair->B << "\nC = " << r.pair->C << "\n";
  else
    std::cout << "no finite-R automorphism among " << r.candidates_tried << " candidates (" << r.candidates_valid
              << " valid); inconclusive\n";
  return 0;
}

int cmd_certify(const std::string &path, const std::string &out_path, const std::string &verify_path, const Options &opt) {
  if (!verify_path.empty()) {
    const auto c = certificate_from_json(read_json_file(verify_path));
    const auto r = verify_certificate(c);
    if (opt.json) std::cout << Json{{"ok", r.ok}, {"failures", r.failures}}.dump(2) << "\n";
    else {
      std::cout << (r.ok ? "certificate verified" : "certificate REJECTED") << "\n";
      for (const auto &f : r.failures) std::cout << "  " << f << "\n";
    }
    return r.ok ? 0 : 1;
  }
  const auto wg = read_graph_file(path);
  std::optional<RInftyCertificate> cert = bounds_certificate(wg);
  std::string refusal;
  if (!cert) {
    const auto r = certify_weighted_rinfty(wg);
    cert = r.certificate;
    refusal = r.reason;
  }
  if (!cert) {
    if (opt.json) std::cout << Json{{"issued", false}, {"reason", refusal}}.dump(2) << "\n";
    else std::cout << "no certificate: " << refusal << "\n";
    return 0;
  }
  const Json j = certificate_to_json(*cert);
  if (!out_path.empty()) {
    std::ofstream(out_path) << j.dump(2) << "\n";
  }
  if (opt.json) std::cout << j.dump(2) << "\n";
  else {
    std::cout << "certificate " << kind_name(cert->kind) << " issued (graph " << cert->graph_hash << ")\n";
    std::cout << "  " << cert->justification << "\n";
    if (cert->pinned_edge) std::cout << "  pinned edge " << wg.graph.edge_label(*cert->pinned_edge) << ", "
                                     << cert->transcript.size() << " weight-compatible automorphisms checked\n";
  }
  return 0;
}

int cmd_rinf(const std::string &path, const Options &opt) {
  const auto wg = read_graph_file(path);
  const auto s = structure_for(wg, opt);
  const auto cls = classify_main_theorem(wg.graph);
  Json out{{"case", case_label(cls.main_case)}, {"statement", case_statement(cls.main_case)},
           {"V0", names(wg.graph, cls.V0)}};
  std::string verdict = "unknown";
  if (auto b = bounds_certificate(wg)) {
    verdict = "no R-infinity (bounds certificate)";
  } else if (!cls.E0.empty()) {
    const auto r = certify_weighted_rinfty(wg);
    if (r.certificate) verdict = std::string("R-infinity (") + kind_name(r.certificate->kind) + " certificate)";
    else out["refusal"] = r.reason;
  }
  if (verdict == "unknown") {
    SearchOptions so;
    so.budget = opt.budget;
    const auto r = finite_r_witness_search(wg, s, so);
    if (r.found) {
      verdict = "no R-infinity (finite-R automorphism found)";
      out["witness_B"] = matrix_to_json(r.pair->B);
    } else {
      verdict = "inconclusive";
    }
  }
  out["verdict"] = verdict;
  if (opt.json) std::cout << out.dump(2) << "\n";
  else {
    std::cout << "main theorem case (" << case_label(cls.main_case) << "): " << case_statement(cls.main_case) << "\n";
    if (out.contains("refusal")) std::cout << "certificate refused: " << out["refusal"].get<std::string>() << "\n";
    std::cout << "verdict: " << verdict << "\n";
  }
  return 0;
}

int cmd_snf(const std::string &path, const Options &opt) {
  const Json j = read_json_file(path);
  const IntMatrix M = j.is_object() ? int_matrix_from_json(j.at("M")) : int_matrix_from_json(j);
  const auto r = smith_normal_form(M);
  Json divisors = Json::array();
  for (std::size_t l = 1; l <= std::min(M.rows(), M.cols()); ++l) divisors.push_back(integer_to_json(determinant_divisor(M, l)));
  if (opt.json) {
    std::cout << Json{{"S", matrix_to_json(r.S)}, {"U", matrix_to_json(r.U)}, {"V", matrix_to_json(r.V)},
                      {"rank", r.rank}, {"determinant_divisors", divisors}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "S = " << r.S << "\nU = " << r.U << "\nV = " << r.V << "\nrank " << r.rank
              << "\ndeterminant divisors " << divisors.dump() << "\n";
  }
  return 0;
}

int cmd_reproduce(const std::string &id, const Options &opt) {
  const std::vector<std::string> ids = id == "all" ? reproduce_ids() : std::vector<std::string>{id};
  bool ok = true;
  Json all = Json::array();
  for (const auto &x : ids) {
    const auto t = reproduce(x);
    ok = ok && t.ok();
    if (opt.json) {
      Json checks = Json::array();
      for (const auto &c : t.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
      all.push_back({{"id", t.id}, {"ok", t.ok()}, {"lines", t.lines}, {"checks", checks}});
      continue;
    }
    std::cout << "== " << t.id << "\n";
    for (const auto &l : t.lines) std::cout << "  " << l << "\n";
    for (const auto &c : t.checks)
      std::cout << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
  }
  if (opt.json) std::cout << all.dump(2) << "\n";
  return ok ? 0 : 1;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"2-step nilpotent groups of weighted graphs: automorphisms and Reidemeister finiteness"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_flag("--json", opt.json, "machine-readable output");
  app.add_flag("--dot", opt.dot, "Graphviz output where supported");
  app.add_option("--budget", opt.budget, "polynomial pool size for the witness search")->check(CLI::PositiveNumber);
  app.add_option("--order-seed", opt.order_seed, "total order construction")->check(CLI::IsMember({"lexicographic"}));
  app.add_option("--orders", opt.orders_path, "JSON file with explicit vertex and edge orders");

  std::string graph, matrix, id, out_path, verify_path;
  bool full = false;
  auto *analyze_cmd = app.add_subcommand("analyze", "components, edge classes, quotient, orders, structure");
  analyze_cmd->add_option("graph", graph)->required();
  auto *quotient_cmd = app.add_subcommand("quotient", "quotient graph");
  quotient_cmd->add_option("graph", graph)->required();
  auto *aut_cmd = app.add_subcommand("aut", "graph automorphisms and the weight-compatible subgroup");
  aut_cmd->add_option("graph", graph)->required();
  auto *check_cmd = app.add_subcommand("check", "validate a vertex matrix B and decide finiteness of R");
  check_cmd->add_option("graph", graph)->required();
  check_cmd->add_option("matrix", matrix)->required();
  auto *rinf_cmd = app.add_subcommand("rinf", "classify and decide the R-infinity property where possible");
  rinf_cmd->add_option("graph", graph)->required();
  auto *bounds_cmd = app.add_subcommand("bounds", "lower and upper nilpotency index bounds");
  bounds_cmd->add_option("graph", graph)->required();
  auto *certify_cmd = app.add_subcommand("certify", "issue or verify an R-infinity certificate");
  certify_cmd->add_option("graph", graph);
  certify_cmd->add_option("-o,--output", out_path, "write the certificate JSON");
  certify_cmd->add_option("--verify", verify_path, "verify a certificate file");
  auto *search_cmd = app.add_subcommand("search", "search for an automorphism with finite Reidemeister number");
  search_cmd->add_option("graph", graph)->required();
  search_cmd->add_flag("--full-aut", full, "permute by all of Aut(Gamma) instead of Aut(Gamma(k))");
  auto *snf_cmd = app.add_subcommand("snf", "Smith normal form and determinant divisors of an integer matrix");
  snf_cmd->add_option("matrix", matrix)->required();
  auto *repro_cmd = app.add_subcommand("reproduce", "rerun a worked example");
  repro_cmd->add_option("id", id)->required()->check(CLI::IsMember([] {
    auto ids = reproduce_ids();
    ids.push_back("all");
    return ids;
  }()));

  CLI11_PARSE(app, argc, argv);
  try {
    if (*analyze_cmd) return cmd_analyze(graph, opt);
    if (*quotient_cmd) return cmd_quotient(graph, opt);
    if (*aut_cmd) return cmd_aut(graph, opt);
    if (*check_cmd) return cmd_check(graph, matrix, opt);
    if (*rinf_cmd) return cmd_rinf(graph, opt);
    if (*bounds_cmd) return cmd_bounds(graph, opt);
    if (*certify_cmd) {
      if (graph.empty() && verify_path.empty()) throw CLI::ValidationError("certify", "needs a graph or --verify");
      return cmd_certify(graph, out_path, verify_path, opt);
    }
    if (*search_cmd) return cmd_search(graph, opt, full);
    if (*snf_cmd) return cmd_snf(matrix, opt);
    if (*repro_cmd) return cmd_reproduce(id, opt);
  } catch (const CLI::Error &e) {
    return app.exit(e);
  } catch (const PreconditionError &e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return 3;
  } catch (const EnumerationBoundError &e) {
    std::cerr << "bound exceeded: " << e.what() << "\n";
    return 4;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
