// One PASS/FAIL line per acceptance criterion, with the pinned time limit.

#include "properties.hpp"

#include "nilgraph/catalog.hpp"
#include "nilgraph/reidemeister.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace nilgraph;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void expect(bool cond, const std::string &what) {
    if (!cond) {
      pass = false;
      notes.push_back("failed: " + what);
    }
  }
};

IntPoly poly(std::initializer_list<long> low_first) {
  std::vector<Integer> c;
  for (long x : low_first) c.emplace_back(x);
  return IntPoly(c);
}

EdgeId edge(const Graph &g, const char *a, const char *b) { return *g.edge_id(g.vertex_id(a), g.vertex_id(b)); }

std::set<std::set<std::string>> vertex_sets(const Graph &g, const std::vector<std::vector<VertexId>> &classes) {
  std::set<std::set<std::string>> out;
  for (const auto &c : classes) {
    std::set<std::string> s;
    for (auto v : c) s.insert(g.label(v));
    out.insert(s);
  }
  return out;
}

Outcome ac1() {
  Outcome o;
  const Graph g = catalog::figure1_graph();
  const auto s = analyze(g);
  o.expect(vertex_sets(g, s.components.classes) ==
               std::set<std::set<std::string>>{{"v1", "v2"}, {"v3", "v4"}, {"v5"}, {"v6"}},
           "coherent components");
  std::size_t loops = 0;
  for (const auto &[a, b] : s.quotient.edges) loops += a == b;
  o.expect(loops == 1, "exactly one self-loop");
  // e1..e6 in input order: v1v5, v2v5, v3v6, v4v6, v1v2, v5v6
  std::set<std::set<EdgeId>> ec;
  for (const auto &c : s.edge_classes.classes) ec.insert(std::set<EdgeId>(c.begin(), c.end()));
  o.expect(ec == std::set<std::set<EdgeId>>{{0, 1}, {2, 3}, {4}, {5}}, "edge classes");
  auto cls = [&](const char *v) { return s.components.class_of[g.vertex_id(v)]; };
  std::set<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t i = 0; i < s.components.size(); ++i)
    for (std::size_t j = 0; j < s.components.size(); ++j)
      if (i != j && s.components.precedes(i, j)) rel.insert({i, j});
  o.expect(rel == std::set<std::pair<std::size_t, std::size_t>>{{cls("v1"), cls("v5")}, {cls("v3"), cls("v5")},
                                                                {cls("v3"), cls("v6")}},
           "relations");
  return o;
}

Outcome ac2() {
  Outcome o;
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<long> d(-9, 9);
  for (long n = 1; n <= 3; ++n) {
    const auto wg = catalog::heisenberg_graph(n);
    const auto p = presentation_from_graph(wg, analyze(wg.graph));
    bool agree = true;
    for (int i = 0; i < 200; ++i) {
      GroupElement a{{d(rng), d(rng)}, {d(rng)}}, b{{d(rng), d(rng)}, {d(rng)}};
      const auto ab = multiply(p, a, b);
      agree = agree && catalog::heisenberg_matrix(n, ab.z[0], ab.z[1], ab.t[0]) ==
                           catalog::heisenberg_matrix(n, a.z[0], a.z[1], a.t[0]) *
                               catalog::heisenberg_matrix(n, b.z[0], b.z[1], b.t[0]);
    }
    o.expect(agree, "matrix oracle n=" + std::to_string(n));
    const auto r = structural_subgroups(p, &wg);
    const auto torsion = n == 1 ? std::vector<Integer>{} : std::vector<Integer>{n};
    o.expect(r.abelianization_free_rank == 2 && r.abelianization_torsion == torsion,
             "abelianization n=" + std::to_string(n));
    o.expect(r.gamma2_index == n, "index n=" + std::to_string(n));
  }
  return o;
}

Outcome ac3() {
  Outcome o;
  const auto wg = WeightedGraph::unweighted(catalog::main_counterexample_graph());
  const auto s = analyze(wg.graph);
  const auto v = validate_automorphism(wg, s, catalog::main_counterexample_B());
  o.expect(v.valid, "B validates");
  if (!v.valid) return o;
  o.expect(v.pair->C == catalog::main_counterexample_C(), "C entry-for-entry");
  const auto r = r_verdict(*v.pair);
  o.expect(r.char_B == product({poly({1, -3, 1}), poly({1, 0, -3, 0, 1}), poly({1, 1}), poly({1, 0, 1})}),
           "char_poly(B)");
  o.expect(r.char_C == product({poly({1, 3, 1}), poly({1, 0, 3, 0, 1}), poly({1, 0, 1})}), "char_poly(C)");
  o.expect(r.finite, "verdict finite");
  return o;
}

Outcome ac4() {
  Outcome o;
  const auto s = analyze(catalog::main_counterexample_graph());
  o.expect(automorphism_group(s).size() == 16, "|Aut(Gamma)| = 16");
  for (long n = 2; n <= 5; ++n) {
    const auto tag = " n=" + std::to_string(n);
    const auto wg = catalog::main_counterexample_weighted(n);
    const auto v = validate_automorphism(wg, s, catalog::main_counterexample_B());
    o.expect(!v.valid && v.gate == Gate::Integrality, "integrality gate" + tag);
    const auto w = weighted_automorphism_group(wg, s);
    const auto e7 = edge(wg.graph, "v7", "v8");
    bool fix = true;
    for (const auto &a : w) fix = fix && a.sigma_E[e7] == e7;
    o.expect(w.size() == 8 && fix, "|Aut(Gamma(k))| = 8 fixing e7" + tag);
    const auto c = certify_weighted_rinfty(wg);
    o.expect(c.certificate && verify_certificate(*c.certificate).ok, "certificate" + tag);
    const auto r = structural_subgroups(presentation_from_graph(wg, s), &wg);
    o.expect(r.gamma2_index == n, "index" + tag);
  }
  return o;
}

Outcome ac5() {
  Outcome o;
  const auto k2 = WeightedGraph::unweighted(catalog::complete_graph(2));
  o.expect(classify_main_theorem(k2.graph).main_case == MainCase::NoEdgesBetweenSingletons, "K2 case (i)");
  const auto w = finite_r_witness_search(k2, analyze(k2.graph));
  o.expect(w.found && r_verdict(*w.pair).finite, "K2 witness");
  const auto p4 = WeightedGraph::unweighted(catalog::path_graph(4));
  o.expect(classify_main_theorem(p4.graph).main_case == MainCase::TranspositionFree, "P4 case (iii)");
  const auto c = certify_weighted_rinfty(p4);
  o.expect(c.certificate && c.certificate->kind == CertificateKind::TranspositionFree &&
               verify_certificate(*c.certificate).ok,
           "P4 certificate");
  o.expect(classify_main_theorem(catalog::main_counterexample_graph()).main_case == MainCase::Weighted,
           "counterexample case (ii)");
  return o;
}

Outcome ac6() {
  Outcome o;
  auto check = [&](const Graph &g, std::size_t xi, std::size_t Xi, const char *name) {
    const auto b = nilpotency_bounds(g);
    o.expect(b.xi == xi && b.Xi == Xi, std::string(name) + " bounds");
  };
  check(catalog::main_counterexample_graph(), 2, 3, "counterexample");
  check(catalog::complete_graph(2), 4, 4, "K2");
  check(catalog::path_graph(4), 2, 3, "P4");
  return o;
}

Outcome ac7() {
  Outcome o;
  const auto h = remark_group_H();
  auto c = [&](std::size_t i, std::size_t j, std::vector<long> v) {
    return h.structure(i - 1, j - 1) == std::vector<Integer>(v.begin(), v.end());
  };
  o.expect(c(1, 3, {1, 0, 0}) && c(1, 4, {0, 1, 0}) && c(3, 4, {0, 0, 1}) && c(2, 4, {2, 0, 0}) &&
               c(2, 3, {0, 1, 0}) && c(1, 2, {0, 0, 0}),
           "structure constants");
  const auto B = catalog::remark_H_B(), C = catalog::remark_H_C();
  o.expect(!automorphism_defect(h, B, C), "automorphism validates");
  const auto r = r_verdict({B, C, C});
  o.expect(r.char_B == poly({-1, 2, 1}) * poly({-1, 2, 1}), "char_poly(B)");
  o.expect(r.char_C == poly({1, -6, 1}) * poly({1, 1}), "char_poly(C)");
  o.expect(r.char_B(Integer(1)) != 0 && r.char_C(Integer(1)) != 0 && r.finite, "verdict finite");
  const auto p4 = WeightedGraph::unweighted(catalog::path_graph(4));
  const auto s = analyze(p4.graph);
  o.expect(quad_ext_iso_check(graded_lie_ring(h), graded_lie_ring(p4, s, Chart::E), catalog::remark_quadext_map(s, 2)).iso,
           "L(H) iso L(P4) over Q(sqrt 2)");
  return o;
}

Outcome ac8() {
  Outcome o;
  using namespace properties;
  const std::vector<std::pair<std::string, std::function<SuiteResult()>>> suites{
      {"a", [] { return snf_vs_minors(500, 101); }},
      {"b", [] { return group_axioms(1000, 202); }},
      {"c", [] { return divisor_invariants(100, 303); }},
      {"d", [] { return functoriality(200, 404); }},
      {"e", [] { return permutation_lift(505); }},
  };
  for (const auto &[tag, run] : suites) {
    const auto r = run();
    o.notes.push_back("(" + tag + ") " + r.summary + (r.ok() ? "" : ", " + std::to_string(r.failures.size()) + " failures"));
    if (!r.ok()) o.pass = false;
  }
  return o;
}

} // namespace

int main() {
  struct Criterion {
    int id;
    const char *name;
    double limit_s;
    Outcome (*run)();
  };
  const std::vector<Criterion> criteria{
      {1, "figure-1 reproduction", 1, ac1},
      {2, "Heisenberg oracle", 1, ac2},
      {3, "main counterexample, unweighted", 1, ac3},
      {4, "main counterexample, weighted n=2..5", 5, ac4},
      {5, "main theorem classifier battery", 10, ac5},
      {6, "nilpotency index bounds", 1, ac6},
      {7, "remark group H", 1, ac7},
      {8, "property suites (a)-(e)", 60, ac8},
  };
  bool all = true;
  for (const auto &c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception &e) {
      o.pass = false;
      o.notes.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs < c.limit_s;
    const bool pass = o.pass && in_time;
    all = all && pass;
    std::ostringstream line;
    line << "AC" << c.id << " " << (pass ? "PASS" : "FAIL") << "  " << c.name << "  [" << std::fixed
         << std::setprecision(3) << secs << " s, limit " << std::setprecision(0) << c.limit_s << " s, exact]";
    std::cout << line.str() << "\n";
    if (!in_time) std::cout << "    over time limit\n";
    for (const auto &n : o.notes) std::cout << "    " << n << "\n";
  }
  return all ? 0 : 1;
}
