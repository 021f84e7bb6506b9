#include "nilgraph/reproduce.hpp"

#include "nilgraph/catalog.hpp"
#include "nilgraph/reidemeister.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace nilgraph {

bool Transcript::ok() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const ReproCheck &c) { return c.pass; });
}

const std::vector<std::string> &reproduce_ids() {
  static const std::vector<std::string> ids{"figure1",        "heisenberg",       "main-counterexample",
                                            "remark-quadext", "remark-H-finiteR", "path4"};
  return ids;
}

namespace {

template <class T> std::string str(const T &x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

using LabelSets = std::set<std::set<std::string>>;

LabelSets vertex_classes(const GraphStructure &s) {
  LabelSets out;
  for (const auto &c : s.components.classes) {
    std::set<std::string> x;
    for (auto v : c) x.insert(s.graph.label(v));
    out.insert(x);
  }
  return out;
}

LabelSets edge_class_sets(const GraphStructure &s) {
  LabelSets out;
  for (const auto &c : s.edge_classes.classes) {
    std::set<std::string> x;
    for (auto e : c) x.insert(s.graph.edge_label(e));
    out.insert(x);
  }
  return out;
}

std::string class_string(const GraphStructure &s, std::size_t i) {
  std::string out = "{";
  for (auto v : s.components.classes[i]) out += (out.size() > 1 ? "," : "") + s.graph.label(v);
  return out + "}";
}

class Builder {
public:
  explicit Builder(std::string id) { t_.id = std::move(id); }
  void line(std::string s) { t_.lines.push_back(std::move(s)); }
  void check(std::string name, bool pass, std::string detail = {}) {
    t_.checks.push_back({std::move(name), pass, std::move(detail)});
  }
  Transcript done() { return std::move(t_); }

private:
  Transcript t_;
};

Transcript figure1() {
  Builder b("figure1");
  const auto s = analyze(catalog::figure1_graph());
  for (std::size_t i = 0; i < s.components.size(); ++i) b.line("lambda" + std::to_string(i + 1) + " = " + class_string(s, i));
  b.check("coherent components", vertex_classes(s) == LabelSets{{"v1", "v2"}, {"v3", "v4"}, {"v5"}, {"v6"}});
  std::size_t loops = 0;
  for (const auto &[a, c] : s.quotient.edges) loops += a == c;
  b.line("quotient edges: " + std::to_string(s.quotient.edges.size()) + ", self-loops: " + std::to_string(loops));
  b.check("one self-loop", loops == 1);
  b.check("edge classes",
          edge_class_sets(s) == LabelSets{{"{v1,v5}", "{v2,v5}"}, {"{v3,v6}", "{v4,v6}"}, {"{v1,v2}"}, {"{v5,v6}"}});
  std::set<std::pair<std::string, std::string>> rel;
  for (std::size_t i = 0; i < s.components.size(); ++i)
    for (std::size_t j = 0; j < s.components.size(); ++j)
      if (i != j && s.components.precedes(i, j)) {
        rel.insert({class_string(s, i), class_string(s, j)});
        b.line(class_string(s, i) + " < " + class_string(s, j));
      }
  b.check("class relations", rel == std::set<std::pair<std::string, std::string>>{
                                        {"{v1,v2}", "{v5}"}, {"{v3,v4}", "{v5}"}, {"{v3,v4}", "{v6}"}});
  return b.done();
}

Transcript heisenberg() {
  Builder b("heisenberg");
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<long> dist(-9, 9);
  for (long n = 1; n <= 3; ++n) {
    const auto wg = catalog::heisenberg_graph(n);
    const auto s = analyze(wg.graph);
    const auto p = presentation_from_graph(wg, s);
    auto as_matrix = [&](const GroupElement &g) { return catalog::heisenberg_matrix(n, g.z[0], g.z[1], g.t[0]); };
    std::size_t agree = 0;
    for (int k = 0; k < 200; ++k) {
      GroupElement x{{dist(rng), dist(rng)}, {dist(rng)}}, y{{dist(rng), dist(rng)}, {dist(rng)}};
      agree += as_matrix(multiply(p, x, y)) == as_matrix(x) * as_matrix(y);
    }
    b.line("n=" + std::to_string(n) + ": matrix oracle agreement " + std::to_string(agree) + "/200");
    b.check("matrix oracle n=" + std::to_string(n), agree == 200);
    const auto rep = structural_subgroups(p, &wg);
    std::vector<Integer> torsion_expected;
    if (n > 1) torsion_expected.push_back(n);
    b.line("n=" + std::to_string(n) + ": abelianization Z^" + std::to_string(rep.abelianization_free_rank) +
           (rep.abelianization_torsion.empty() ? "" : " x Z/" + rep.abelianization_torsion[0].get_str()) +
           ", index " + rep.gamma2_index.get_str() + ", hirsch " + std::to_string(rep.hirsch));
    b.check("abelianization n=" + std::to_string(n),
            rep.abelianization_free_rank == 2 && rep.abelianization_torsion == torsion_expected);
    b.check("index n=" + std::to_string(n), rep.gamma2_index == n && *rep.unweighted_index == n);
    const auto comm = commutator(p, x_generator(p, 0), x_generator(p, 1));
    b.check("[v1,v2] = e^n for n=" + std::to_string(n), comm.z == std::vector<Integer>{0, 0} && comm.t[0] == n);
  }
  return b.done();
}

Transcript main_counterexample() {
  Builder b("main-counterexample");
  const auto g = catalog::main_counterexample_graph();
  const auto s = analyze(g);
  const auto unweighted = WeightedGraph::unweighted(g);
  const auto aut = automorphism_group(s);
  b.line("|Aut(Gamma)| = " + std::to_string(aut.size()));
  b.check("|Aut(Gamma)| = 16", aut.size() == 16);

  const IntMatrix B = catalog::main_counterexample_B();
  const auto membership = g_gamma_membership(s, to_rational(B));
  if (membership.member) b.line("sigma = " + cycle_notation(membership.sigmas.front(), g.labels()));
  b.check("B has the block shape with (v1 v5)(v2 v6)(v7 v9)",
          membership.member && std::any_of(membership.sigmas.begin(), membership.sigmas.end(), [&](const Permutation &p) {
            return cycle_notation(p, g.labels()) == "(v1 v5)(v2 v6)(v7 v9)";
          }));

  const auto v = validate_automorphism(unweighted, s, B);
  b.check("B validates for k = 1", v.valid, v.reason);
  if (v.valid) {
    b.line("C = " + str(v.pair->C));
    b.check("C equals the displayed matrix", v.pair->C == catalog::main_counterexample_C());
    const auto verdict = r_verdict(*v.pair);
    b.line("char_poly(B) = " + to_string(verdict.char_B));
    b.line("char_poly(C) = " + to_string(verdict.char_C));
    b.check("char_poly(B) factorization", verdict.char_B == catalog::main_counterexample_char_B());
    b.check("char_poly(C) factorization", verdict.char_C == catalog::main_counterexample_char_C());
    b.line(std::string("verdict k=1: ") + (verdict.finite ? "finite" : "infinite"));
    b.check("R(phi) finite for k = 1", verdict.finite);
  }
  const auto refusal = certify_weighted_rinfty(unweighted);
  b.line("certify k=1: " + (refusal.certificate ? std::string("issued") : refusal.reason));
  b.check("no certificate for k = 1",
          !refusal.certificate && refusal.violating_sigma &&
              cycle_notation(*refusal.violating_sigma, g.labels()) == "(v1 v5)(v2 v6)(v7 v9)");

  for (long n = 2; n <= 5; ++n) {
    const auto wg = catalog::main_counterexample_weighted(n);
    const std::string tag = " n=" + std::to_string(n);
    const auto vn = validate_automorphism(wg, s, B);
    b.line("k_" + std::to_string(n) + ": B rejected at gate " + gate_name(vn.gate));
    b.check("B rejected at integrality" + tag, !vn.valid && vn.gate == Gate::Integrality);
    const auto waut = weighted_automorphism_group(wg, s);
    const auto e7 = *g.edge_id(g.vertex_id("v7"), g.vertex_id("v8"));
    const bool all_fix = std::all_of(waut.begin(), waut.end(), [&](const GraphAutomorphism &a) { return a.sigma_E[e7] == e7; });
    b.line("k_" + std::to_string(n) + ": |Aut(Gamma(k))| = " + std::to_string(waut.size()));
    b.check("|Aut(Gamma(k))| = 8, all fix e7" + tag, waut.size() == 8 && all_fix);
    const auto cert = certify_weighted_rinfty(wg);
    b.check("certificate issued" + tag, cert.certificate && cert.certificate->kind == CertificateKind::PinnedEdge &&
                                            verify_certificate(*cert.certificate).ok);
    const auto rep = structural_subgroups(presentation_from_graph(wg, s), &wg);
    b.check("index = n" + tag, rep.gamma2_index == n && *rep.unweighted_index == n);
  }
  const auto cls = classify_main_theorem(g);
  b.line(std::string("case (") + case_label(cls.main_case) + "): " + case_statement(cls.main_case));
  b.check("case (ii)", cls.main_case == MainCase::Weighted);
  const auto bounds = nilpotency_bounds(g);
  b.check("(xi, Xi) = (2, 3)", bounds.xi == 2 && bounds.Xi == 3);
  return b.done();
}

Transcript remark_quadext() {
  Builder b("remark-quadext");
  const auto p4 = WeightedGraph::unweighted(catalog::path_graph(4));
  const auto s = analyze(p4.graph);
  const auto LH = graded_lie_ring(remark_group_H());
  const auto LP = graded_lie_ring(p4, s);
  const auto ok2 = quad_ext_iso_check(LH, LP, catalog::remark_quadext_map(s, 2));
  const auto ok3 = quad_ext_iso_check(LH, LP, catalog::remark_quadext_map(s, 3));
  b.line(std::string("sqrt 2: ") + (ok2.iso ? "isomorphism" : ok2.reason));
  b.line(std::string("sqrt 3: ") + (ok3.iso ? "isomorphism" : ok3.reason));
  b.check("L(H) = L(P4,2) over Q(sqrt 2)", ok2.iso);
  b.check("same map over Q(sqrt 3) fails", !ok3.iso);
  return b.done();
}

Transcript remark_H_finite() {
  Builder b("remark-H-finiteR");
  const auto H = remark_group_H();
  auto c = [&](std::size_t i, std::size_t j) { return H.structure(i - 1, j - 1); };
  b.check("structure constants",
          c(1, 3) == std::vector<Integer>{1, 0, 0} && c(1, 4) == std::vector<Integer>{0, 1, 0} &&
              c(3, 4) == std::vector<Integer>{0, 0, 1} && c(2, 4) == std::vector<Integer>{2, 0, 0} &&
              c(2, 3) == std::vector<Integer>{0, 1, 0} && c(1, 2) == std::vector<Integer>{0, 0, 0});
  const IntMatrix B = catalog::remark_H_B(), C = catalog::remark_H_C();
  const auto defect = automorphism_defect(H, B, C);
  b.check("automorphism respects the relations", !defect, defect.value_or(""));
  const RatMatrix induced = induced_deg2_matrix(graded_lie_ring(H), to_rational(B));
  b.check("induced degree-2 matrix equals C", induced == to_rational(C));
  const auto verdict = r_verdict(AutomorphismPair{B, C, C});
  b.line("char_poly(B) = " + to_string(verdict.char_B));
  b.line("char_poly(C) = " + to_string(verdict.char_C));
  const IntPoly pB = IntPoly{Integer(-1), Integer(2), Integer(1)};
  const IntPoly pC1 = IntPoly{Integer(1), Integer(-6), Integer(1)};
  const IntPoly pC2 = IntPoly{Integer(1), Integer(1)};
  b.check("char polys", verdict.char_B == pB * pB && verdict.char_C == pC1 * pC2);
  b.line("values at 1: " + verdict.char_B.eval(Integer(1)).get_str() + ", " + verdict.char_C.eval(Integer(1)).get_str());
  b.check("R(phi) finite", verdict.finite);
  return b.done();
}

Transcript path4() {
  Builder b("path4");
  const auto wg = WeightedGraph::unweighted(catalog::path_graph(4));
  const auto s = analyze(wg.graph);
  const auto cls = classify_main_theorem(wg.graph);
  b.line(std::string("case (") + case_label(cls.main_case) + "): " + case_statement(cls.main_case));
  b.check("case (iii)", cls.main_case == MainCase::TranspositionFree);
  const auto cert = certify_weighted_rinfty(wg);
  b.check("transposition-free certificate",
          cert.certificate && cert.certificate->kind == CertificateKind::TranspositionFree &&
              verify_certificate(*cert.certificate).ok);
  const auto bounds = nilpotency_bounds(wg.graph);
  b.check("(xi, Xi) = (2, 3)", bounds.xi == 2 && bounds.Xi == 3);
  const auto search = finite_r_witness_search(wg, s);
  b.line("witness search: " + std::to_string(search.candidates_tried) + " candidates, " +
         std::to_string(search.candidates_valid) + " valid, none finite");
  b.check("no finite-R witness", !search.found);
  const auto k2 = catalog::heisenberg_graph(1);
  const auto k2cls = classify_main_theorem(k2.graph);
  b.check("K2 is case (i)", k2cls.main_case == MainCase::NoEdgesBetweenSingletons);
  const auto k2search = finite_r_witness_search(k2, analyze(k2.graph));
  if (k2search.found) b.line("K2 witness B = " + str(k2search.pair->B) + ", C = " + str(k2search.pair->C));
  b.check("K2 finite-R witness", k2search.found);
  return b.done();
}

} // namespace

Transcript reproduce(const std::string &id) {
  if (id == "figure1") return figure1();
  if (id == "heisenberg") return heisenberg();
  if (id == "main-counterexample") return main_counterexample();
  if (id == "remark-quadext") return remark_quadext();
  if (id == "remark-H-finiteR") return remark_H_finite();
  if (id == "path4") return path4();
  throw std::invalid_argument("unknown example id: " + id);
}

} // namespace nilgraph
