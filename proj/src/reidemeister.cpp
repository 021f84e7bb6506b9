#include "nilgraph/reidemeister.hpp"

#include "nilgraph/io.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>

namespace nilgraph {

const char *gate_name(Gate g) {
  switch (g) {
  case Gate::None: return "none";
  case Gate::Shape: return "shape";
  case Gate::Unimodular: return "unimodular";
  case Gate::NonEdge: return "non-edge";
  case Gate::InducedUnimodular: return "induced-unimodular";
  case Gate::Integrality: return "integrality";
  }
  return "?";
}

ValidationResult validate_automorphism(const WeightedGraph &wg, const GraphStructure &s, const IntMatrix &B) {
  ValidationResult r;
  const auto n = wg.graph.vertex_count();
  if (B.rows() != n || B.cols() != n) {
    r.gate = Gate::Shape;
    r.reason = "B must be " + std::to_string(n) + " x " + std::to_string(n);
    return r;
  }
  const auto check = check_graded_endomorphism(s, B);
  if (!check.ok) {
    r.reason = check.reason;
    if (check.witness) {
      r.gate = Gate::NonEdge;
      r.witness = check.witness;
    } else {
      r.gate = check.C.rows() ? Gate::InducedUnimodular : Gate::Unimodular;
    }
    return r;
  }
  auto integ = weighted_integrality(wg, s, check.C);
  if (!integ.ok) {
    r.gate = Gate::Integrality;
    r.reason = "D(k) C D(k)^-1 has non-integral entries";
    r.conjugate = std::move(integ.conjugate);
    return r;
  }
  r.valid = true;
  r.pair = AutomorphismPair{B, check.C, to_integer(integ.conjugate)};
  return r;
}

RVerdict r_verdict(const AutomorphismPair &pair) {
  RVerdict v;
  v.char_B = char_poly(pair.B);
  v.char_C = char_poly(pair.C);
  const bool one_B = sgn(v.char_B.eval(Integer(1))) == 0;
  const bool one_C = sgn(v.char_C.eval(Integer(1))) == 0;
  v.finite = !one_B && !one_C;
  if (!v.finite) {
    const RatMatrix M = to_rational(block_diagonal<Integer>({pair.B, pair.C})) -
                        RatMatrix::identity(pair.B.rows() + pair.C.rows());
    const RatMatrix ker = nullspace(M);
    if (ker.cols() == 0) throw std::logic_error("eigenvalue one without a kernel vector");
    v.witness = ker.col(0);
  }
  return v;
}

NilpotencyBounds nilpotency_bounds(const QuotientGraph &q) {
  if (q.edges.empty()) throw GraphError("nilpotency bounds need at least one edge");
  NilpotencyBounds b{SIZE_MAX, SIZE_MAX};
  for (const auto &[x, y] : q.edges) {
    const auto a = q.sizes[x], c = q.sizes[y];
    const std::size_t xi = x == y ? 2 * a : a + c;
    const std::size_t Xi = x == y ? 2 * a : std::max(2 * a + c, a + 2 * c);
    b.xi = std::min(b.xi, xi);
    b.Xi = std::min(b.Xi, Xi);
  }
  return b;
}

NilpotencyBounds nilpotency_bounds(const Graph &g) {
  if (g.edge_count() == 0) throw GraphError("nilpotency bounds need at least one edge");
  return nilpotency_bounds(analyze(g).quotient);
}

const char *case_label(MainCase c) {
  switch (c) {
  case MainCase::NoEdgesBetweenSingletons: return "i";
  case MainCase::Weighted: return "ii";
  case MainCase::TranspositionFree: return "iii";
  }
  return "?";
}

const char *case_statement(MainCase c) {
  switch (c) {
  case MainCase::NoEdgesBetweenSingletons: return "G_Gamma does NOT have R-infinity";
  case MainCase::Weighted: return "weights exist making R-infinity hold";
  case MainCase::TranspositionFree: return "R-infinity certified";
  }
  return "?";
}

Classification classify_main_theorem(const Graph &g) {
  Classification c;
  const auto p = coherent_components(g);
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (p.class_size(p.class_of[v]) == 1) c.V0.push_back(v);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge &ed = g.edge(e);
    if (p.class_size(p.class_of[ed.u]) == 1 && p.class_size(p.class_of[ed.v]) == 1) c.E0.push_back(e);
  }
  if (c.E0.empty()) c.main_case = MainCase::NoEdgesBetweenSingletons;
  else if (c.V0.size() == g.vertex_count()) c.main_case = MainCase::TranspositionFree;
  else c.main_case = MainCase::Weighted;
  return c;
}

// ---------------------------------------------------------------------------
// Certificates

const char *kind_name(CertificateKind k) {
  switch (k) {
  case CertificateKind::TranspositionFree: return "transposition_free";
  case CertificateKind::PinnedEdge: return "pinned_edge";
  case CertificateKind::Bounds: return "bounds";
  }
  return "?";
}

std::string graph_hash(const WeightedGraph &wg) {
  const std::string text = canonical_graph_json(wg);
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

std::vector<SigmaCheck> transcript_for(const std::vector<GraphAutomorphism> &group, EdgeId e0) {
  std::vector<SigmaCheck> t;
  for (const auto &a : group) t.push_back({a.sigma, a.sigma_E, a.sigma_E[e0] == e0});
  return t;
}

} // namespace

CertificationResult certify_weighted_rinfty(const WeightedGraph &wg, std::size_t bound) {
  const auto cls = classify_main_theorem(wg.graph);
  if (cls.E0.empty())
    throw PreconditionError("no edge joins two coherent components of size one");
  CertificationResult r;
  RInftyCertificate c;
  c.graph = wg;
  c.graph_hash = graph_hash(wg);
  c.V0 = cls.V0;
  c.E0 = cls.E0;

  if (cls.main_case == MainCase::TranspositionFree) {
    c.kind = CertificateKind::TranspositionFree;
    c.justification = "every coherent component is a singleton and the graph has edges (main theorem, case iii); "
                      "R-infinity passes to every commensurable group, in particular to G_Gamma(k)";
    r.certificate = std::move(c);
    return r;
  }

  const auto s = analyze(wg.graph);
  c.aut_order = automorphism_group(s, bound).size();
  const auto group = weighted_automorphism_group(wg, s, bound);
  // E0 edges in the edge total order
  std::vector<EdgeId> e0s = cls.E0;
  std::sort(e0s.begin(), e0s.end(), [&](EdgeId a, EdgeId b) { return s.edge_position(a) < s.edge_position(b); });
  for (EdgeId e0 : e0s) {
    auto t = transcript_for(group, e0);
    if (std::all_of(t.begin(), t.end(), [](const SigmaCheck &x) { return x.fixes_edge; })) {
      c.kind = CertificateKind::PinnedEdge;
      c.pinned_edge = e0;
      c.transcript = std::move(t);
      c.justification = "every weight-compatible automorphism fixes the edge " + wg.graph.edge_label(e0) +
                        " between singleton components, so every automorphism of G_Gamma(k) has eigenvalue one "
                        "on the graded Lie ring (main theorem, case ii) and infinite Reidemeister number";
      r.certificate = std::move(c);
      return r;
    }
    if (!r.violating_sigma) {
      for (const auto &a : group)
        if (a.sigma_E[e0] != e0) {
          r.violating_sigma = a.sigma;
          r.violated_edge = e0;
          break;
        }
    }
  }
  r.reason = "every edge between singleton components is moved by some weight-compatible automorphism; "
             "first violation: " + cycle_notation(*r.violating_sigma, wg.graph.labels()) + " moves " +
             wg.graph.edge_label(*r.violated_edge);
  return r;
}

std::optional<RInftyCertificate> bounds_certificate(const WeightedGraph &wg) {
  if (!wg.is_unweighted() || wg.graph.edge_count() == 0) return std::nullopt;
  const auto b = nilpotency_bounds(wg.graph);
  if (b.xi < 4) return std::nullopt;
  RInftyCertificate c;
  c.kind = CertificateKind::Bounds;
  c.has_rinfty = false;
  c.graph = wg;
  c.graph_hash = graph_hash(wg);
  const auto cls = classify_main_theorem(wg.graph);
  c.V0 = cls.V0;
  c.E0 = cls.E0;
  c.bounds = b;
  c.justification = "xi >= 4 bounds the R-infinity nilpotency index of the right-angled Artin group below by 4, "
                    "so its class-2 quotient G_Gamma does not have R-infinity";
  return c;
}

CertificateCheck verify_certificate(const RInftyCertificate &c, std::size_t bound) {
  CertificateCheck r;
  auto fail = [&](std::string m) { r.failures.push_back(std::move(m)); };
  const WeightedGraph &wg = c.graph;
  if (graph_hash(wg) != c.graph_hash) fail("graph hash mismatch");
  const auto cls = classify_main_theorem(wg.graph);
  if (cls.V0 != c.V0) fail("V0 mismatch");
  if (cls.E0 != c.E0) fail("E0 mismatch");

  switch (c.kind) {
  case CertificateKind::TranspositionFree:
    if (!c.has_rinfty) fail("transposition-free certificates assert R-infinity");
    if (cls.main_case != MainCase::TranspositionFree) fail("graph is not transposition-free with edges");
    break;
  case CertificateKind::PinnedEdge: {
    if (!c.has_rinfty) fail("pinned-edge certificates assert R-infinity");
    if (!c.pinned_edge) {
      fail("pinned edge missing");
      break;
    }
    const EdgeId e0 = *c.pinned_edge;
    if (std::find(cls.E0.begin(), cls.E0.end(), e0) == cls.E0.end()) fail("pinned edge is not in E0");
    const auto s = analyze(wg.graph);
    if (automorphism_group(s, bound).size() != c.aut_order) fail("|Aut(Gamma)| mismatch");
    const auto group = weighted_automorphism_group(wg, s, bound);
    if (group.size() != c.transcript.size()) fail("transcript length differs from |Aut(Gamma(k))|");
    for (std::size_t i = 0; i < std::min(group.size(), c.transcript.size()); ++i) {
      const auto &t = c.transcript[i];
      if (group[i].sigma != t.sigma || group[i].sigma_E != t.sigma_E) fail("transcript entry " + std::to_string(i) + " differs");
      if (!is_graph_automorphism(wg.graph, t.sigma)) fail("transcript entry " + std::to_string(i) + " is not an automorphism");
      if (!preserves_divisors(wg, s, induced_edge_data(s, t.sigma)))
        fail("transcript entry " + std::to_string(i) + " does not preserve determinant divisors");
      const bool fixes = t.sigma_E.at(e0) == e0;
      if (fixes != t.fixes_edge || !fixes) fail("transcript entry " + std::to_string(i) + " moves the pinned edge");
    }
    break;
  }
  case CertificateKind::Bounds: {
    if (c.has_rinfty) fail("bounds certificates deny R-infinity");
    if (!wg.is_unweighted()) fail("bounds certificates need unit weights");
    if (wg.graph.edge_count() == 0) {
      fail("bounds need edges");
      break;
    }
    const auto b = nilpotency_bounds(wg.graph);
    if (!c.bounds || c.bounds->xi != b.xi || c.bounds->Xi != b.Xi) fail("bounds mismatch");
    if (b.xi < 4) fail("xi < 4");
    break;
  }
  }
  r.ok = r.failures.empty();
  return r;
}

// ---------------------------------------------------------------------------
// Witness search

namespace {

// monic degree-d polynomials with constant term (-1)^{d+1} and middle
// coefficients in [-budget, budget], ordered by height then lexicographically
std::vector<IntPoly> polynomial_pool(std::size_t d, long budget) {
  std::vector<IntPoly> out;
  if (d == 2) {
    for (long m = 1; m <= budget; ++m) out.push_back(IntPoly{Integer(-1), Integer(-m), Integer(1)});
    return out;
  }
  const Integer a0 = d % 2 == 1 ? 1 : -1;
  const std::size_t nfree = d - 1;
  for (long h = 0; h <= budget; ++h) {
    std::vector<long> c(nfree, -h);
    for (;;) {
      const long height = nfree ? *std::max_element(c.begin(), c.end(), [](long a, long b) { return std::labs(a) < std::labs(b); }) : 0;
      if (std::labs(height) == h) {
        std::vector<Integer> coeffs{a0};
        for (long x : c) coeffs.emplace_back(x);
        coeffs.emplace_back(1);
        IntPoly p(coeffs);
        if (sgn(p.eval(Integer(1))) != 0 && sgn(p.eval(Integer(-1))) != 0 && sgn(resultant(p, p.reversed())) != 0)
          out.push_back(std::move(p));
      }
      std::size_t k = 0;
      while (k < nfree && c[k] == h) c[k++] = -h;
      if (k == nfree) break;
      ++c[k];
    }
  }
  return out;
}

} // namespace

std::vector<IntMatrix> block_pool(std::size_t size, long budget) {
  std::vector<IntMatrix> pool;
  if (size == 0) return pool;
  if (size == 1) return {IntMatrix{{Integer(-1)}}, IntMatrix{{Integer(1)}}};
  for (const auto &p : polynomial_pool(size, budget)) pool.push_back(companion_matrix(p));
  pool.push_back(Integer(-1) * IntMatrix::identity(size));
  pool.push_back(IntMatrix::identity(size));
  return pool;
}

std::size_t for_each_candidate(const WeightedGraph &wg, const GraphStructure &s, const SearchOptions &opt,
                               const std::function<bool(const Candidate &)> &f) {
  const auto group = opt.full_automorphism_group ? automorphism_group(s, opt.bound)
                                                 : weighted_automorphism_group(wg, s, opt.bound);
  const auto &classes = s.components.classes;
  std::vector<std::vector<IntMatrix>> pools;
  for (const auto &cls : classes) pools.push_back(block_pool(cls.size(), opt.budget));
  const auto n = wg.graph.vertex_count();

  std::size_t visited = 0;
  for (const auto &a : group) {
    const IntMatrix P = permutation_matrix(s, a.sigma);
    std::vector<std::size_t> idx(classes.size(), 0);
    for (;;) {
      if (visited >= opt.max_candidates) return visited;
      Candidate c;
      c.sigma = a.sigma;
      IntMatrix D(n, n);
      for (std::size_t k = 0; k < classes.size(); ++k) {
        const IntMatrix &blk = pools[k][idx[k]];
        c.blocks.push_back(blk);
        const auto &cls = classes[k];
        for (std::size_t x = 0; x < cls.size(); ++x)
          for (std::size_t y = 0; y < cls.size(); ++y)
            D(s.vertex_position(cls[x]), s.vertex_position(cls[y])) = blk(x, y);
      }
      c.B = P * D;
      ++visited;
      if (!f(c)) return visited;
      // odometer, last component fastest
      std::size_t k = classes.size();
      while (k > 0) {
        --k;
        if (++idx[k] < pools[k].size()) break;
        idx[k] = 0;
        if (k == 0) {
          k = SIZE_MAX;
          break;
        }
      }
      if (k == SIZE_MAX || classes.empty()) break;
    }
  }
  return visited;
}

SearchResult finite_r_witness_search(const WeightedGraph &wg, const GraphStructure &s, const SearchOptions &opt) {
  SearchResult r;
  r.candidates_tried = for_each_candidate(wg, s, opt, [&](const Candidate &c) {
    auto v = validate_automorphism(wg, s, c.B);
    if (!v.valid) return true;
    ++r.candidates_valid;
    if (has_eigenvalue_one(v.pair->B) || has_eigenvalue_one(v.pair->C)) return true;
    auto verdict = r_verdict(*v.pair);
    r.found = true;
    r.candidate = c;
    r.pair = std::move(v.pair);
    r.verdict = std::move(verdict);
    return false;
  });
  r.truncated = !r.found && r.candidates_tried >= opt.max_candidates;
  return r;
}

} // namespace nilgraph
