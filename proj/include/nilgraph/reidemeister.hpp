#pragma once

// Automorphisms of G_Gamma(k) given by their action B on the vertices, the
// eigenvalue-one finiteness verdict for Reidemeister numbers, nilpotency
// index bounds, the case split of the main classification, R-infinity
// certificates and a search for automorphisms with finite Reidemeister number.

#include "nilgraph/exact_linalg.hpp"
#include "nilgraph/graph.hpp"
#include "nilgraph/lie_ring.hpp"
#include "nilgraph/weighted_graph.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace nilgraph {

class PreconditionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// B acts on G/sqrt(gamma2) in the vertex basis, C on gamma2 in the E^k basis.
struct AutomorphismPair {
  IntMatrix B;
  IntMatrix C;
  IntMatrix C_sqrt; // D(k) C D(k)^-1, action on sqrt(gamma2) in the E basis
};

enum class Gate { None, Shape, Unimodular, NonEdge, InducedUnimodular, Integrality };
const char *gate_name(Gate g);

struct ValidationResult {
  bool valid = false;
  Gate gate = Gate::None; // first failed gate
  std::string reason;
  std::optional<AutomorphismPair> pair;
  std::optional<std::pair<VertexId, VertexId>> witness; // non-edge gate
  std::optional<RatMatrix> conjugate;                   // integrality gate
};

ValidationResult validate_automorphism(const WeightedGraph &wg, const GraphStructure &s, const IntMatrix &B);

struct RVerdict {
  bool finite = false;
  IntPoly char_B;
  IntPoly char_C;
  /// Kernel vector of blockdiag(B, C) - I when infinite.
  std::optional<std::vector<Rational>> witness;
};

RVerdict r_verdict(const AutomorphismPair &pair);

struct NilpotencyBounds {
  std::size_t xi = 0;
  std::size_t Xi = 0;
};

/// Throws GraphError on an edgeless graph.
NilpotencyBounds nilpotency_bounds(const Graph &g);
NilpotencyBounds nilpotency_bounds(const QuotientGraph &q);

enum class MainCase { NoEdgesBetweenSingletons, Weighted, TranspositionFree };
const char *case_label(MainCase c);     // "i", "ii", "iii"
const char *case_statement(MainCase c);

struct Classification {
  MainCase main_case = MainCase::NoEdgesBetweenSingletons;
  std::vector<VertexId> V0;
  std::vector<EdgeId> E0;
};

Classification classify_main_theorem(const Graph &g);

// ---------------------------------------------------------------------------
// Certificates

enum class CertificateKind { TranspositionFree, PinnedEdge, Bounds };
const char *kind_name(CertificateKind k);

struct SigmaCheck {
  Permutation sigma;
  Permutation sigma_E;
  bool fixes_edge = false;
};

struct RInftyCertificate {
  CertificateKind kind = CertificateKind::TranspositionFree;
  bool has_rinfty = true; // false for the bounds kind
  WeightedGraph graph;
  std::string graph_hash;
  std::vector<VertexId> V0;
  std::vector<EdgeId> E0;
  std::optional<EdgeId> pinned_edge;
  std::size_t aut_order = 0;          // |Aut(Gamma)|
  std::vector<SigmaCheck> transcript; // Aut(Gamma(k)) with fixed-edge bits
  std::optional<NilpotencyBounds> bounds;
  std::string justification;
};

struct CertificationResult {
  std::optional<RInftyCertificate> certificate;
  /// Refusal: every edge of E0 is moved; the sigma moving the first one.
  std::optional<Permutation> violating_sigma;
  std::optional<EdgeId> violated_edge;
  std::string reason;
};

/// Throws PreconditionError when no edge joins two singleton components.
CertificationResult certify_weighted_rinfty(const WeightedGraph &wg, std::size_t bound = kDefaultAutomorphismBound);

/// Negative certificate: unweighted graph with xi >= 4.
std::optional<RInftyCertificate> bounds_certificate(const WeightedGraph &wg);

struct CertificateCheck {
  bool ok = false;
  std::vector<std::string> failures;
};

/// Recomputes every claim of the certificate from its graph.
CertificateCheck verify_certificate(const RInftyCertificate &c, std::size_t bound = kDefaultAutomorphismBound);

/// FNV-1a 64-bit hash of the canonical graph JSON, as 16 hex digits.
std::string graph_hash(const WeightedGraph &wg);

// ---------------------------------------------------------------------------
// Witness search

struct SearchOptions {
  long budget = 3;
  /// Use all of Aut(Gamma) instead of Aut(Gamma(k)).
  bool full_automorphism_group = false;
  std::size_t max_candidates = 200000;
  std::size_t bound = kDefaultAutomorphismBound;
};

struct Candidate {
  Permutation sigma;
  std::vector<IntMatrix> blocks; // per coherent component, in partition order
  IntMatrix B;
};

/// Integer blocks tried for a component of the given size: companion
/// matrices of integer-like polynomials first, then -I and I.
std::vector<IntMatrix> block_pool(std::size_t size, long budget);

/// Calls `f` on candidates in canonical order until it returns false.
/// Returns the number of candidates visited.
std::size_t for_each_candidate(const WeightedGraph &wg, const GraphStructure &s, const SearchOptions &opt,
                               const std::function<bool(const Candidate &)> &f);

struct SearchResult {
  bool found = false;
  std::optional<Candidate> candidate;
  std::optional<AutomorphismPair> pair;
  std::optional<RVerdict> verdict;
  std::size_t candidates_tried = 0;
  std::size_t candidates_valid = 0;
  bool truncated = false; // stopped at max_candidates
};

SearchResult finite_r_witness_search(const WeightedGraph &wg, const GraphStructure &s, const SearchOptions &opt = {});

} // namespace nilgraph
