#pragma once

// Finite simple graphs, the neighbourhood preorders on vertices and edges,
// coherent components, the quotient graph, admissible total orders and
// automorphism enumeration.

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nilgraph {

using VertexId = std::size_t;
using EdgeId = std::size_t;

class GraphError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Unordered edge stored with u < v (vertex ids).
struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  friend bool operator==(const Edge &, const Edge &) = default;
};

/// Finite undirected simple graph with opaque string labels. Vertex ids are
/// positions in the label list; edge ids are positions in the edge list.
class Graph {
public:
  Graph() = default;
  Graph(std::vector<std::string> labels, const std::vector<std::pair<std::string, std::string>> &edges);
  Graph(std::vector<std::string> labels, const std::vector<Edge> &edges);

  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::string> &labels() const { return labels_; }
  const std::string &label(VertexId v) const { return labels_.at(v); }
  VertexId vertex_id(const std::string &label) const;
  bool has_vertex(const std::string &label) const { return index_.count(label) != 0; }

  const std::vector<Edge> &edges() const { return edges_; }
  const Edge &edge(EdgeId e) const { return edges_.at(e); }
  std::string edge_label(EdgeId e) const;
  std::optional<EdgeId> edge_id(VertexId a, VertexId b) const;
  bool adjacent(VertexId a, VertexId b) const { return a != b && adj_[a][b]; }
  const std::vector<VertexId> &neighbors(VertexId v) const { return nbrs_.at(v); }
  std::size_t degree(VertexId v) const { return nbrs_.at(v).size(); }

private:
  void build(const std::vector<Edge> &edges);

  std::vector<std::string> labels_;
  std::map<std::string, VertexId> index_;
  std::vector<Edge> edges_;
  std::vector<std::vector<bool>> adj_;
  std::vector<std::vector<VertexId>> nbrs_;
  std::map<std::pair<VertexId, VertexId>, EdgeId> edge_index_;
};

struct Neighborhoods {
  std::vector<VertexId> open;   // {w : {v,w} in E}
  std::vector<VertexId> closed; // open plus v
};

Neighborhoods neighborhoods(const Graph &g, VertexId v);
Neighborhoods neighborhoods(const Graph &g, const std::string &label);

/// v < w in the vertex preorder: open(v) is contained in closed(w).
bool vertex_precedes(const Graph &g, VertexId v, VertexId w);

/// Edge preorder induced componentwise by the vertex preorder.
bool edge_precedes(const Graph &g, EdgeId e, EdgeId f);

/// Coherent components. Classes are numbered along the canonical admissible
/// linearization (Kahn's algorithm, ties broken by the lexicographically
/// smallest label of a class); vertices inside a class are sorted by label.
struct CoherentPartition {
  std::vector<std::vector<VertexId>> classes;
  std::vector<std::size_t> class_of;      // vertex id -> class index
  std::vector<std::vector<bool>> order;   // order[i][j]: class i precedes class j

  std::size_t size() const { return classes.size(); }
  std::size_t class_size(std::size_t i) const { return classes.at(i).size(); }
  bool precedes(std::size_t i, std::size_t j) const { return order.at(i).at(j); }
};

CoherentPartition coherent_components(const Graph &g);

/// Edge classes M = E/~. Numbered along a canonical linearization of the
/// induced partial order.
struct EdgeClassPartition {
  std::vector<std::vector<EdgeId>> classes;
  std::vector<std::size_t> class_of;
  std::vector<std::vector<bool>> order;

  std::size_t size() const { return classes.size(); }
  bool precedes(std::size_t i, std::size_t j) const { return order.at(i).at(j); }
};

EdgeClassPartition edge_classes(const Graph &g, const CoherentPartition &p);

/// Quotient graph on coherent components. Self-loops are allowed.
struct QuotientGraph {
  std::vector<std::size_t> sizes;                           // Psi per class
  std::vector<std::pair<std::size_t, std::size_t>> edges;   // (a <= b), sorted
  std::vector<std::size_t> edge_of_class;                   // edge class -> index into edges

  bool has_edge(std::size_t a, std::size_t b) const;
};

QuotientGraph quotient_graph(const Graph &g, const CoherentPartition &p, const EdgeClassPartition &m);

/// Total orders on V and E refining admissible orders on the classes.
struct TotalOrders {
  std::vector<VertexId> vertices;           // vertices[pos] = id
  std::vector<EdgeId> edges;                // edges[pos] = id
  std::vector<std::size_t> vertex_position; // id -> pos
  std::vector<std::size_t> edge_position;   // id -> pos

  static TotalOrders from_sequences(std::vector<VertexId> vertices, std::vector<EdgeId> edges);
  bool vertex_less(VertexId a, VertexId b) const { return vertex_position[a] < vertex_position[b]; }
};

/// Canonical admissible orders: classes in partition order, vertices by
/// label inside a class, edges inside an edge class by endpoint positions.
TotalOrders admissible_orders(const Graph &g, const CoherentPartition &p, const EdgeClassPartition &m);

/// Empty string when `orders` is admissible, otherwise a reason.
std::string admissibility_violation(const Graph &g, const CoherentPartition &p,
                                    const EdgeClassPartition &m, const TotalOrders &orders);

/// Everything derived from a graph once total orders are fixed.
struct GraphStructure {
  Graph graph;
  CoherentPartition components;
  EdgeClassPartition edge_classes;
  QuotientGraph quotient;
  TotalOrders orders;

  std::size_t vertex_position(VertexId v) const { return orders.vertex_position[v]; }
  std::size_t edge_position(EdgeId e) const { return orders.edge_position[e]; }
};

GraphStructure analyze(const Graph &g);
/// Uses caller-supplied orders; throws GraphError if they are not admissible.
GraphStructure analyze(const Graph &g, const TotalOrders &orders);

// ---------------------------------------------------------------------------
// Automorphisms

using Permutation = std::vector<std::size_t>; // image of index i is perm[i]

Permutation compose(const Permutation &outer, const Permutation &inner); // outer o inner
Permutation invert(const Permutation &p);
Permutation identity_permutation(std::size_t n);

struct GraphAutomorphism {
  Permutation sigma;   // on vertex ids
  Permutation sigma_E; // on edge ids
  std::vector<int> epsilon; // per edge id, -1 on inversions
  Permutation p_sigma; // on coherent component indices
};

class EnumerationBoundError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultAutomorphismBound = 12;

bool is_graph_automorphism(const Graph &g, const Permutation &sigma);

/// All edge-preserving vertex permutations, sorted lexicographically by image.
std::vector<Permutation> enumerate_automorphisms(const Graph &g,
                                                 std::size_t bound = kDefaultAutomorphismBound);

/// Induced edge permutation, inversion signs w.r.t. the total vertex order and
/// the induced permutation of coherent components.
GraphAutomorphism induced_edge_data(const GraphStructure &s, const Permutation &sigma);

std::vector<GraphAutomorphism> automorphism_group(const GraphStructure &s,
                                                  std::size_t bound = kDefaultAutomorphismBound);

/// Permutations of the quotient nodes preserving edges, loops and sizes.
std::vector<Permutation> quotient_automorphisms(const QuotientGraph &q);

// ---------------------------------------------------------------------------
// Isolated vertices

struct IsolatedSplit {
  std::vector<VertexId> isolated;
  Graph stripped; // induced subgraph on the non-isolated vertices
};

IsolatedSplit isolated_vertices(const Graph &g);

Graph induced_subgraph(const Graph &g, const std::vector<VertexId> &vertices);

/// Permutation in cycle notation over labels, e.g. "(v1 v5)(v2 v6)".
std::string cycle_notation(const Permutation &p, const std::vector<std::string> &names);

} // namespace nilgraph
