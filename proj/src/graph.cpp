#include "nilgraph/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace nilgraph {

// ---------------------------------------------------------------------------
// Graph

Graph::Graph(std::vector<std::string> labels,
             const std::vector<std::pair<std::string, std::string>> &edges)
    : labels_(std::move(labels)) {
  for (VertexId v = 0; v < labels_.size(); ++v)
    if (!index_.emplace(labels_[v], v).second) throw GraphError("duplicate vertex label: " + labels_[v]);
  std::vector<Edge> ids;
  ids.reserve(edges.size());
  for (const auto &[a, b] : edges) {
    auto ia = index_.find(a), ib = index_.find(b);
    if (ia == index_.end()) throw GraphError("edge endpoint is not a vertex: " + a);
    if (ib == index_.end()) throw GraphError("edge endpoint is not a vertex: " + b);
    ids.push_back({ia->second, ib->second});
  }
  build(ids);
}

Graph::Graph(std::vector<std::string> labels, const std::vector<Edge> &edges) : labels_(std::move(labels)) {
  for (VertexId v = 0; v < labels_.size(); ++v)
    if (!index_.emplace(labels_[v], v).second) throw GraphError("duplicate vertex label: " + labels_[v]);
  build(edges);
}

void Graph::build(const std::vector<Edge> &edges) {
  const std::size_t n = labels_.size();
  adj_.assign(n, std::vector<bool>(n, false));
  nbrs_.assign(n, {});
  for (const auto &e : edges) {
    if (e.u >= n || e.v >= n) throw GraphError("edge endpoint out of range");
    if (e.u == e.v) throw GraphError("self-loop at " + labels_[e.u]);
    const Edge norm{std::min(e.u, e.v), std::max(e.u, e.v)};
    if (adj_[norm.u][norm.v])
      throw GraphError("duplicate edge {" + labels_[norm.u] + "," + labels_[norm.v] + "}");
    adj_[norm.u][norm.v] = adj_[norm.v][norm.u] = true;
    edge_index_[{norm.u, norm.v}] = edges_.size();
    edges_.push_back(norm);
    nbrs_[norm.u].push_back(norm.v);
    nbrs_[norm.v].push_back(norm.u);
  }
  for (auto &nb : nbrs_) std::sort(nb.begin(), nb.end());
}

VertexId Graph::vertex_id(const std::string &label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw GraphError("unknown vertex: " + label);
  return it->second;
}

std::string Graph::edge_label(EdgeId e) const {
  const Edge &ed = edges_.at(e);
  return "{" + labels_[ed.u] + "," + labels_[ed.v] + "}";
}

std::optional<EdgeId> Graph::edge_id(VertexId a, VertexId b) const {
  auto it = edge_index_.find({std::min(a, b), std::max(a, b)});
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

// ---------------------------------------------------------------------------
// Preorders

Neighborhoods neighborhoods(const Graph &g, VertexId v) {
  if (v >= g.vertex_count()) throw GraphError("unknown vertex id");
  Neighborhoods n;
  n.open = g.neighbors(v);
  n.closed = n.open;
  n.closed.insert(std::lower_bound(n.closed.begin(), n.closed.end(), v), v);
  return n;
}

Neighborhoods neighborhoods(const Graph &g, const std::string &label) {
  return neighborhoods(g, g.vertex_id(label));
}

bool vertex_precedes(const Graph &g, VertexId v, VertexId w) {
  for (VertexId x : g.neighbors(v))
    if (x != w && !g.adjacent(x, w)) return false;
  return true;
}

bool edge_precedes(const Graph &g, EdgeId e, EdgeId f) {
  const Edge &a = g.edge(e), &b = g.edge(f);
  return (vertex_precedes(g, a.u, b.u) && vertex_precedes(g, a.v, b.v)) ||
         (vertex_precedes(g, a.u, b.v) && vertex_precedes(g, a.v, b.u));
}

namespace {

// Groups items 0..n-1 into equivalence classes of the symmetric core of
// `prec`, then numbers the classes along a linearization of the induced
// partial order. Among available classes the one with the smallest key wins.
template <class Key>
void classify(std::size_t n, const std::function<bool(std::size_t, std::size_t)> &prec,
              const std::function<Key(const std::vector<std::size_t> &)> &class_key,
              std::vector<std::vector<std::size_t>> &classes, std::vector<std::size_t> &class_of,
              std::vector<std::vector<bool>> &order) {
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) rel[a][b] = a == b || prec(a, b);

  std::vector<std::vector<std::size_t>> raw;
  std::vector<std::size_t> raw_of(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    if (raw_of[a] != n) continue;
    raw_of[a] = raw.size();
    raw.push_back({a});
    for (std::size_t b = a + 1; b < n; ++b)
      if (raw_of[b] == n && rel[a][b] && rel[b][a]) {
        raw_of[b] = raw_of[a];
        raw.back().push_back(b);
      }
  }

  const std::size_t r = raw.size();
  std::vector<std::vector<bool>> raw_order(r, std::vector<bool>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) raw_order[i][j] = rel[raw[i].front()][raw[j].front()];
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      if (i != j && raw_order[i][j] && raw_order[j][i])
        throw std::logic_error("class relation is not antisymmetric");

  std::vector<Key> keys;
  keys.reserve(r);
  for (const auto &c : raw) keys.push_back(class_key(c));

  std::vector<std::size_t> placed_at(r, r);
  std::vector<std::size_t> sequence;
  while (sequence.size() < r) {
    std::size_t best = r;
    for (std::size_t i = 0; i < r; ++i) {
      if (placed_at[i] != r) continue;
      bool ready = true;
      for (std::size_t j = 0; j < r && ready; ++j)
        if (j != i && placed_at[j] == r && raw_order[j][i]) ready = false;
      if (ready && (best == r || keys[i] < keys[best])) best = i;
    }
    if (best == r) throw std::logic_error("class relation has a cycle");
    placed_at[best] = sequence.size();
    sequence.push_back(best);
  }

  classes.clear();
  for (std::size_t i : sequence) classes.push_back(raw[i]);
  class_of.assign(n, 0);
  for (std::size_t c = 0; c < r; ++c)
    for (std::size_t x : classes[c]) class_of[x] = c;
  order.assign(r, std::vector<bool>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) order[i][j] = raw_order[sequence[i]][sequence[j]];
}

std::vector<std::size_t> canonical_vertex_positions(const Graph &g, const CoherentPartition &p) {
  std::vector<std::size_t> pos(g.vertex_count());
  std::size_t k = 0;
  for (const auto &c : p.classes)
    for (VertexId v : c) pos[v] = k++;
  return pos;
}

std::pair<std::size_t, std::size_t> edge_key(const Graph &g, EdgeId e, const std::vector<std::size_t> &pos) {
  const Edge &ed = g.edge(e);
  const auto a = pos[ed.u], b = pos[ed.v];
  return {std::min(a, b), std::max(a, b)};
}

} // namespace

CoherentPartition coherent_components(const Graph &g) {
  CoherentPartition p;
  classify<std::string>(
      g.vertex_count(), [&](std::size_t a, std::size_t b) { return vertex_precedes(g, a, b); },
      [&](const std::vector<std::size_t> &c) {
        std::string best = g.label(c.front());
        for (auto v : c) best = std::min(best, g.label(v));
        return best;
      },
      p.classes, p.class_of, p.order);
  for (auto &c : p.classes)
    std::sort(c.begin(), c.end(), [&](VertexId a, VertexId b) { return g.label(a) < g.label(b); });
  return p;
}

EdgeClassPartition edge_classes(const Graph &g, const CoherentPartition &p) {
  const auto pos = canonical_vertex_positions(g, p);
  EdgeClassPartition m;
  using Key = std::pair<std::size_t, std::size_t>;
  classify<Key>(
      g.edge_count(), [&](std::size_t a, std::size_t b) { return edge_precedes(g, a, b); },
      [&](const std::vector<std::size_t> &c) {
        Key best = edge_key(g, c.front(), pos);
        for (auto e : c) best = std::min(best, edge_key(g, e, pos));
        return best;
      },
      m.classes, m.class_of, m.order);
  for (auto &c : m.classes)
    std::sort(c.begin(), c.end(), [&](EdgeId a, EdgeId b) { return edge_key(g, a, pos) < edge_key(g, b, pos); });
  return m;
}

bool QuotientGraph::has_edge(std::size_t a, std::size_t b) const {
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(std::min(a, b), std::max(a, b)));
}

QuotientGraph quotient_graph(const Graph &g, const CoherentPartition &p, const EdgeClassPartition &m) {
  QuotientGraph q;
  for (const auto &c : p.classes) q.sizes.push_back(c.size());
  std::set<std::pair<std::size_t, std::size_t>> qe;
  for (const auto &e : g.edges()) {
    const auto a = p.class_of[e.u], b = p.class_of[e.v];
    qe.insert({std::min(a, b), std::max(a, b)});
  }
  q.edges.assign(qe.begin(), qe.end());
  q.edge_of_class.assign(m.size(), q.edges.size());
  std::vector<bool> hit(q.edges.size(), false);
  for (std::size_t mu = 0; mu < m.size(); ++mu) {
    std::set<std::size_t> images;
    for (EdgeId e : m.classes[mu]) {
      const auto a = p.class_of[g.edge(e).u], b = p.class_of[g.edge(e).v];
      const auto it = std::lower_bound(q.edges.begin(), q.edges.end(),
                                       std::make_pair(std::min(a, b), std::max(a, b)));
      images.insert(static_cast<std::size_t>(it - q.edges.begin()));
    }
    if (images.size() != 1) throw std::logic_error("edge class maps to several quotient edges");
    const auto idx = *images.begin();
    if (hit[idx]) throw std::logic_error("two edge classes map to one quotient edge");
    hit[idx] = true;
    q.edge_of_class[mu] = idx;
  }
  return q;
}

// ---------------------------------------------------------------------------
// Orders

TotalOrders TotalOrders::from_sequences(std::vector<VertexId> vertices, std::vector<EdgeId> edges) {
  TotalOrders o;
  o.vertices = std::move(vertices);
  o.edges = std::move(edges);
  o.vertex_position.assign(o.vertices.size(), o.vertices.size());
  o.edge_position.assign(o.edges.size(), o.edges.size());
  for (std::size_t i = 0; i < o.vertices.size(); ++i) {
    if (o.vertices[i] >= o.vertices.size() || o.vertex_position[o.vertices[i]] != o.vertices.size())
      throw GraphError("vertex order is not a permutation");
    o.vertex_position[o.vertices[i]] = i;
  }
  for (std::size_t i = 0; i < o.edges.size(); ++i) {
    if (o.edges[i] >= o.edges.size() || o.edge_position[o.edges[i]] != o.edges.size())
      throw GraphError("edge order is not a permutation");
    o.edge_position[o.edges[i]] = i;
  }
  return o;
}

TotalOrders admissible_orders(const Graph &g, const CoherentPartition &p, const EdgeClassPartition &m) {
  std::vector<VertexId> vs;
  for (const auto &c : p.classes) vs.insert(vs.end(), c.begin(), c.end());
  std::vector<EdgeId> es;
  for (const auto &c : m.classes) es.insert(es.end(), c.begin(), c.end());
  (void)g;
  return TotalOrders::from_sequences(std::move(vs), std::move(es));
}

namespace {

// Checks that the class sequence along an order is contiguous and that
// i precedes j (strictly, as classes) forces i's run before j's run.
std::string check_linearization(const std::vector<std::size_t> &class_seq,
                                const std::vector<std::vector<bool>> &order, const char *what) {
  std::vector<std::size_t> run_index(order.size(), order.size());
  std::size_t runs = 0;
  for (std::size_t i = 0; i < class_seq.size(); ++i) {
    const auto c = class_seq[i];
    if (i > 0 && class_seq[i - 1] == c) continue;
    if (run_index[c] != order.size()) return std::string(what) + " classes are not contiguous";
    run_index[c] = runs++;
  }
  for (std::size_t a = 0; a < order.size(); ++a)
    for (std::size_t b = 0; b < order.size(); ++b)
      if (a != b && order[a][b] && run_index[a] > run_index[b])
        return std::string(what) + " order places class " + std::to_string(b) + " before class " +
               std::to_string(a) + " although " + std::to_string(a) + " precedes " + std::to_string(b);
  return {};
}

} // namespace

std::string admissibility_violation(const Graph &g, const CoherentPartition &p,
                                    const EdgeClassPartition &m, const TotalOrders &orders) {
  if (orders.vertices.size() != g.vertex_count() || orders.edges.size() != g.edge_count())
    return "order sizes do not match the graph";
  std::vector<std::size_t> vseq, eseq;
  for (VertexId v : orders.vertices) vseq.push_back(p.class_of[v]);
  for (EdgeId e : orders.edges) eseq.push_back(m.class_of[e]);
  if (auto r = check_linearization(vseq, p.order, "vertex"); !r.empty()) return r;
  return check_linearization(eseq, m.order, "edge");
}

GraphStructure analyze(const Graph &g) {
  GraphStructure s;
  s.graph = g;
  s.components = coherent_components(g);
  s.edge_classes = edge_classes(g, s.components);
  s.quotient = quotient_graph(g, s.components, s.edge_classes);
  s.orders = admissible_orders(g, s.components, s.edge_classes);
  return s;
}

GraphStructure analyze(const Graph &g, const TotalOrders &orders) {
  GraphStructure s = analyze(g);
  if (auto why = admissibility_violation(g, s.components, s.edge_classes, orders); !why.empty())
    throw GraphError("orders are not admissible: " + why);
  s.orders = orders;
  return s;
}

// ---------------------------------------------------------------------------
// Permutations and automorphisms

Permutation compose(const Permutation &outer, const Permutation &inner) {
  Permutation r(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) r[i] = outer.at(inner[i]);
  return r;
}

Permutation invert(const Permutation &p) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r.at(p[i]) = i;
  return r;
}

Permutation identity_permutation(std::size_t n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  return p;
}

bool is_graph_automorphism(const Graph &g, const Permutation &sigma) {
  const auto n = g.vertex_count();
  if (sigma.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (auto x : sigma) {
    if (x >= n || seen[x]) return false;
    seen[x] = true;
  }
  for (const auto &e : g.edges())
    if (!g.adjacent(sigma[e.u], sigma[e.v])) return false;
  return true;
}

std::vector<Permutation> enumerate_automorphisms(const Graph &g, std::size_t bound) {
  const auto n = g.vertex_count();
  if (n > bound)
    throw EnumerationBoundError("automorphism enumeration: " + std::to_string(n) +
                                " vertices exceed the bound " + std::to_string(bound));
  std::vector<Permutation> out;
  Permutation img(n, n);
  std::vector<bool> used(n, false);
  std::function<void(VertexId)> extend = [&](VertexId v) {
    if (v == n) {
      out.push_back(img);
      return;
    }
    for (VertexId w = 0; w < n; ++w) {
      if (used[w] || g.degree(w) != g.degree(v)) continue;
      bool ok = true;
      for (VertexId u = 0; u < v && ok; ++u) ok = g.adjacent(u, v) == g.adjacent(img[u], w);
      if (!ok) continue;
      used[w] = true;
      img[v] = w;
      extend(v + 1);
      used[w] = false;
    }
    img[v] = n;
  };
  extend(0);
  std::sort(out.begin(), out.end());
  return out;
}

GraphAutomorphism induced_edge_data(const GraphStructure &s, const Permutation &sigma) {
  const Graph &g = s.graph;
  if (!is_graph_automorphism(g, sigma)) throw GraphError("permutation is not a graph automorphism");
  GraphAutomorphism a;
  a.sigma = sigma;
  a.sigma_E.resize(g.edge_count());
  a.epsilon.resize(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge &ed = g.edge(e);
    a.sigma_E[e] = *g.edge_id(sigma[ed.u], sigma[ed.v]);
    const bool u_first = s.orders.vertex_less(ed.u, ed.v);
    const VertexId lo = u_first ? ed.u : ed.v, hi = u_first ? ed.v : ed.u;
    a.epsilon[e] = s.orders.vertex_less(sigma[hi], sigma[lo]) ? -1 : 1;
  }
  const auto &p = s.components;
  a.p_sigma.assign(p.size(), p.size());
  for (std::size_t c = 0; c < p.size(); ++c) {
    const auto target = p.class_of[sigma[p.classes[c].front()]];
    for (VertexId v : p.classes[c])
      if (p.class_of[sigma[v]] != target) throw std::logic_error("automorphism splits a coherent component");
    a.p_sigma[c] = target;
  }
  return a;
}

std::vector<GraphAutomorphism> automorphism_group(const GraphStructure &s, std::size_t bound) {
  std::vector<GraphAutomorphism> out;
  for (const auto &sigma : enumerate_automorphisms(s.graph, bound)) out.push_back(induced_edge_data(s, sigma));
  return out;
}

std::vector<Permutation> quotient_automorphisms(const QuotientGraph &q) {
  const auto r = q.sizes.size();
  std::vector<Permutation> out;
  Permutation p = identity_permutation(r);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < r && ok; ++i) ok = q.sizes[p[i]] == q.sizes[i];
    for (const auto &[a, b] : q.edges) {
      if (!ok) break;
      ok = q.has_edge(p[a], p[b]);
    }
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// ---------------------------------------------------------------------------
// Isolated vertices

Graph induced_subgraph(const Graph &g, const std::vector<VertexId> &vertices) {
  std::vector<std::string> labels;
  std::vector<std::size_t> new_id(g.vertex_count(), g.vertex_count());
  for (VertexId v : vertices) {
    new_id.at(v) = labels.size();
    labels.push_back(g.label(v));
  }
  std::vector<Edge> edges;
  for (const auto &e : g.edges())
    if (new_id[e.u] != g.vertex_count() && new_id[e.v] != g.vertex_count())
      edges.push_back({new_id[e.u], new_id[e.v]});
  return Graph(std::move(labels), edges);
}

IsolatedSplit isolated_vertices(const Graph &g) {
  IsolatedSplit s;
  std::vector<VertexId> rest;
  for (VertexId v = 0; v < g.vertex_count(); ++v) (g.degree(v) == 0 ? s.isolated : rest).push_back(v);
  s.stripped = induced_subgraph(g, rest);
  return s;
}

std::string cycle_notation(const Permutation &p, const std::vector<std::string> &names) {
  std::ostringstream os;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i) continue;
    os << '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      os << (first ? "" : " ") << names.at(j);
      first = false;
      j = p[j];
    }
    os << ')';
  }
  const auto s = os.str();
  return s.empty() ? "id" : s;
}

} // namespace nilgraph
