#include "nilgraph/weighted_graph.hpp"

#include <algorithm>

namespace nilgraph {

WeightedGraph::WeightedGraph(Graph g, std::vector<Integer> k) : graph(std::move(g)), weights(std::move(k)) {
  if (weights.size() != graph.edge_count()) throw GraphError("one weight per edge is required");
  for (EdgeId e = 0; e < weights.size(); ++e)
    if (weights[e] < 1) throw GraphError("edge weight must be a positive integer on " + graph.edge_label(e));
}

WeightedGraph WeightedGraph::unweighted(Graph g) {
  std::vector<Integer> k(g.edge_count(), Integer(1));
  return {std::move(g), std::move(k)};
}

bool WeightedGraph::is_unweighted() const {
  return std::all_of(weights.begin(), weights.end(), [](const Integer &w) { return w == 1; });
}

IntMatrix weight_matrix(const WeightedGraph &wg, const GraphStructure &s) {
  const auto m = wg.graph.edge_count();
  IntMatrix d(m, m);
  for (std::size_t pos = 0; pos < m; ++pos) d(pos, pos) = wg.weight(s.orders.edges[pos]);
  return d;
}

namespace {

IntMatrix class_weight_matrix(const WeightedGraph &wg, const std::vector<EdgeId> &mu) {
  std::vector<Integer> w;
  w.reserve(mu.size());
  for (EdgeId e : mu) w.push_back(wg.weight(e));
  return diagonal(w);
}

} // namespace

Integer class_determinant_divisor(const WeightedGraph &wg, const std::vector<EdgeId> &mu, std::size_t l) {
  if (l < 1 || l > mu.size()) throw std::out_of_range("class determinant divisor index out of range");
  return divisor_profile(wg, mu)[l - 1];
}

std::vector<Integer> divisor_profile(const WeightedGraph &wg, const std::vector<EdgeId> &mu) {
  const SNFResult snf = smith_normal_form(class_weight_matrix(wg, mu));
  std::vector<Integer> profile;
  Integer acc = 1;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    acc *= snf.S(i, i);
    profile.push_back(acc);
  }
  return profile;
}

bool preserves_divisors(const WeightedGraph &wg, const GraphStructure &s, const GraphAutomorphism &a) {
  const auto &m = s.edge_classes;
  std::vector<std::vector<Integer>> profiles;
  profiles.reserve(m.size());
  for (const auto &mu : m.classes) profiles.push_back(divisor_profile(wg, mu));
  for (std::size_t i = 0; i < m.size(); ++i) {
    const auto image = m.class_of[a.sigma_E[m.classes[i].front()]];
    if (profiles[i] != profiles[image]) return false;
  }
  return true;
}

std::vector<GraphAutomorphism> weighted_automorphism_group(const WeightedGraph &wg, const GraphStructure &s,
                                                           std::size_t bound) {
  std::vector<GraphAutomorphism> out;
  for (auto &a : automorphism_group(s, bound))
    if (preserves_divisors(wg, s, a)) out.push_back(std::move(a));

  // subgroup check on small groups
  if (out.size() <= 256) {
    std::vector<Permutation> perms;
    for (const auto &a : out) perms.push_back(a.sigma);
    std::sort(perms.begin(), perms.end());
    auto member = [&](const Permutation &p) { return std::binary_search(perms.begin(), perms.end(), p); };
    if (!member(identity_permutation(wg.graph.vertex_count())))
      throw std::logic_error("weighted automorphisms miss the identity");
    for (const auto &p : perms) {
      if (!member(invert(p))) throw std::logic_error("weighted automorphisms not closed under inverse");
      for (const auto &q : perms)
        if (!member(compose(p, q))) throw std::logic_error("weighted automorphisms not closed under composition");
    }
  }
  return out;
}

WeightedGraph counterexample_weights(const Graph &g, EdgeId e0, const Integer &m) {
  if (e0 >= g.edge_count()) throw GraphError("unknown edge");
  if (m < 2) throw GraphError("the pinned weight must be at least 2");
  const auto p = coherent_components(g);
  const Edge &e = g.edge(e0);
  if (p.class_size(p.class_of[e.u]) != 1 || p.class_size(p.class_of[e.v]) != 1)
    throw GraphError("edge " + g.edge_label(e0) + " has an endpoint in a coherent component of size > 1");
  std::vector<Integer> k(g.edge_count(), Integer(1));
  k[e0] = m;
  return {g, std::move(k)};
}

Integer weight_product(const WeightedGraph &wg) {
  Integer p = 1;
  for (const auto &w : wg.weights) p *= w;
  return p;
}

} // namespace nilgraph
