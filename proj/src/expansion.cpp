#include "hyperppr/expansion.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace hyperppr {

unsigned long long clique_pair_count(const Hypergraph& H) {
  unsigned long long pairs = 0;
  for (const Hyperedge& e : H.edges()) {
    unsigned long long k = e.members.size();
    pairs += k * (k - 1) / 2;
  }
  return pairs;
}

Hypergraph clique_expansion(const Hypergraph& H, bool normalized) {
  // Parallel pairs merge by weight summation; the map keeps a canonical
  // (ascending) edge order for determinism.
  std::map<std::pair<VertexId, VertexId>, double> pair_weight;
  for (const Hyperedge& e : H.edges()) {
    const std::size_t k = e.members.size();
    if (k < 2) continue;  // singletons expand to nothing
    double w = normalized ? e.weight / (static_cast<double>(k) * (k - 1) / 2.0) : e.weight;
    for (std::size_t a = 0; a + 1 < k; ++a)
      for (std::size_t b = a + 1; b < k; ++b)
        pair_weight[{e.members[a], e.members[b]}] += w;
  }
  std::vector<Hyperedge> edges;
  edges.reserve(pair_weight.size());
  for (const auto& [uv, w] : pair_weight) edges.push_back({w, {uv.first, uv.second}});
  return Hypergraph::build(H.vertex_count(), std::move(edges));
}

StarExpansion star_expansion(const Hypergraph& H, bool normalized) {
  const std::size_t n = H.vertex_count();
  const std::size_t m = H.edge_count();
  std::vector<Hyperedge> edges;
  edges.reserve(H.total_edge_size());
  for (EdgeId i = 0; i < m; ++i) {
    const Hyperedge& e = H.edge(i);
    VertexId hub = static_cast<VertexId>(n + i);
    double w = normalized ? e.weight / static_cast<double>(e.members.size()) : e.weight;
    for (VertexId v : e.members) edges.push_back({w, {v, hub}});
  }
  std::vector<VertexId> original(n);
  for (std::size_t v = 0; v < n; ++v) original[v] = static_cast<VertexId>(v);
  return {Hypergraph::build(n + m, std::move(edges)), VertexSet(std::move(original))};
}

}  // namespace hyperppr
