#include "hyperppr/synthetic.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

namespace hyperppr {

namespace {

// std::uniform_int_distribution is implementation-defined; this keeps the
// generator byte-reproducible across standard libraries.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return draw % bound;
}

// k distinct vertices from [base, base+size), sorted.
std::vector<VertexId> sample_members(std::mt19937_64& rng, std::vector<VertexId>& scratch,
                                     VertexId base, std::uint32_t size, std::uint32_t k) {
  scratch.resize(size);
  std::iota(scratch.begin(), scratch.end(), base);
  for (std::uint32_t i = 0; i < k; ++i) {
    std::uint64_t j = i + uniform_below(rng, size - i);
    std::swap(scratch[i], scratch[j]);
  }
  std::vector<VertexId> members(scratch.begin(), scratch.begin() + k);
  std::sort(members.begin(), members.end());
  return members;
}

bool block_connected(const std::set<std::vector<VertexId>>& edges, VertexId base,
                     std::uint32_t size) {
  std::vector<VertexId> parent(size);
  std::iota(parent.begin(), parent.end(), VertexId{0});
  auto find = [&](VertexId v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& members : edges)
    for (std::size_t i = 1; i < members.size(); ++i) {
      VertexId a = find(members[0] - base), b = find(members[i] - base);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  for (VertexId v = 0; v < size; ++v)
    if (find(v) != 0) return false;
  return true;
}

}  // namespace

Hypergraph generate_planted(const PlantedParams& p) {
  if (p.clusters == 0 || p.cluster_size == 0 || p.edges_per_cluster == 0)
    throw InvalidParameter("planted generator needs clusters, cluster_size, edges_per_cluster >= 1");
  if (p.edge_size < 1 || p.edge_size > p.cluster_size)
    throw InvalidParameter("edge_size must be in [1, cluster_size]");
  if (p.crossing_edges > 0 && (p.clusters < 2 || p.edge_size < 2))
    throw InvalidParameter("crossing edges need >= 2 clusters and edge_size >= 2");

  std::mt19937_64 rng(p.rng_seed);
  std::vector<VertexId> scratch;
  std::vector<Hyperedge> edges;

  for (std::uint32_t c = 0; c < p.clusters; ++c) {
    const VertexId base = c * p.cluster_size;
    std::set<std::vector<VertexId>> internal;
    for (int attempt = 0;; ++attempt) {
      if (attempt >= 1000)
        throw ComputeError("planted generator: could not connect a cluster; "
                           "increase edges_per_cluster");
      internal.clear();
      std::size_t stuck = 0;
      while (internal.size() < p.edges_per_cluster) {
        if (!internal.insert(sample_members(rng, scratch, base, p.cluster_size, p.edge_size))
                 .second &&
            ++stuck > 10000 * p.edges_per_cluster)
          throw ComputeError("planted generator: edges_per_cluster exceeds the number of "
                             "distinct edges");
      }
      if (block_connected(internal, base, p.cluster_size)) break;
    }
    for (const auto& members : internal) edges.push_back({1.0, members});
  }

  std::set<std::vector<VertexId>> crossing;
  std::size_t stuck = 0;
  while (crossing.size() < p.crossing_edges) {
    std::uint32_t j = static_cast<std::uint32_t>(crossing.size());
    std::uint32_t c1 = j % p.clusters, c2 = (j + 1) % p.clusters;
    std::vector<VertexId> members =
        sample_members(rng, scratch, c2 * p.cluster_size, p.cluster_size, p.edge_size - 1);
    members.push_back(static_cast<VertexId>(c1 * p.cluster_size +
                                            uniform_below(rng, p.cluster_size)));
    std::sort(members.begin(), members.end());
    if (!crossing.insert(std::move(members)).second && ++stuck > 10000)
      throw ComputeError("planted generator: cannot place distinct crossing edges");
  }
  for (const auto& members : crossing) edges.push_back({1.0, members});

  return Hypergraph::build(static_cast<std::size_t>(p.clusters) * p.cluster_size,
                           std::move(edges));
}

VertexSet planted_cluster(const PlantedParams& p, std::uint32_t c) {
  std::vector<VertexId> members(p.cluster_size);
  std::iota(members.begin(), members.end(), c * p.cluster_size);
  return VertexSet(std::move(members));
}

}  // namespace hyperppr
