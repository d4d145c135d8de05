#pragma once

#include <cstdint>

#include "hyperppr/hypergraph.hpp"

namespace hyperppr {

/// Planted-partition hypergraph: `clusters` blocks of `cluster_size` vertices,
/// `edges_per_cluster` distinct unit-weight edges of `edge_size` random
/// members inside each block, plus `crossing_edges` edges that straddle two
/// consecutive blocks (one vertex from the first, the rest from the second).
/// Cluster c occupies ids [c*cluster_size, (c+1)*cluster_size). Internal edges
/// are redrawn until each block is covered and connected, so the result is
/// connected whenever crossing_edges >= clusters - 1 (blocks are chained).
struct PlantedParams {
  std::uint32_t clusters = 2;
  std::uint32_t cluster_size = 16;
  std::uint32_t edges_per_cluster = 40;
  std::uint32_t edge_size = 3;
  std::uint32_t crossing_edges = 1;
  std::uint64_t rng_seed = 1;
};

Hypergraph generate_planted(const PlantedParams& params);

/// The vertex set of block c under `params`.
VertexSet planted_cluster(const PlantedParams& params, std::uint32_t c);

}  // namespace hyperppr
