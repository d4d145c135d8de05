#pragma once

#include "hyperppr/hypergraph.hpp"

namespace hyperppr {

/// Number of pairwise edges a clique expansion would create (before merging).
unsigned long long clique_pair_count(const Hypergraph& H);

/// Replace each hyperedge by a clique over its members.
/// Pair weight is w(e) raw, or w(e)/C(|e|,2) normalized; parallel pairs merge.
/// Size-1 edges contribute nothing.
Hypergraph clique_expansion(const Hypergraph& H, bool normalized);

struct StarExpansion {
  Hypergraph graph;
  VertexSet original;  // the first n vertices of the expansion
};

/// Add one hub vertex per hyperedge, connected to each member with weight
/// w(e) raw or w(e)/|e| normalized. Hubs get ids n..n+m-1.
StarExpansion star_expansion(const Hypergraph& H, bool normalized);

}  // namespace hyperppr
