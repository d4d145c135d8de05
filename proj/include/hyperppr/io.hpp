#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "hyperppr/hypergraph.hpp"

namespace hyperppr {

// Hypergraph text format: '#' starts a comment line; first data line "n m";
// then m lines "w v1 v2 ... vk" with 0-based vertex ids. Member order is
// normalized on parse; serialization prints weights with 17 significant
// digits so that parse(serialize(H)) reproduces H bit-exactly.

Hypergraph parse_hypergraph(std::istream& in, bool drop_isolated = false,
                            std::vector<VertexId>* kept = nullptr);

Hypergraph load_hypergraph(const std::string& path, bool drop_isolated = false,
                           std::vector<VertexId>* kept = nullptr);

void serialize_hypergraph(const Hypergraph& H, std::ostream& out);

void save_hypergraph(const Hypergraph& H, const std::string& path);

// Bipartite edge list, KONECT style: lines "l r" of positive 1-based ids,
// '#' and '%' comment lines ignored.

std::vector<std::pair<std::uint64_t, std::uint64_t>> parse_bipartite(std::istream& in);

/// Left ids become vertices (dense, 0-based, in ascending order of the
/// original id); each right id becomes one unit-weight hyperedge over its
/// distinct left neighbours. Duplicate pairs are deduplicated.
Hypergraph convert_bipartite(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& pairs);

Hypergraph convert_bipartite(std::istream& in);

}  // namespace hyperppr
