#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "hyperppr/errors.hpp"

namespace hyperppr {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

struct Hyperedge {
  double weight = 1.0;
  std::vector<VertexId> members;  // strictly increasing after build
};

/// A set of vertices stored as a sorted, duplicate-free id list.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::vector<VertexId> members);
  VertexSet(std::initializer_list<VertexId> members);

  const std::vector<VertexId>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(VertexId v) const;

  /// Characteristic mask of length n (1 for members).
  std::vector<char> mask(std::size_t n) const;

  bool operator==(const VertexSet&) const = default;

 private:
  std::vector<VertexId> members_;
};

struct HypergraphStats {
  std::size_t n = 0;
  std::size_t m = 0;
  double avg_degree = 0.0;
  double avg_edge_size = 0.0;
};

struct DropResult;

/**
 * Immutable weighted hypergraph.
 *
 * Construction validates the edge list (positive weights, non-empty member
 * lists, no duplicates, ids in range, no isolated vertices) and precomputes
 * the incidence index, vertex degrees d_v = sum of w(e) over incident edges,
 * and the derived totals used throughout (vol(V), w_min, w_max, sum of |e|).
 */
class Hypergraph {
 public:
  /// Validating factory. Throws IsolatedVertex if some vertex has degree 0.
  static Hypergraph build(std::size_t n, std::vector<Hyperedge> edges);

  /// Like build(), but silently removes degree-0 vertices and reindexes.
  static DropResult build_drop_isolated(std::size_t n, std::vector<Hyperedge> edges);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Hyperedge>& edges() const { return edges_; }
  const Hyperedge& edge(EdgeId e) const { return edges_[e]; }

  /// Ids of the edges containing v.
  std::span<const EdgeId> incident_edges(VertexId v) const {
    return {incidence_.data() + incidence_offsets_[v],
            incidence_.data() + incidence_offsets_[v + 1]};
  }

  double degree(VertexId v) const { return degrees_[v]; }
  const std::vector<double>& degrees() const { return degrees_; }
  double total_volume() const { return total_volume_; }
  double min_edge_weight() const { return w_min_; }
  double max_edge_weight() const { return w_max_; }
  double max_degree() const { return max_degree_; }
  std::size_t total_edge_size() const { return total_edge_size_; }

  /// True when every edge is a pair (the graph case).
  bool is_graph() const;

  /// vol(S) = sum of d_v over S. Members must be in range.
  double volume(const VertexSet& S) const;

 private:
  Hypergraph() = default;
  static Hypergraph build_impl(std::size_t n, std::vector<Hyperedge> edges,
                               bool allow_isolated, std::vector<char>* isolated_out);

  std::size_t n_ = 0;
  std::vector<Hyperedge> edges_;
  std::vector<std::size_t> incidence_offsets_;
  std::vector<EdgeId> incidence_;
  std::vector<double> degrees_;
  double total_volume_ = 0.0;
  double w_min_ = 0.0;
  double w_max_ = 0.0;
  double max_degree_ = 0.0;
  std::size_t total_edge_size_ = 0;
};

struct DropResult {
  Hypergraph graph;
  std::vector<VertexId> kept;  // kept[new_id] = old_id
};

struct SubsetMeasure {
  double volume = 0.0;
  double cut = 0.0;
  double conductance = 0.0;
};

/// vol(S), cut(S) and phi_H(S) = cut / min(vol(S), vol(V\S)).
/// Throws DegenerateSubset for the empty set and for V.
SubsetMeasure measure(const Hypergraph& H, const VertexSet& S);

/// Interior of S: members of S touched by no boundary edge.
VertexSet interior(const Hypergraph& H, const VertexSet& S);

struct ConnectivityResult {
  std::vector<VertexSet> components;  // ordered by smallest member id
  std::size_t largest_index = 0;      // most vertices, ties by smallest min id
};

ConnectivityResult connectivity(const Hypergraph& H);

bool is_connected(const Hypergraph& H);

/// pi_S: degree-proportional distribution restricted to S. Throws EmptySubset.
std::vector<double> pi(const Hypergraph& H, const VertexSet& S);

/// chi_v = pi_{{v}}: the indicator distribution of a single vertex.
std::vector<double> chi(const Hypergraph& H, VertexId v);

HypergraphStats stats(const Hypergraph& H);

/// Sum of x over the members of S.
double sum_on(const std::vector<double>& x, const VertexSet& S);

/// Sum of x over the complement of S.
double sum_off(const std::vector<double>& x, const VertexSet& S);

}  // namespace hyperppr
