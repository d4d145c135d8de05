#pragma once

#include <vector>

#include "hyperppr/hypergraph.hpp"

namespace hyperppr {

/// Per-edge argmax/argmin tie sets of a compared vector z, with the gap
/// max_e z - min_e z. When the gap is <= tie_tol both sets are the whole edge.
struct EdgeSelection {
  std::vector<std::vector<VertexId>> max_sets;
  std::vector<std::vector<VertexId>> min_sets;
  std::vector<double> gaps;
};

EdgeSelection select_subgradient(const Hypergraph& H, const std::vector<double>& z,
                                 double tie_tol = 0.0);

/**
 * Apply the hypergraph Laplacian under the averaged subgradient selection:
 * per edge, each u in S_max gains +w(e)*gap/|S_max| and each v in S_min gains
 * -w(e)*gap/|S_min|. The normalized form compares (and differentiates at)
 * z = D^{-1} x; the unnormalized form uses z = x.
 */
std::vector<double> apply_laplacian(const Hypergraph& H, const std::vector<double>& x,
                                    bool normalized, double tie_tol = 0.0);

/// Collapsed graph H_z for a compared vector z. Splitting w(e) uniformly over
/// S_max x S_min pairs and topping vertices up with self-loops keeps every
/// vertex degree equal to d_v. Edges with gap <= tie_tol go entirely to loops.
struct InducedGraph {
  struct Edge {
    VertexId u, v;  // u in S_max, v in S_min, u != v
    double weight;
  };
  std::size_t n = 0;
  std::vector<Edge> edges;
  std::vector<double> self_loops;

  /// Per-vertex degree (cross edges + self-loops); equals d_v in H.
  std::vector<double> degrees() const;
};

InducedGraph induced_graph(const Hypergraph& H, const std::vector<double>& z,
                           double tie_tol = 0.0);

/// The energy Q(x~) = (beta/2)*||x~ - s~||^2 + (1-beta)*sum_e w(e)*gap(e)^2
/// where the gaps are taken at z = D^{-1/2} x~ (tilde vectors are the
/// D^{-1/2}-scaled coordinates used by the gradient-descent view).
double energy_Q(const Hypergraph& H, const std::vector<double>& x_tilde,
                const std::vector<double>& s_tilde, double beta);

}  // namespace hyperppr
