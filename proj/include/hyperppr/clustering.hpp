#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperppr/diffusion.hpp"
#include "hyperppr/hypergraph.hpp"

namespace hyperppr {

struct LocalParams {
  double mu = 0.5;       // volume cap, in (0, 1/2]
  double epsilon = 0.9;  // alpha-grid ratio, in (0, 1)
  PprParams ppr;         // alpha is overridden by the candidate grid
  bool exact = false;    // solve each PPR stationarily instead of Euler steps
};

/// Geometric teleport grid {base*(1+eps)^i} cap (0,1] with base =
/// w_min/(w_max * sum|e|), plus 1.0; for any phi in [base,1] some candidate
/// satisfies alpha <= phi <= (1+eps)*alpha.
std::vector<double> alpha_candidates(const Hypergraph& H, double epsilon);

struct ClusterResult {
  VertexSet set;
  double conductance = 0.0;
  double volume = 0.0;
  VertexId seed = 0;
  double alpha_used = 0.0;
  std::size_t prefix = 0;
  std::string method;

  std::string to_json() const;
};

/// Sweep the PPR vector of seed v for every candidate alpha and return the
/// best cut within the volume cap. The seed is always inside the result.
ClusterResult local_clustering(const Hypergraph& H, VertexId v, const LocalParams& params);

/// Local clustering from every seed (all of V by default, or an explicit
/// list, or `sample` ids drawn without replacement from rng_seed) with mu
/// forced to 1/2; minimum by (phi, |S|, seed id). Seeds run in parallel.
ClusterResult global_clustering(const Hypergraph& H, const LocalParams& params,
                                const std::optional<std::vector<VertexId>>& seeds = {},
                                std::size_t sample = 0, std::uint64_t rng_seed = 1);

enum class ExpansionMode { clique, star };

struct BaselineParams {
  ExpansionMode mode = ExpansionMode::clique;
  double mu = 0.5;
  double power_tol = 1e-8;
  std::size_t max_power_iters = 100000;
  unsigned long long clique_pair_budget = 200000000ULL;
};

/// CLIQUE/STAR baseline: expand, run the lazy-walk power method for alpha in
/// {0.05, 0.10, ..., 0.95}, rank vertices by the expanded graph's x(v)/d(v)
/// (star drops the hub vertices after ranking), then score every prefix and
/// apply the mu cap in the ORIGINAL hypergraph.
ClusterResult baseline_expansion_clustering(const Hypergraph& H, VertexId v,
                                            const BaselineParams& params);

}  // namespace hyperppr
