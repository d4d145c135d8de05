#include "hyperppr/clustering.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <thread>

#include <nlohmann/json.hpp>

#include "hyperppr/diffusion.hpp"
#include "hyperppr/expansion.hpp"
#include "hyperppr/sweep.hpp"

namespace hyperppr {

std::vector<double> alpha_candidates(const Hypergraph& H, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw InvalidParameter("epsilon must be in (0, 1)");
  if (H.edge_count() == 0) return {1.0};

  const double base =
      H.min_edge_weight() / (H.max_edge_weight() * static_cast<double>(H.total_edge_size()));
  std::vector<double> grid;
  for (int i = 0;; ++i) {
    const double a = base * std::pow(1.0 + epsilon, i);
    if (a > 1.0) break;
    grid.push_back(a);
  }
  if (grid.empty() || grid.back() != 1.0) grid.push_back(1.0);
  return grid;
}

std::string ClusterResult::to_json() const {
  nlohmann::json j;
  j["method"] = method;
  j["seed"] = seed;
  j["alpha"] = alpha_used;
  j["phi"] = conductance;
  j["volume"] = volume;
  j["size"] = set.size();
  j["members_sorted"] = set.members();
  return j.dump();
}

namespace {

void require_vertex(const Hypergraph& H, VertexId v) {
  if (v >= H.vertex_count())
    throw InputError("seed vertex " + std::to_string(v) + " is outside [0, " +
                     std::to_string(H.vertex_count()) + ")");
}

}  // namespace

ClusterResult local_clustering(const Hypergraph& H, VertexId v, const LocalParams& params) {
  require_vertex(H, v);
  if (!(params.mu > 0.0 && params.mu <= 0.5))
    throw InvalidParameter("mu must be in (0, 1/2]");
  if (H.vertex_count() < 2) throw ComputeError("clustering needs at least two vertices");

  const std::vector<double> s = chi(H, v);
  ClusterResult best;
  bool found = false;
  for (double alpha : alpha_candidates(H, params.epsilon)) {
    PprParams ppr = params.ppr;
    ppr.alpha = alpha;
    PprResult result =
        params.exact
            ? hypergraph_ppr_exact(
                  H, s, alpha,
                  ppr.residual_target > 0.0 ? ppr.residual_target : 1e-9)
            : euler_ppr(H, s, ppr);
    SweepCut cut = best_sweep(H, result.rho, params.mu);
    if (!cut.set.contains(v)) continue;
    // Strict improvement: the smallest qualifying alpha wins ties.
    if (!found || cut.conductance < best.conductance) {
      found = true;
      best.set = std::move(cut.set);
      best.conductance = cut.conductance;
      best.prefix = cut.prefix;
      best.alpha_used = alpha;
    }
  }
  // alpha = 1 keeps rho equal to chi_v, whose sweep lists v first, so some
  // candidate always contains the seed.
  if (!found) throw ComputeError("no sweep cut contains the seed vertex");

  best.volume = H.volume(best.set);
  best.seed = v;
  best.method = "local";
  return best;
}

ClusterResult global_clustering(const Hypergraph& H, const LocalParams& params,
                                const std::optional<std::vector<VertexId>>& seeds,
                                std::size_t sample, std::uint64_t rng_seed) {
  std::vector<VertexId> pool;
  if (seeds) {
    pool = *seeds;
    for (VertexId v : pool) require_vertex(H, v);
  } else {
    pool.resize(H.vertex_count());
    std::iota(pool.begin(), pool.end(), VertexId{0});
  }
  if (sample > 0 && sample < pool.size()) {
    // Partial Fisher-Yates on raw engine output: identical draws everywhere,
    // unlike std::uniform_int_distribution.
    std::mt19937_64 rng(rng_seed);
    for (std::size_t i = 0; i < sample; ++i) {
      const std::uint64_t span = pool.size() - i;
      const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                  std::numeric_limits<std::uint64_t>::max() % span;
      std::uint64_t draw;
      do {
        draw = rng();
      } while (draw >= limit);
      std::swap(pool[i], pool[i + draw % span]);
    }
    pool.resize(sample);
    std::sort(pool.begin(), pool.end());
  }
  if (pool.empty()) throw InputError("no seed vertices to cluster from");

  LocalParams local = params;
  local.mu = 0.5;  // the global routine always searches up to half the volume

  std::vector<ClusterResult> results(pool.size());
  std::vector<std::exception_ptr> errors(pool.size());
  const std::size_t workers = std::max<std::size_t>(
      1, std::min<std::size_t>(std::thread::hardware_concurrency(), pool.size()));
  std::atomic<std::size_t> next{0};
  auto run = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= pool.size()) return;
      try {
        results[i] = local_clustering(H, pool[i], local);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (workers == 1) {
    run();
  } else {
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (std::size_t i = 0; i < workers; ++i) threads.emplace_back(run);
    for (std::thread& t : threads) t.join();
  }
  for (const std::exception_ptr& e : errors)
    if (e) std::rethrow_exception(e);

  std::size_t best = 0;
  for (std::size_t i = 1; i < results.size(); ++i) {
    const ClusterResult& a = results[i];
    const ClusterResult& b = results[best];
    if (a.conductance != b.conductance) {
      if (a.conductance < b.conductance) best = i;
    } else if (a.set.size() != b.set.size()) {
      if (a.set.size() < b.set.size()) best = i;
    } else if (a.seed < b.seed) {
      best = i;
    }
  }
  ClusterResult out = std::move(results[best]);
  out.method = "global";
  return out;
}

ClusterResult baseline_expansion_clustering(const Hypergraph& H, VertexId v,
                                            const BaselineParams& params) {
  require_vertex(H, v);
  if (!(params.mu > 0.0 && params.mu <= 0.5))
    throw InvalidParameter("mu must be in (0, 1/2]");
  if (H.vertex_count() < 2) throw ComputeError("clustering needs at least two vertices");

  const std::size_t n = H.vertex_count();
  Hypergraph expanded = [&]() {
    if (params.mode == ExpansionMode::clique) {
      const std::uint64_t pairs = clique_pair_count(H);
      if (pairs > params.clique_pair_budget)
        throw ExpansionBudgetExceeded(pairs, params.clique_pair_budget);
      return clique_expansion(H, /*normalized=*/false);
    }
    return star_expansion(H, /*normalized=*/true).graph;
  }();

  const std::vector<double> s = chi(expanded, v);
  ClusterResult best;
  bool found = false;
  for (int i = 1; i <= 19; ++i) {
    const double alpha = 0.05 * i;
    std::vector<double> p =
        graph_ppr_power(expanded, s, alpha, params.power_tol, params.max_power_iters);

    // Rank original vertices by p/deg in the expanded graph (star hubs never
    // enter the ordering), then score every prefix in the original hypergraph.
    std::vector<VertexId> order(n);
    std::iota(order.begin(), order.end(), VertexId{0});
    std::vector<double> ratio(n);
    for (std::size_t u = 0; u < n; ++u)
      ratio[u] = p[u] / expanded.degree(static_cast<VertexId>(u));
    std::stable_sort(order.begin(), order.end(),
                     [&](VertexId a, VertexId b) { return ratio[a] > ratio[b]; });

    SweepCut cut = best_sweep(H, sweep_profile_ordered(H, std::move(order)), params.mu);
    if (!cut.set.contains(v)) continue;
    if (!found || cut.conductance < best.conductance) {
      found = true;
      best.set = std::move(cut.set);
      best.conductance = cut.conductance;
      best.prefix = cut.prefix;
      best.alpha_used = alpha;
    }
  }
  if (!found) throw ComputeError("no sweep cut contains the seed vertex");

  best.volume = H.volume(best.set);
  best.seed = v;
  best.method = params.mode == ExpansionMode::clique ? "clique" : "star";
  return best;
}

}  // namespace hyperppr
