// hyperppr command-line tool: conversion, stats, diffusion dumps, clustering,
// baselines, lemma checks, benchmarking, synthetic fixtures.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hyperppr/clustering.hpp"
#include "hyperppr/diffusion.hpp"
#include "hyperppr/expansion.hpp"
#include "hyperppr/hypergraph.hpp"
#include "hyperppr/io.hpp"
#include "hyperppr/sweep.hpp"
#include "hyperppr/synthetic.hpp"
#include "hyperppr/verify.hpp"

namespace {

using namespace hyperppr;

struct CommonOpts {
  std::string input;
  std::string out;
  bool drop_isolated = false;
};

struct PprOpts {
  double alpha = 0.1;
  double dt = 1.0;
  double total_time = 30.0;
  double theta = 1e-5;
  double tie_tol = 0.0;
  bool exact = false;

  PprParams params() const {
    PprParams p;
    p.alpha = alpha;
    p.dt = dt;
    p.total_time = total_time;
    p.theta = theta;
    p.tie_tol = tie_tol;
    return p;
  }

  PprResult run(const Hypergraph& H, const std::vector<double>& s) const {
    if (exact) return hypergraph_ppr_exact(H, s, alpha, 1e-10);
    return euler_ppr(H, s, params());
  }
};

void add_input(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("input", opts.input, "hypergraph file")->required();
  cmd->add_option("--out", opts.out, "write output here instead of stdout");
  cmd->add_flag("--drop-isolated", opts.drop_isolated, "drop degree-0 vertices on load");
}

void add_ppr_opts(CLI::App* cmd, PprOpts& opts) {
  cmd->add_option("--alpha", opts.alpha, "teleport parameter in (0,1]");
  cmd->add_option("--dt", opts.dt, "Euler step size");
  cmd->add_option("--total-time", opts.total_time, "simulated horizon T");
  cmd->add_option("--theta", opts.theta, "truncation threshold (0 disables)");
  cmd->add_option("--tie-tol", opts.tie_tol, "tie tolerance for the subgradient selection");
  cmd->add_flag("--exact", opts.exact, "solve the stationary PPR directly (certified residual)");
}

Hypergraph load(const CommonOpts& opts) {
  return load_hypergraph(opts.input, opts.drop_isolated);
}

// Writes through to --out when given, else stdout.
struct Output {
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file.open(path);
      if (!file) throw IoError(path);
    }
  }
  std::ostream& stream() { return file.is_open() ? file : std::cout; }
  std::ofstream file;
};

void warn_if_disconnected(const Hypergraph& H) {
  if (!is_connected(H))
    std::cerr << "warning: hypergraph is disconnected; clustering quality guarantees"
                 " assume a connected input\n";
}

Hypergraph restrict_to(const Hypergraph& H, const VertexSet& component) {
  std::vector<VertexId> remap(H.vertex_count(), 0);
  const std::vector<VertexId>& ids = component.members();
  for (std::size_t i = 0; i < ids.size(); ++i) remap[ids[i]] = static_cast<VertexId>(i);
  const std::vector<char> mask = component.mask(H.vertex_count());

  // Every edge lives inside one component, so checking one member suffices.
  std::vector<Hyperedge> edges;
  for (const Hyperedge& e : H.edges()) {
    if (!mask[e.members.front()]) continue;
    Hyperedge copy;
    copy.weight = e.weight;
    copy.members.reserve(e.members.size());
    for (VertexId v : e.members) copy.members.push_back(remap[v]);
    edges.push_back(std::move(copy));
  }
  return Hypergraph::build(ids.size(), std::move(edges));
}

void dump_vector(std::ostream& os, const std::vector<double>& x) {
  char buf[64];
  os << "vertex,value\n";
  for (std::size_t v = 0; v < x.size(); ++v) {
    std::snprintf(buf, sizeof(buf), "%zu,%.17g\n", v, x[v]);
    os << buf;
  }
}

std::vector<VertexId> sample_vertices(std::size_t n, std::size_t count, std::uint64_t rng_seed) {
  std::vector<VertexId> pool(n);
  std::iota(pool.begin(), pool.end(), VertexId{0});
  if (count == 0 || count >= n) return pool;
  std::mt19937_64 rng(rng_seed);
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t span = n - i;
    const std::uint64_t limit =
        std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t draw;
    do {
      draw = rng();
    } while (draw >= limit);
    std::swap(pool[i], pool[i + draw % span]);
  }
  pool.resize(count);
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hypergraph clustering with personalized pagerank sweeps"};
  app.require_subcommand(1);

  // ---- stats ----
  CommonOpts stats_opts;
  CLI::App* cmd_stats = app.add_subcommand("stats", "basic size statistics");
  add_input(cmd_stats, stats_opts);
  cmd_stats->callback([&] {
    const Hypergraph H = load(stats_opts);
    const HypergraphStats st = stats(H);
    Output out(stats_opts.out);
    char buf[160];
    std::snprintf(buf, sizeof(buf), "n=%zu m=%zu avg_deg=%g avg_size=%g\n", st.n, st.m,
                  st.avg_degree, st.avg_edge_size);
    out.stream() << buf;
  });

  // ---- convert ----
  CommonOpts convert_opts;
  CLI::App* cmd_convert =
      app.add_subcommand("convert", "bipartite edge list -> hypergraph (largest component)");
  cmd_convert->add_option("input", convert_opts.input, "bipartite edge list")->required();
  cmd_convert->add_option("--out", convert_opts.out, "write output here instead of stdout");
  cmd_convert->callback([&] {
    std::ifstream in(convert_opts.input);
    if (!in) throw IoError(convert_opts.input);
    const Hypergraph whole = convert_bipartite(in);
    const ConnectivityResult conn = connectivity(whole);
    const Hypergraph H = restrict_to(whole, conn.components[conn.largest_index]);
    Output out(convert_opts.out);
    serialize_hypergraph(H, out.stream());
  });

  // ---- ppr ----
  CommonOpts ppr_opts;
  PprOpts ppr_ppr;
  VertexId ppr_seed = 0;
  CLI::App* cmd_ppr = app.add_subcommand("ppr", "personalized pagerank vector of one seed");
  add_input(cmd_ppr, ppr_opts);
  add_ppr_opts(cmd_ppr, ppr_ppr);
  cmd_ppr->add_option("--seed-vertex", ppr_seed, "seed vertex id")->required();
  cmd_ppr->callback([&] {
    const Hypergraph H = load(ppr_opts);
    if (ppr_seed >= H.vertex_count()) throw InputError("seed vertex out of range");
    const PprResult r = ppr_ppr.run(H, chi(H, ppr_seed));
    Output out(ppr_opts.out);
    char buf[160];
    std::snprintf(buf, sizeof(buf), "# iterations=%zu residual=%.17g mass=%.17g\n", r.iterations,
                  r.final_residual, r.mass);
    out.stream() << buf;
    dump_vector(out.stream(), r.rho);
  });

  // ---- sweep ----
  CommonOpts sweep_opts;
  PprOpts sweep_ppr;
  VertexId sweep_seed = 0;
  CLI::App* cmd_sweep = app.add_subcommand("sweep", "sweep profile of one seed's pagerank");
  add_input(cmd_sweep, sweep_opts);
  add_ppr_opts(cmd_sweep, sweep_ppr);
  cmd_sweep->add_option("--seed-vertex", sweep_seed, "seed vertex id")->required();
  cmd_sweep->callback([&] {
    const Hypergraph H = load(sweep_opts);
    if (sweep_seed >= H.vertex_count()) throw InputError("seed vertex out of range");
    const PprResult r = sweep_ppr.run(H, chi(H, sweep_seed));
    Output out(sweep_opts.out);
    write_profile_csv(sweep_profile(H, r.rho), out.stream());
  });

  // ---- local ----
  CommonOpts local_opts;
  PprOpts local_ppr;
  VertexId local_seed = 0;
  double local_mu = 0.1;
  double local_eps = 0.9;
  CLI::App* cmd_local = app.add_subcommand("local", "local clustering around one seed");
  add_input(cmd_local, local_opts);
  add_ppr_opts(cmd_local, local_ppr);
  cmd_local->add_option("--seed-vertex", local_seed, "seed vertex id")->required();
  cmd_local->add_option("--mu", local_mu, "volume cap fraction in (0, 1/2]");
  cmd_local->add_option("--epsilon", local_eps, "alpha grid quality in (0,1)");
  cmd_local->callback([&] {
    const Hypergraph H = load(local_opts);
    warn_if_disconnected(H);
    LocalParams params;
    params.mu = local_mu;
    params.epsilon = local_eps;
    params.ppr = local_ppr.params();
    params.exact = local_ppr.exact;
    const ClusterResult r = local_clustering(H, local_seed, params);
    Output out(local_opts.out);
    out.stream() << r.to_json() << "\n";
  });

  // ---- global ----
  CommonOpts global_opts;
  PprOpts global_ppr;
  std::vector<VertexId> global_seeds;
  std::size_t global_sample = 0;
  std::uint64_t global_rng = 1;
  double global_eps = 0.9;
  CLI::App* cmd_global = app.add_subcommand("global", "best cluster over many seeds");
  add_input(cmd_global, global_opts);
  add_ppr_opts(cmd_global, global_ppr);
  cmd_global->add_option("--seed-vertex", global_seeds, "explicit seed list (default: all)");
  cmd_global->add_option("--sample", global_sample, "sample this many seeds");
  cmd_global->add_option("--rng-seed", global_rng, "sampling seed");
  cmd_global->add_option("--epsilon", global_eps, "alpha grid quality in (0,1)");
  cmd_global->callback([&] {
    const Hypergraph H = load(global_opts);
    warn_if_disconnected(H);
    LocalParams params;
    params.epsilon = global_eps;
    params.ppr = global_ppr.params();
    params.exact = global_ppr.exact;
    std::optional<std::vector<VertexId>> seeds;
    if (!global_seeds.empty()) seeds = global_seeds;
    const ClusterResult r = global_clustering(H, params, seeds, global_sample, global_rng);
    Output out(global_opts.out);
    out.stream() << r.to_json() << "\n";
  });

  // ---- baseline ----
  CommonOpts base_opts;
  VertexId base_seed = 0;
  double base_mu = 0.1;
  std::string base_mode = "clique";
  CLI::App* cmd_base = app.add_subcommand("baseline", "clique/star expansion baseline");
  add_input(cmd_base, base_opts);
  cmd_base->add_option("--seed-vertex", base_seed, "seed vertex id")->required();
  cmd_base->add_option("--mu", base_mu, "volume cap fraction in (0, 1/2]");
  cmd_base->add_option("--mode", base_mode, "clique|star")
      ->check(CLI::IsMember({"clique", "star"}));
  cmd_base->callback([&] {
    const Hypergraph H = load(base_opts);
    BaselineParams params;
    params.mode = base_mode == "star" ? ExpansionMode::star : ExpansionMode::clique;
    params.mu = base_mu;
    const ClusterResult r = baseline_expansion_clustering(H, base_seed, params);
    Output out(base_opts.out);
    out.stream() << r.to_json() << "\n";
  });

  // ---- verify ----
  CommonOpts verify_opts;
  double verify_alpha = 0.1;
  VertexId verify_seed = 0;
  CLI::App* cmd_verify = app.add_subcommand("verify", "run the executable lemma checks");
  add_input(cmd_verify, verify_opts);
  cmd_verify->add_option("--alpha", verify_alpha, "teleport parameter in (0,1]");
  cmd_verify->add_option("--seed-vertex", verify_seed, "vertex for the seed-based checks");
  cmd_verify->callback([&] {
    const Hypergraph H = load(verify_opts);
    if (verify_seed >= H.vertex_count()) throw InputError("seed vertex out of range");
    std::vector<std::string> reports;
    reports.push_back(check_ppr_axioms(H, verify_alpha, verify_seed).to_json());
    reports.push_back(check_sufficient_conditions(H, verify_alpha).to_json());
    if (H.vertex_count() <= 20 && H.vertex_count() >= 2) {
      const BruteForceResult bf = brute_force_conductance(H);
      const VertexSet inner = interior(H, bf.set);
      if (!inner.empty())
        reports.push_back(check_leak_local(H, bf.set, inner.members().front(), verify_alpha)
                              .to_json());
      reports.push_back(check_leak_global(H, bf.set, verify_alpha).to_json());
    }
    Output out(verify_opts.out);
    out.stream() << "[";
    for (std::size_t i = 0; i < reports.size(); ++i)
      out.stream() << (i ? "," : "") << "\n" << reports[i];
    out.stream() << "\n]\n";
  });

  // ---- bench ----
  CommonOpts bench_opts;
  PprOpts bench_ppr;
  std::size_t bench_sample = 50;
  std::uint64_t bench_rng = 1;
  double bench_mu = 0.1;
  double bench_eps = 0.9;
  CLI::App* cmd_bench = app.add_subcommand("bench", "per-seed local clustering timings");
  add_input(cmd_bench, bench_opts);
  add_ppr_opts(cmd_bench, bench_ppr);
  cmd_bench->add_option("--sample", bench_sample, "number of sampled seeds");
  cmd_bench->add_option("--rng-seed", bench_rng, "sampling seed");
  cmd_bench->add_option("--mu", bench_mu, "volume cap fraction in (0, 1/2]");
  cmd_bench->add_option("--epsilon", bench_eps, "alpha grid quality in (0,1)");
  cmd_bench->callback([&] {
    const Hypergraph H = load(bench_opts);
    LocalParams params;
    params.mu = bench_mu;
    params.epsilon = bench_eps;
    params.ppr = bench_ppr.params();
    params.exact = bench_ppr.exact;
    const std::vector<VertexId> seeds =
        sample_vertices(H.vertex_count(), bench_sample, bench_rng);
    Output out(bench_opts.out);
    out.stream() << "seed,phi,size,volume,alpha,ms\n";
    char buf[224];
    double total_ms = 0.0;
    double best_phi = 1.0;
    for (VertexId v : seeds) {
      const auto t0 = std::chrono::steady_clock::now();
      const ClusterResult r = local_clustering(H, v, params);
      const auto t1 = std::chrono::steady_clock::now();
      const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
      total_ms += ms;
      best_phi = std::min(best_phi, r.conductance);
      std::snprintf(buf, sizeof(buf), "%u,%.17g,%zu,%.17g,%.17g,%.3f\n", v, r.conductance,
                    r.set.size(), r.volume, r.alpha_used, ms);
      out.stream() << buf;
    }
    std::snprintf(buf, sizeof(buf), "# seeds=%zu best_phi=%.17g total_ms=%.3f\n", seeds.size(),
                  best_phi, total_ms);
    out.stream() << buf;
  });

  // ---- gen ----
  PlantedParams gen_params;
  std::string gen_out;
  CLI::App* cmd_gen = app.add_subcommand("gen", "planted-partition hypergraph generator");
  cmd_gen->add_option("--clusters", gen_params.clusters, "number of blocks");
  cmd_gen->add_option("--cluster-size", gen_params.cluster_size, "vertices per block");
  cmd_gen->add_option("--edges-per-cluster", gen_params.edges_per_cluster,
                      "internal edges per block");
  cmd_gen->add_option("--edge-size", gen_params.edge_size, "members per edge");
  cmd_gen->add_option("--crossing", gen_params.crossing_edges, "edges straddling two blocks");
  cmd_gen->add_option("--rng-seed", gen_params.rng_seed, "generator seed");
  cmd_gen->add_option("--out", gen_out, "write output here instead of stdout");
  cmd_gen->callback([&] {
    const Hypergraph H = generate_planted(gen_params);
    Output out(gen_out);
    serialize_hypergraph(H, out.stream());
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const ComputeError& e) {
    std::cerr << "computation error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
