#include "hyperppr/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>

#include <nlohmann/json.hpp>

#include "hyperppr/diffusion.hpp"
#include "hyperppr/laplacian.hpp"

namespace hyperppr {

namespace {

constexpr double kSlack = 1e-8;
constexpr double kResidualTarget = 1e-9;

std::vector<double> exact_ppr(const Hypergraph& H, const std::vector<double>& s, double alpha) {
  return hypergraph_ppr_exact(H, s, alpha, kResidualTarget).rho;
}

// Right-hand side of the cut inequality pr(C-bar) <= lambda * sum over
// crossing pairs of (w_p(uv)/d_u) p(u), with w_p taken from the graph induced
// by p. Returns rhs - lhs (negative means violated).
double cut_inequality_margin(const Hypergraph& H, const std::vector<double>& p,
                             const VertexSet& C, double alpha) {
  const std::size_t n = H.vertex_count();
  std::vector<double> z(n);
  for (std::size_t v = 0; v < n; ++v) z[v] = p[v] / H.degree(static_cast<VertexId>(v));
  const InducedGraph induced = induced_graph(H, z);
  const std::vector<char> in = C.mask(n);

  double sum = 0.0;
  for (const InducedGraph::Edge& e : induced.edges) {
    if (in[e.u] && !in[e.v])
      sum += e.weight / H.degree(e.u) * p[e.u];
    else if (in[e.v] && !in[e.u])
      sum += e.weight / H.degree(e.v) * p[e.v];
  }
  const double lambda = (1.0 - alpha) / (2.0 * alpha);
  return lambda * sum - sum_off(p, C);
}

}  // namespace

BruteForceResult brute_force_conductance(const Hypergraph& H, std::optional<double> mu,
                                         std::optional<VertexId> seed) {
  const std::size_t n = H.vertex_count();
  if (n > 20) throw TooLarge(n, 20);
  if (n < 2) throw DegenerateSubset();
  if (mu && !(*mu > 0.0 && *mu <= 1.0)) throw InvalidParameter("mu must be in (0, 1]");
  if (seed && *seed >= n) throw InputError("seed vertex out of range");

  const std::vector<double>& deg = H.degrees();
  const double total = H.total_volume();
  const double vol_cap = mu ? *mu * total : total;

  // Replicates measure()'s summation order bit for bit: both side volumes in
  // ascending vertex order, cut in ascending edge order.
  std::uint32_t best_mask = 0;
  double best_phi = 0.0;
  std::size_t best_size = 0;
  const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1u);
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    if (seed && !(mask >> *seed & 1u)) continue;
    double vol_in = 0.0, vol_out = 0.0;
    for (std::size_t v = 0; v < n; ++v) (mask >> v & 1u ? vol_in : vol_out) += deg[v];
    if (mu && vol_in > vol_cap) continue;
    double cut = 0.0;
    for (const Hyperedge& e : H.edges()) {
      std::size_t inside = 0;
      for (VertexId v : e.members) inside += mask >> v & 1u;
      if (inside > 0 && inside < e.members.size()) cut += e.weight;
    }
    const double phi = cut / std::min(vol_in, vol_out);
    const std::size_t size = static_cast<std::size_t>(__builtin_popcount(mask));

    bool better;
    if (best_mask == 0) {
      better = true;
    } else if (phi != best_phi) {
      better = phi < best_phi;
    } else if (size != best_size) {
      better = size < best_size;
    } else {
      // Same size: lexicographic order on ascending member lists means the
      // set holding the lowest differing bit wins.
      const std::uint32_t diff = mask ^ best_mask;
      better = (mask & (diff & (0u - diff))) != 0;
    }
    if (better) {
      best_mask = mask;
      best_phi = phi;
      best_size = size;
    }
  }
  if (best_mask == 0) throw ComputeError("no feasible subset under the given constraints");

  std::vector<VertexId> members;
  for (std::size_t v = 0; v < n; ++v)
    if (best_mask >> v & 1u) members.push_back(static_cast<VertexId>(v));
  BruteForceResult result;
  result.set = VertexSet(std::move(members));
  result.conductance = measure(H, result.set).conductance;
  return result;
}

std::string LemmaReport::to_json() const {
  nlohmann::json j;
  j["name"] = name;
  j["applicable"] = applicable;
  j["lhs"] = lhs;
  j["rhs"] = rhs;
  j["holds"] = holds;
  j["witness"] = witness.members();
  j["details"] = details;
  return j.dump();
}

LemmaReport check_ppr_axioms(const Hypergraph& H, double alpha, VertexId u) {
  if (u >= H.vertex_count()) throw InputError("vertex out of range");
  LemmaReport report;
  report.name = "ppr-axioms";
  if (!is_connected(H)) return report;
  report.applicable = true;

  const std::vector<double> pr = exact_ppr(H, chi(H, u), alpha);
  std::vector<VertexId> all(H.vertex_count());
  std::iota(all.begin(), all.end(), VertexId{0});
  const std::vector<double> pi_V = pi(H, VertexSet(std::move(all)));

  double mass = 0.0, min_entry = 0.0;
  for (double v : pr) {
    mass += v;
    min_entry = std::min(min_entry, v);
  }
  double stationary_violation = pi_V[u] - pr[u];  // pr(u) >= pi(u)
  for (std::size_t v = 0; v < pr.size(); ++v)
    if (v != u) stationary_violation = std::max(stationary_violation, pr[v] - pi_V[v]);

  report.details["mass"] = mass;
  report.details["min_entry"] = min_entry;
  report.details["stationary_violation"] = stationary_violation;
  report.lhs = stationary_violation;
  report.rhs = 0.0;
  report.holds = std::fabs(mass - 1.0) <= 1e-6 && min_entry >= -1e-9 &&
                 stationary_violation <= kSlack;
  if (!report.holds) report.witness = VertexSet({u});
  return report;
}

LemmaReport check_leak_local(const Hypergraph& H, const VertexSet& C, VertexId v, double alpha) {
  if (v >= H.vertex_count()) throw InputError("vertex out of range");
  LemmaReport report;
  report.name = "leak-local";

  const SubsetMeasure m = measure(H, C);
  const bool interior_seed = interior(H, C).contains(v);
  report.details["vol_C"] = m.volume;
  report.details["phi_C"] = m.conductance;
  if (!(m.volume <= H.total_volume() / 2.0) || !interior_seed) return report;
  report.applicable = true;

  const std::vector<double> pr = exact_ppr(H, chi(H, v), alpha);
  report.lhs = sum_off(pr, C);
  report.rhs = m.conductance / (4.0 * alpha);
  const double cut_margin = cut_inequality_margin(H, pr, C, alpha);
  report.details["leak"] = report.lhs;
  report.details["cut_inequality_margin"] = cut_margin;
  report.holds = report.lhs <= report.rhs + kSlack && cut_margin >= -kSlack;
  report.witness = C;
  return report;
}

LemmaReport check_leak_global(const Hypergraph& H, const VertexSet& C, double alpha) {
  LemmaReport report;
  report.name = "leak-global";

  const SubsetMeasure m = measure(H, C);
  const std::size_t n = H.vertex_count();
  const VertexSet inner = interior(H, C);
  const std::vector<double> pi_C = pi(H, C);

  // Expected PPR under a pi_C-random seed, and the worst cut-inequality
  // margin over the individual seeds.
  std::vector<double> avg(n, 0.0);
  double cut_margin = 0.0;
  double leak = 0.0;
  std::vector<double> seed_leak(n, 0.0);
  bool first = true;
  for (VertexId w : C.members()) {
    const std::vector<double> pr = exact_ppr(H, chi(H, w), alpha);
    for (std::size_t i = 0; i < n; ++i) avg[i] += pi_C[w] * pr[i];
    const double margin = cut_inequality_margin(H, pr, C, alpha);
    cut_margin = first ? margin : std::min(cut_margin, margin);
    first = false;
    seed_leak[w] = sum_off(pr, C);
    leak += pi_C[w] * seed_leak[w];
  }

  // Condition: the averaged PPR of every boundary vertex stays below its
  // share of pi_C.
  double assumption_violation = 0.0;
  VertexId worst = 0;
  for (VertexId v : C.members()) {
    if (inner.contains(v)) continue;
    const double gap = avg[v] - pi_C[v];
    if (gap > assumption_violation) {
      assumption_violation = gap;
      worst = v;
    }
  }
  report.details["phi_C"] = m.conductance;
  report.details["assumption_violation"] = assumption_violation;
  report.details["cut_inequality_margin"] = cut_margin;
  if (assumption_violation > kSlack) {
    report.witness = VertexSet({worst});
    return report;
  }
  report.applicable = true;

  report.lhs = leak;
  report.rhs = m.conductance / (2.0 * alpha);

  const double keep_threshold = m.conductance / alpha;
  std::vector<VertexId> kept;
  for (VertexId v : C.members())
    if (seed_leak[v] <= keep_threshold + 1e-12) kept.push_back(v);
  const VertexSet C_alpha(std::move(kept));
  const double vol_C_alpha = H.volume(C_alpha);
  report.details["vol_C"] = m.volume;
  report.details["vol_C_alpha"] = vol_C_alpha;
  report.witness = C_alpha;

  report.holds = report.lhs <= report.rhs + kSlack && vol_C_alpha >= m.volume / 2.0 - kSlack &&
                 cut_margin >= -kSlack;
  return report;
}

LemmaReport check_sufficient_conditions(const Hypergraph& H, double alpha,
                                        const std::optional<VertexSet>& C) {
  LemmaReport report;
  report.name = "sufficient-conditions";
  if (C && !(H.volume(*C) <= H.total_volume() / 2.0)) return report;
  report.applicable = true;

  const double dmax = H.max_degree();
  const double vol = H.total_volume();
  // (1/2 - dmax/vol) / (1 - dmax/vol), rearranged to keep the quotient exact
  // on small integer volumes.
  const double threshold = (vol - 2.0 * dmax) / (2.0 * (vol - dmax));
  const bool criterion2 = alpha <= threshold;

  double max_self = 0.0;
  VertexId worst = 0;
  for (VertexId v = 0; v < H.vertex_count(); ++v) {
    const double self = exact_ppr(H, chi(H, v), alpha)[v];
    if (self > max_self) {
      max_self = self;
      worst = v;
    }
  }
  const bool criterion1 = max_self <= 0.5 + kSlack;

  report.lhs = alpha;
  report.rhs = threshold;
  report.details["criterion1_max_self"] = max_self;
  report.details["criterion1_holds"] = criterion1 ? 1.0 : 0.0;
  report.details["criterion2_threshold"] = threshold;
  report.details["criterion2_holds"] = criterion2 ? 1.0 : 0.0;
  report.holds = criterion1 || criterion2;
  if (!criterion1) report.witness = VertexSet({worst});
  return report;
}

LemmaReport check_continuity(const Hypergraph& H, const std::vector<double>& s,
                             const std::vector<double>& alphas) {
  LemmaReport report;
  report.name = "continuity";
  if (alphas.size() < 2) return report;
  double spacing = 0.0;
  for (std::size_t i = 1; i < alphas.size(); ++i) {
    if (alphas[i] < alphas[i - 1]) throw InvalidParameter("alphas must ascend");
    spacing = std::max(spacing, alphas[i] - alphas[i - 1]);
  }
  // Decimal grids land an ulp above the nominal spacing (0.501 - 0.5 is one
  // ulp over 1e-3 in double); absorb that so such grids stay applicable.
  report.applicable = spacing <= 1e-3 * (1.0 + 1e-9);

  double gap = 0.0;
  std::vector<double> prev = exact_ppr(H, s, alphas[0]);
  for (std::size_t i = 1; i < alphas.size(); ++i) {
    std::vector<double> cur = exact_ppr(H, s, alphas[i]);
    double l1 = 0.0;
    for (std::size_t v = 0; v < cur.size(); ++v) l1 += std::fabs(cur[v] - prev[v]);
    gap = std::max(gap, l1);
    prev = std::move(cur);
  }
  report.lhs = gap;
  report.rhs = 0.1;
  report.details["max_spacing"] = spacing;
  report.holds = gap <= report.rhs;
  return report;
}

}  // namespace hyperppr
