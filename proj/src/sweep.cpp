#include "hyperppr/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>

#include "hyperppr/diffusion.hpp"
#include "hyperppr/laplacian.hpp"

namespace hyperppr {

std::size_t SweepProfile::ell(double mu) const {
  if (!(mu > 0.0 && mu <= 1.0)) throw InvalidParameter("mu must be in (0, 1]");
  const double target = mu * total_volume;
  for (std::size_t j = 0; j < volumes.size(); ++j)
    if (volumes[j] >= target) return j + 1;
  return volumes.size();  // unreachable for mu <= 1 (volumes end at vol(V))
}

VertexSet SweepProfile::prefix(std::size_t j) const {
  if (j < 1 || j > order.size()) throw InvalidParameter("prefix index out of range");
  return VertexSet(std::vector<VertexId>(order.begin(), order.begin() + j));
}

SweepProfile sweep_profile_ordered(const Hypergraph& H, std::vector<VertexId> order) {
  const std::size_t n = H.vertex_count();
  if (order.size() != n) throw InputError("sweep order must list every vertex once");
  {
    std::vector<char> seen(n, 0);
    for (VertexId v : order) {
      if (v >= n || seen[v]) throw InputError("sweep order must be a permutation of V");
      seen[v] = 1;
    }
  }

  SweepProfile profile;
  profile.total_volume = H.total_volume();
  profile.volumes.resize(n);
  profile.cuts.resize(n);
  if (n > 1) profile.phis.resize(n - 1);

  // Incremental cut: an edge crosses while 0 < inside < |e|. Entering a
  // vertex bumps its edges' inside counters; the cut changes only when a
  // counter leaves 0 or reaches |e|.
  std::vector<std::size_t> inside(H.edge_count(), 0);
  double vol = 0.0, cut = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const VertexId v = order[j];
    vol += H.degree(v);
    for (EdgeId e : H.incident_edges(v)) {
      const std::size_t size = H.edge(e).members.size();
      const std::size_t c = ++inside[e];
      if (c == 1) {
        if (size > 1) cut += H.edge(e).weight;
      } else if (c == size) {
        cut -= H.edge(e).weight;
      }
    }
    profile.volumes[j] = vol;
    profile.cuts[j] = cut;
    if (j + 1 < n)
      profile.phis[j] = cut / std::min(vol, profile.total_volume - vol);
  }
  profile.order = std::move(order);
  return profile;
}

SweepProfile sweep_profile(const Hypergraph& H, const std::vector<double>& x) {
  const std::size_t n = H.vertex_count();
  if (x.size() != n) throw InputError("sweep vector length does not match vertex count");

  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), VertexId{0});
  std::vector<double> ratio(n);
  for (std::size_t v = 0; v < n; ++v) ratio[v] = x[v] / H.degree(v);
  std::stable_sort(order.begin(), order.end(),
                   [&](VertexId a, VertexId b) { return ratio[a] > ratio[b]; });
  return sweep_profile_ordered(H, std::move(order));
}

SweepCut best_sweep(const Hypergraph& H, const SweepProfile& profile, double mu) {
  if (!(mu > 0.0 && mu <= 0.5)) throw InvalidParameter("mu must be in (0, 1/2]");
  const std::size_t n = profile.order.size();
  if (n < 2) throw ComputeError("sweep cuts need at least two vertices");

  const std::size_t j_max = std::min(profile.ell(mu), n - 1);
  std::size_t best = 0;
  for (std::size_t j = 1; j < j_max; ++j)
    if (profile.phis[j] < profile.phis[best]) best = j;

  SweepCut cut;
  cut.prefix = best + 1;
  cut.set = profile.prefix(cut.prefix);
  // Report the measure-consistent value, not the incremental one, so stored
  // conductances survive independent recomputation bit-for-bit.
  cut.conductance = measure(H, cut.set).conductance;
  return cut;
}

SweepCut best_sweep(const Hypergraph& H, const std::vector<double>& x, double mu) {
  return best_sweep(H, sweep_profile(H, x), mu);
}

double LsCurve::operator()(double x) const {
  const double total = volumes.back();
  x = std::clamp(x, 0.0, total);
  auto it = std::upper_bound(volumes.begin(), volumes.end(), x);
  std::size_t hi = std::min<std::size_t>(it - volumes.begin(), volumes.size() - 1);
  std::size_t lo = hi - 1;
  if (x == volumes[lo]) return masses[lo];
  const double t = (x - volumes[lo]) / (volumes[hi] - volumes[lo]);
  return masses[lo] + t * (masses[hi] - masses[lo]);
}

LsCurve ls_curve(const Hypergraph& H, const std::vector<double>& p) {
  if (p.size() != H.vertex_count()) throw InputError("distribution length mismatch");
  double mass = 0.0, lo = 0.0;
  for (double v : p) {
    mass += v;
    lo = std::min(lo, v);
  }
  if (lo < -1e-9 || std::fabs(mass - 1.0) > 1e-6) throw NotADistribution();

  SweepProfile profile = sweep_profile(H, p);
  const std::size_t n = profile.order.size();
  LsCurve curve;
  curve.volumes.resize(n + 1);
  curve.masses.resize(n + 1);
  curve.volumes[0] = 0.0;
  curve.masses[0] = 0.0;
  double acc = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    acc += p[profile.order[j]];
    curve.volumes[j + 1] = profile.volumes[j];
    curve.masses[j + 1] = acc;
  }
  return curve;
}

KeyLemmaReport check_key_lemma(const Hypergraph& H, const std::vector<double>& s, double alpha,
                               double mu, const VertexSet& S, double delta) {
  if (!(mu > 0.0 && mu <= 0.5)) throw InvalidParameter("mu must be in (0, 1/2]");
  if (!(delta > 0.0)) throw InvalidParameter("delta must be positive");

  KeyLemmaReport report;
  report.delta = delta;
  if (H.vertex_count() < 2) return report;

  PprResult ppr = hypergraph_ppr_exact(H, s, alpha, 1e-9);
  const double total = H.total_volume();
  const double vol_S = H.volume(S);
  report.mass_gap = sum_on(ppr.rho, S) - vol_S / total;
  report.applicable =
      vol_S / total <= mu && delta >= 4.0 / std::sqrt(total) && report.mass_gap > delta;

  SweepProfile profile = sweep_profile(H, ppr.rho);
  const std::size_t j_max = std::min(profile.ell(mu), H.vertex_count() - 1);
  report.observed_phi = profile.phis[0];
  for (std::size_t j = 1; j < j_max; ++j)
    report.observed_phi = std::min(report.observed_phi, profile.phis[j]);

  report.bound = std::sqrt(24.0 * alpha * std::log(4.0 / delta) / delta);
  report.bound_alt = std::sqrt(12.0 * alpha * std::log(total) / delta);
  report.holds = report.applicable && report.observed_phi < report.bound;
  return report;
}

MixingReport check_mixing(const Hypergraph& G, const std::vector<double>& s, double alpha,
                          double mu, const VertexSet& S, std::size_t t_max, double slack) {
  if (!(mu > 0.0 && mu <= 0.5)) throw InvalidParameter("mu must be in (0, 1/2]");
  MixingReport report;
  if (!G.is_graph() || G.vertex_count() < 2) return report;  // stated for graphs only

  const double total = G.total_volume();
  const double vol_S = G.volume(S);
  if (vol_S > mu * total) return report;
  report.applicable = true;

  std::vector<double> p = graph_ppr_exact(G, s, alpha);
  SweepProfile profile = sweep_profile(G, p);
  const std::size_t n = G.vertex_count();
  const std::size_t j_max = std::min(profile.ell(mu), n - 1);
  double phi = profile.phis[0];
  for (std::size_t j = 1; j < j_max; ++j) phi = std::min(phi, profile.phis[j]);
  report.phi = phi;

  const double gap = sum_on(p, S) - vol_S / total;
  double decay = 1.0;  // (1 - phi^2/8)^t
  report.max_violation = 0.0;
  for (std::size_t t = 0; t <= t_max; ++t) {
    const double bound = alpha * static_cast<double>(t) + std::sqrt(vol_S) * decay;
    report.max_violation = std::max(report.max_violation, gap - bound);
    decay *= 1.0 - phi * phi / 8.0;
  }

  // One-step Lovasz-Simonovits inequality at every prefix, with the cut taken
  // in the induced graph of p (which is G itself away from ties).
  LsCurve pc = ls_curve(G, p);
  LsCurve sc = ls_curve(G, s);
  std::vector<double> z(n);
  for (std::size_t v = 0; v < n; ++v) z[v] = p[v] / G.degree(v);
  InducedGraph induced = induced_graph(G, z);
  std::vector<char> in(n, 0);
  report.ls_max_violation = 0.0;
  for (std::size_t j = 1; j <= n - 1; ++j) {
    in[profile.order[j - 1]] = 1;
    double cut = 0.0;
    for (const InducedGraph::Edge& e : induced.edges)
      if (in[e.u] != in[e.v]) cut += e.weight;
    const double x = profile.volumes[j - 1];
    const double lhs = pc(x);
    const double rhs = alpha * sc(x) + (1.0 - alpha) * 0.5 * (pc(x - cut) + pc(x + cut));
    report.ls_max_violation = std::max(report.ls_max_violation, lhs - rhs);
  }

  report.holds = report.max_violation <= slack && report.ls_max_violation <= slack;
  return report;
}

void write_profile_csv(const SweepProfile& profile, std::ostream& out) {
  out << "j,vertex,vol,cut,phi\n";
  char buf[192];
  for (std::size_t j = 1; j < std::max<std::size_t>(profile.order.size(), 1); ++j) {
    std::snprintf(buf, sizeof(buf), "%zu,%u,%.17g,%.17g,%.17g\n", j, profile.order[j - 1],
                  profile.volumes[j - 1], profile.cuts[j - 1], profile.phis[j - 1]);
    out << buf;
  }
}

}  // namespace hyperppr
