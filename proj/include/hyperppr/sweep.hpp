#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "hyperppr/hypergraph.hpp"

namespace hyperppr {

/**
 * Sweep enumeration of a vector x: vertices ordered by x(v)/d_v descending
 * (ties by ascending id), with volume, cut and conductance of every prefix
 * S_j = {v_1..v_j}. Cuts are maintained incrementally from per-edge inside
 * counters, so building the profile costs O(sum |e| + n log n).
 */
struct SweepProfile {
  std::vector<VertexId> order;     // v_1 .. v_n
  std::vector<double> volumes;     // vol(S_j), j = 1..n
  std::vector<double> cuts;        // cut(S_j), j = 1..n (last is 0)
  std::vector<double> phis;        // phi(S_j), j = 1..n-1
  double total_volume = 0.0;

  /// Unique index with vol(S_{l-1}) < mu*vol(V) <= vol(S_l); 1-based.
  std::size_t ell(double mu) const;
  VertexSet prefix(std::size_t j) const;
};

SweepProfile sweep_profile(const Hypergraph& H, const std::vector<double>& x);

/// Profile of an explicitly given vertex order (used by the expansion
/// baselines, whose ranking comes from a different graph).
SweepProfile sweep_profile_ordered(const Hypergraph& H, std::vector<VertexId> order);

struct SweepCut {
  VertexSet set;
  double conductance = 0.0;
  std::size_t prefix = 0;  // 1-based j
};

/// Best prefix among j <= min(ell_mu, n-1); ties go to the smallest j.
SweepCut best_sweep(const Hypergraph& H, const SweepProfile& profile, double mu);
SweepCut best_sweep(const Hypergraph& H, const std::vector<double>& x, double mu);

/// Lovasz-Simonovits curve of a distribution p: concave piecewise-linear
/// interpolation of the breakpoints (vol(S_j), p(S_j)), j = 0..n.
struct LsCurve {
  std::vector<double> volumes;  // breakpoint x's, ascending, volumes[0] = 0
  std::vector<double> masses;   // masses[0] = 0, masses[n] = 1
  double operator()(double x) const;
};

LsCurve ls_curve(const Hypergraph& H, const std::vector<double>& p);

/// Executable form of the sweep-conductance bound: if vol(S) <= mu*vol(V),
/// delta >= 4/sqrt(vol(V)) and pr_alpha(s)(S) - pi_V(S) > delta, then
/// phi^mu(pr_alpha(s)) < sqrt(24*alpha*log(4/delta)/delta). PPR is computed
/// untruncated. bound_alt records the sqrt(12*alpha*log(vol(V))/delta) form.
struct KeyLemmaReport {
  bool applicable = false;
  double observed_phi = 0.0;
  double bound = 0.0;
  double bound_alt = 0.0;
  double mass_gap = 0.0;  // pr(S) - pi_V(S)
  double delta = 0.0;
  bool holds = false;
};

KeyLemmaReport check_key_lemma(const Hypergraph& H, const std::vector<double>& s,
                               double alpha, double mu, const VertexSet& S, double delta);

/// Diagnostic for the PPR mixing bound on graph inputs: with p the exact PPR
/// and phi = phi^mu(p), checks p(S) - pi_V(S) <= alpha*t + sqrt(vol(S)) *
/// (1 - phi^2/8)^t for t = 0..t_max, and the one-step Lovasz-Simonovits
/// inequality p[x_j] <= alpha*s[x_j] + (1-alpha)/2 * (p[x_j - c_j] + p[x_j + c_j])
/// at every prefix. Only sets with vol(S) <= mu*vol(V) are applicable.
struct MixingReport {
  bool applicable = false;
  double phi = 0.0;
  double max_violation = 0.0;     // of the mixing inequality, over t
  double ls_max_violation = 0.0;  // of the one-step LS inequality, over j
  bool holds = false;
};

MixingReport check_mixing(const Hypergraph& G, const std::vector<double>& s, double alpha,
                          double mu, const VertexSet& S, std::size_t t_max = 50,
                          double slack = 1e-8);

/// CSV rows "j,vertex,vol,cut,phi" for j = 1..n-1.
void write_profile_csv(const SweepProfile& profile, std::ostream& out);

}  // namespace hyperppr
