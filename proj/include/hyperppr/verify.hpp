#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hyperppr/hypergraph.hpp"

namespace hyperppr {

struct BruteForceResult {
  VertexSet set;
  double conductance = 0.0;
};

/// Exhaustive minimum-conductance subset (n <= 20). With a seed, only sets
/// containing it and with vol <= mu*vol(V) count. Ties break to the smaller
/// set, then lexicographically on the ascending member list.
BruteForceResult brute_force_conductance(const Hypergraph& H,
                                         std::optional<double> mu = {},
                                         std::optional<VertexId> seed = {});

/// Executable lemma check. `lhs <= rhs + slack` decides `holds`; checks whose
/// hypotheses fail report applicable=false instead. Details carry the
/// intermediate quantities, witness the offending (or constructed) set.
struct LemmaReport {
  std::string name;
  bool applicable = false;
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
  VertexSet witness;
  std::map<std::string, double> details;

  std::string to_json() const;
};

/// Distribution property plus the stationary bounds pr(u) >= pi_V(u) and
/// pr(v) <= pi_V(v) for v != u; needs a connected hypergraph.
LemmaReport check_ppr_axioms(const Hypergraph& H, double alpha, VertexId u);

/// Interior-seed leak bound pr_alpha(chi_v)(outside C) <= phi_H(C)/(4*alpha),
/// for v in the interior of C and vol(C) <= vol(V)/2. Also cross-checks the
/// induced-graph cut inequality the bound rests on.
LemmaReport check_leak_local(const Hypergraph& H, const VertexSet& C, VertexId v,
                             double alpha);

/// pi_C-averaged leak bound: once the boundary assumption
/// (sum_w pi_C(w) pr(chi_w))(v) <= pi_C(v) for all v in C minus its interior
/// verifies, asserts the phi_H(C)/(2*alpha) bound and vol(C_alpha) >= vol(C)/2
/// for C_alpha = {v in C : pr(chi_v)(outside C) <= phi_H(C)/alpha}.
LemmaReport check_leak_global(const Hypergraph& H, const VertexSet& C, double alpha);

/// The two sufficient conditions for the boundary assumption: criterion 1
/// (pr_alpha(chi_v)(v) <= 1/2 for every v) and criterion 2
/// (alpha <= (1/2 - dmax/vol)/(1 - dmax/vol)). Either one suffices.
LemmaReport check_sufficient_conditions(const Hypergraph& H, double alpha,
                                        const std::optional<VertexSet>& C = {});

/// Continuity of alpha -> pr_alpha(s): reports the largest adjacent L1 gap
/// over the given ascending alphas.
LemmaReport check_continuity(const Hypergraph& H, const std::vector<double>& s,
                             const std::vector<double>& alphas);

}  // namespace hyperppr
