#pragma once

#include <cstddef>
#include <vector>

#include "hyperppr/hypergraph.hpp"

namespace hyperppr {

struct PprParams {
  double alpha = 0.1;        // teleport parameter, in (0, 1]
  double dt = 1.0;           // Euler step
  double total_time = 30.0;  // simulated horizon; ceil(total_time/dt) steps
  double theta = 1e-5;       // truncation threshold after each step (0 = off)
  double tie_tol = 0.0;
  double residual_target = 0.0;  // >0: stop early once the residual drops below

  double beta() const { return 2.0 * alpha / (1.0 + alpha); }
  void validate() const;

  /// Verification settings: no truncation, small step, run until the
  /// stationarity residual falls below `target`.
  static PprParams exact_mode(double alpha, double target = 1e-10);
};

struct PprResult {
  std::vector<double> rho;
  std::size_t iterations = 0;
  double final_residual = 0.0;
  double mass = 0.0;
};

/// Euler simulation of rho' = beta*(s - rho) - (1-beta)*NormalizedLaplacian(rho)
/// from rho_0 = s. Entries below theta are zeroed after each step.
PprResult euler_ppr(const Hypergraph& H, const std::vector<double>& s, const PprParams& params);

/// l1 distance from stationarity: the minimum of
/// ||beta*(s - rho) - (1-beta)*L(rho)||_1 over subgradient selections
/// supported on the tie sets at tie_tol (each edge splits w(e)*gap freely
/// across S_max / S_min), found by a small min-cost flow. Zero exactly at the
/// PPR vector; coincides with the averaged-selection value when no entries tie.
double residual(const Hypergraph& H, const std::vector<double>& rho,
                const std::vector<double>& s, double alpha, double tie_tol = 0.0);

/// Stationary PPR solve. Euler chatters forever on instances whose solution
/// ties vertices inside an edge with an uneven subgradient split, so this
/// recovers the level vector with an interior-point pass over the equivalent
/// quadratic program, snaps the tie pattern with exact pooled solves, and
/// certifies with `residual`. The certificate is evaluated at a tie
/// tolerance of 1e-14 * max|rho/d| rather than 0: tied levels cannot round
/// trip bit-identically through rho = d*z for differing degrees.
/// `final_residual` is that certificate and callers gate on it; `iterations`
/// counts warm-start steps plus linear solves. n <= 4096.
PprResult hypergraph_ppr_exact(const Hypergraph& H, const std::vector<double>& s,
                               double alpha, double residual_target = 1e-9);

/// Lazy-walk fixed-point iteration x <- alpha*s + (1-alpha)*W x with
/// W = (I + A D^{-1})/2, started from the uniform vector.
std::vector<double> graph_ppr_power(const Hypergraph& G, const std::vector<double>& s,
                                    double alpha, double tol = 1e-8,
                                    std::size_t max_iter = 100000);

/// Dense solve of (I + ((1-alpha)/(2*alpha)) * NormalizedLaplacian) p = s.
/// Reference oracle for euler_ppr and graph_ppr_power; n <= 4096.
std::vector<double> graph_ppr_exact(const Hypergraph& G, const std::vector<double>& s,
                                    double alpha);

}  // namespace hyperppr
