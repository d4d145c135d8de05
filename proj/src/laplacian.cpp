#include "hyperppr/laplacian.hpp"

#include <cmath>

namespace hyperppr {

namespace {

void check_vector(const Hypergraph& H, const std::vector<double>& x, const char* what) {
  if (x.size() != H.vertex_count())
    throw InputError(std::string(what) + ": vector length does not match vertex count");
}

}  // namespace

EdgeSelection select_subgradient(const Hypergraph& H, const std::vector<double>& z,
                                 double tie_tol) {
  check_vector(H, z, "select_subgradient");
  if (tie_tol < 0.0) throw InvalidParameter("tie_tol must be >= 0");

  EdgeSelection sel;
  const std::size_t m = H.edge_count();
  sel.max_sets.resize(m);
  sel.min_sets.resize(m);
  sel.gaps.resize(m);
  for (EdgeId i = 0; i < m; ++i) {
    const Hyperedge& e = H.edge(i);
    double zmax = z[e.members[0]], zmin = zmax;
    for (VertexId v : e.members) {
      zmax = std::max(zmax, z[v]);
      zmin = std::min(zmin, z[v]);
    }
    sel.gaps[i] = zmax - zmin;
    for (VertexId v : e.members) {
      if (z[v] >= zmax - tie_tol) sel.max_sets[i].push_back(v);
      if (z[v] <= zmin + tie_tol) sel.min_sets[i].push_back(v);
    }
  }
  return sel;
}

std::vector<double> apply_laplacian(const Hypergraph& H, const std::vector<double>& x,
                                    bool normalized, double tie_tol) {
  check_vector(H, x, "apply_laplacian");
  if (tie_tol < 0.0) throw InvalidParameter("tie_tol must be >= 0");

  const std::size_t n = H.vertex_count();
  std::vector<double> scaled;
  const std::vector<double>* zp = &x;
  if (normalized) {
    scaled.resize(n);
    for (std::size_t v = 0; v < n; ++v) scaled[v] = x[v] / H.degree(v);
    zp = &scaled;
  }
  const std::vector<double>& z = *zp;

  std::vector<double> y(n, 0.0);
  for (const Hyperedge& e : H.edges()) {
    double zmax = z[e.members[0]], zmin = zmax;
    for (VertexId v : e.members) {
      zmax = std::max(zmax, z[v]);
      zmin = std::min(zmin, z[v]);
    }
    const double gap = zmax - zmin;
    // Within tie_tol the tie sets coincide and the contributions cancel.
    if (gap <= tie_tol || gap == 0.0) continue;

    std::size_t n_max = 0, n_min = 0;
    for (VertexId v : e.members) {
      n_max += z[v] >= zmax - tie_tol;
      n_min += z[v] <= zmin + tie_tol;
    }
    const double up = e.weight * gap / static_cast<double>(n_max);
    const double down = e.weight * gap / static_cast<double>(n_min);
    for (VertexId v : e.members) {
      if (z[v] >= zmax - tie_tol) y[v] += up;
      if (z[v] <= zmin + tie_tol) y[v] -= down;
    }
  }
  return y;
}

std::vector<double> InducedGraph::degrees() const {
  std::vector<double> deg(self_loops);
  for (const Edge& e : edges) {
    deg[e.u] += e.weight;
    deg[e.v] += e.weight;
  }
  return deg;
}

InducedGraph induced_graph(const Hypergraph& H, const std::vector<double>& z, double tie_tol) {
  check_vector(H, z, "induced_graph");
  if (tie_tol < 0.0) throw InvalidParameter("tie_tol must be >= 0");

  const std::size_t n = H.vertex_count();
  InducedGraph G;
  G.n = n;
  G.self_loops.assign(n, 0.0);

  std::vector<VertexId> smax, smin;
  for (const Hyperedge& e : H.edges()) {
    double zmax = z[e.members[0]], zmin = zmax;
    for (VertexId v : e.members) {
      zmax = std::max(zmax, z[v]);
      zmin = std::min(zmin, z[v]);
    }
    if (zmax - zmin <= tie_tol) {
      // Degenerate edge: all weight sits in self-loops.
      for (VertexId v : e.members) G.self_loops[v] += e.weight;
      continue;
    }
    smax.clear();
    smin.clear();
    for (VertexId v : e.members) {
      if (z[v] >= zmax - tie_tol) smax.push_back(v);
      if (z[v] <= zmin + tie_tol) smin.push_back(v);
    }
    const double P = static_cast<double>(smax.size());
    const double Q = static_cast<double>(smin.size());
    const double piece = e.weight / (P * Q);
    for (VertexId a : smax)
      for (VertexId b : smin) {
        if (a == b)
          G.self_loops[a] += piece;
        else
          G.edges.push_back({a, b, piece});
      }
    // Self-loop top-up so every member keeps its full degree share w(e).
    for (VertexId v : e.members) {
      const bool in_max = z[v] >= zmax - tie_tol;
      const bool in_min = z[v] <= zmin + tie_tol;
      if (in_max && in_min)
        G.self_loops[v] += e.weight * ((P - 1.0) * (Q - 1.0)) / (P * Q);
      else if (in_max)
        G.self_loops[v] += e.weight * (P - 1.0) / P;
      else if (in_min)
        G.self_loops[v] += e.weight * (Q - 1.0) / Q;
      else
        G.self_loops[v] += e.weight;
    }
  }
  return G;
}

double energy_Q(const Hypergraph& H, const std::vector<double>& x_tilde,
                const std::vector<double>& s_tilde, double beta) {
  check_vector(H, x_tilde, "energy_Q");
  check_vector(H, s_tilde, "energy_Q");
  if (!(beta > 0.0 && beta <= 1.0)) throw InvalidParameter("beta must be in (0, 1]");

  const std::size_t n = H.vertex_count();
  double quad = 0.0;
  for (std::size_t v = 0; v < n; ++v) {
    const double d = x_tilde[v] - s_tilde[v];
    quad += d * d;
  }

  std::vector<double> z(n);
  for (std::size_t v = 0; v < n; ++v) z[v] = x_tilde[v] / std::sqrt(H.degree(v));
  double dirichlet = 0.0;  // z^T L_H(z) = sum_e w(e) * gap(e)^2
  for (const Hyperedge& e : H.edges()) {
    double zmax = z[e.members[0]], zmin = zmax;
    for (VertexId v : e.members) {
      zmax = std::max(zmax, z[v]);
      zmin = std::min(zmin, z[v]);
    }
    dirichlet += e.weight * (zmax - zmin) * (zmax - zmin);
  }
  return 0.5 * beta * quad + (1.0 - beta) * dirichlet;
}

}  // namespace hyperppr
