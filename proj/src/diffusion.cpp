#include "hyperppr/diffusion.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>

#include "hyperppr/laplacian.hpp"

namespace hyperppr {

namespace {

constexpr std::size_t kDenseSolveLimit = 4096;

void check_seed(const Hypergraph& H, const std::vector<double>& s) {
  if (s.size() != H.vertex_count())
    throw InputError("seed vector length does not match vertex count");
  for (double v : s)
    if (!std::isfinite(v)) throw InputError("seed vector has non-finite entries");
}

void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw InvalidParameter("alpha must be in (0, 1]");
}

void check_is_graph(const Hypergraph& G) {
  for (EdgeId i = 0; i < G.edge_count(); ++i)
    if (G.edge(i).members.size() != 2) throw NotAGraph(i);
}

double l1_norm(const std::vector<double>& x) {
  double total = 0.0;
  for (double v : x) total += std::fabs(v);
  return total;
}

/// Successive shortest augmenting paths over real capacities. Costs here are
/// only 0 or 1, so the label-correcting pass settles in a handful of sweeps.
struct FlowNet {
  struct Arc {
    int to;
    double cap;
    int cost;
    int rev;
  };
  std::vector<std::vector<Arc>> g;

  explicit FlowNet(int nodes) : g(nodes) {}

  // Returns the index of the forward arc within g[u].
  int add(int u, int v, double cap, int cost) {
    g[u].push_back({v, cap, cost, static_cast<int>(g[v].size())});
    g[v].push_back({u, 0.0, -cost, static_cast<int>(g[u].size()) - 1});
    return static_cast<int>(g[u].size()) - 1;
  }

  void run(int src, int dst, double eps) {
    const int n = static_cast<int>(g.size());
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> dist(n);
    std::vector<int> pv(n), pe(n);
    std::vector<char> inq(n);
    for (std::size_t guard = 0; guard <= 4 * g.size() * g.size() + 64; ++guard) {
      std::fill(dist.begin(), dist.end(), inf);
      std::fill(inq.begin(), inq.end(), 0);
      dist[src] = 0.0;
      std::deque<int> queue{src};
      while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        inq[u] = 0;
        for (int i = 0; i < static_cast<int>(g[u].size()); ++i) {
          const Arc& a = g[u][i];
          if (a.cap <= eps || dist[u] + a.cost >= dist[a.to]) continue;
          dist[a.to] = dist[u] + a.cost;
          pv[a.to] = u;
          pe[a.to] = i;
          if (!inq[a.to]) {
            inq[a.to] = 1;
            queue.push_back(a.to);
          }
        }
      }
      if (dist[dst] == inf) return;
      double push = inf;
      for (int v = dst; v != src; v = pv[v]) push = std::min(push, g[pv[v]][pe[v]].cap);
      for (int v = dst; v != src; v = pv[v]) {
        Arc& a = g[pv[v]][pe[v]];
        a.cap -= push;
        g[v][a.rev].cap += push;
      }
    }
    throw NoConvergence(4 * g.size() * g.size() + 64);
  }
};

}  // namespace

void PprParams::validate() const {
  check_alpha(alpha);
  if (!(dt > 0.0)) throw InvalidParameter("dt must be positive");
  if (!(total_time > 0.0)) throw InvalidParameter("total_time must be positive");
  if (dt > total_time) throw InvalidParameter("dt must not exceed total_time");
  if (theta < 0.0) throw InvalidParameter("theta must be >= 0");
  if (tie_tol < 0.0) throw InvalidParameter("tie_tol must be >= 0");
  if (residual_target < 0.0) throw InvalidParameter("residual_target must be >= 0");
}

PprParams PprParams::exact_mode(double alpha, double target) {
  PprParams p;
  p.alpha = alpha;
  p.dt = 0.5;
  p.total_time = 1e5;  // step cap; the residual target stops far earlier
  p.theta = 0.0;
  p.residual_target = target;
  return p;
}

PprResult euler_ppr(const Hypergraph& H, const std::vector<double>& s, const PprParams& params) {
  params.validate();
  check_seed(H, s);

  const std::size_t n = H.vertex_count();
  const double beta = params.beta();
  const std::size_t steps = static_cast<std::size_t>(std::ceil(params.total_time / params.dt));

  PprResult result;
  result.rho = s;
  std::vector<double>& rho = result.rho;

  for (std::size_t step = 0; step < steps; ++step) {
    std::vector<double> lap = apply_laplacian(H, rho, /*normalized=*/true, params.tie_tol);
    double res = 0.0;
    for (std::size_t v = 0; v < n; ++v) {
      lap[v] = beta * (s[v] - rho[v]) - (1.0 - beta) * lap[v];  // reused as the update
      res += std::fabs(lap[v]);
    }
    if (params.residual_target > 0.0 && res < params.residual_target) {
      // rho already satisfies the target; report the residual it was judged by.
      result.iterations = step;
      result.final_residual = res;
      result.mass = 0.0;
      for (double v : rho) result.mass += v;
      return result;
    }
    for (std::size_t v = 0; v < n; ++v) {
      rho[v] += params.dt * lap[v];
      if (!std::isfinite(rho[v])) throw NonFiniteState(step + 1);
    }
    if (params.theta > 0.0)
      for (double& v : rho)
        if (std::fabs(v) < params.theta) v = 0.0;
  }

  result.iterations = steps;
  result.final_residual = residual(H, rho, s, params.alpha, params.tie_tol);
  for (double v : rho) result.mass += v;
  return result;
}

namespace {

// Residual with an optional view of the per-vertex stationarity defect of the
// winning selection (used by the stationary solver as an un-merge signal).
double residual_impl(const Hypergraph& H, const std::vector<double>& rho,
                     const std::vector<double>& s, double alpha, double tie_tol,
                     std::vector<double>* defect) {
  check_alpha(alpha);
  check_seed(H, s);
  if (rho.size() != H.vertex_count())
    throw InputError("state vector length does not match vertex count");
  if (tie_tol < 0.0) throw InvalidParameter("tie_tol must be >= 0");

  const std::size_t n = H.vertex_count();
  const double beta = 2.0 * alpha / (1.0 + alpha);
  const double lam = 1.0 - beta;

  std::vector<double> target(n);
  for (std::size_t v = 0; v < n; ++v) target[v] = beta * (s[v] - rho[v]);
  if (defect != nullptr) *defect = target;
  if (lam == 0.0) return l1_norm(target);

  std::vector<double> z(n, 0.0);
  for (std::size_t v = 0; v < n; ++v)
    if (H.degree(v) > 0.0) z[v] = rho[v] / H.degree(v);
  const EdgeSelection sel = select_subgradient(H, z, tie_tol);

  std::vector<EdgeId> active;
  for (EdgeId i = 0; i < H.edge_count(); ++i)
    if (sel.gaps[i] > tie_tol && sel.gaps[i] > 0.0) active.push_back(i);
  if (active.empty()) return l1_norm(target);

  // The averaged choice is one admissible selection; start from its value.
  const std::vector<double> lap = apply_laplacian(H, rho, /*normalized=*/true, tie_tol);
  std::vector<double> dev_avg(n);
  double best = 0.0;
  for (std::size_t v = 0; v < n; ++v) {
    dev_avg[v] = target[v] - lam * lap[v];
    best += std::fabs(dev_avg[v]);
  }

  // Every other admissible selection re-splits each edge's budget w(e)*gap
  // across its tie sets; the best split is a transportation problem. Node
  // layout: vertices, then a collector/distributor pair per active edge, a
  // dump that prices mismatch at cost 1 per unit, and the flow terminals.
  const int nv = static_cast<int>(n);
  const int na = static_cast<int>(active.size());
  const int dump = nv + 2 * na, src = dump + 1, dst = dump + 2;
  FlowNet net(dst + 1);

  std::vector<double> bal(dump + 1, 0.0);
  for (std::size_t v = 0; v < n; ++v) bal[v] = target[v] / lam;
  std::vector<std::vector<int>> out_arc(na), in_arc(na);
  double btot = 0.0;
  for (int k = 0; k < na; ++k) {
    const EdgeId i = active[k];
    const double budget = H.edge(i).weight * sel.gaps[i];
    bal[nv + 2 * k] -= budget;      // collects the withdrawals from S_max
    bal[nv + 2 * k + 1] += budget;  // feeds the deposits into S_min
    for (VertexId v : sel.max_sets[i])
      out_arc[k].push_back(net.add(static_cast<int>(v), nv + 2 * k, budget, 0));
    for (VertexId v : sel.min_sets[i])
      in_arc[k].push_back(net.add(nv + 2 * k + 1, static_cast<int>(v), budget, 0));
    btot += 2.0 * budget;
  }
  for (std::size_t v = 0; v < n; ++v) btot += std::fabs(bal[v]);
  const double big = btot + 1.0;
  for (int v = 0; v < nv; ++v) {
    net.add(v, dump, big, 1);
    net.add(dump, v, big, 1);
  }
  bal[dump] = -std::accumulate(bal.begin(), bal.begin() + dump, 0.0);
  for (int u = 0; u <= dump; ++u) {
    if (bal[u] > 0.0)
      net.add(src, u, bal[u], 0);
    else if (bal[u] < 0.0)
      net.add(u, dst, -bal[u], 0);
  }
  net.run(src, dst, 1e-13 * std::max(1.0, btot));

  // Read the chosen split back and price that explicit selection, so the
  // returned value is always attained by an admissible subgradient.
  std::vector<double> chosen(n, 0.0);
  for (int k = 0; k < na; ++k) {
    const EdgeId i = active[k];
    const double budget = H.edge(i).weight * sel.gaps[i];
    for (int side = 0; side < 2; ++side) {
      const std::vector<VertexId>& members = side == 0 ? sel.max_sets[i] : sel.min_sets[i];
      const std::vector<int>& arcs = side == 0 ? out_arc[k] : in_arc[k];
      const double sign = side == 0 ? 1.0 : -1.0;
      const int hub = nv + 2 * k + 1;
      std::vector<double> flow(members.size());
      double total = 0.0;
      for (std::size_t j = 0; j < members.size(); ++j) {
        const FlowNet::Arc& a =
            side == 0 ? net.g[members[j]][arcs[j]] : net.g[hub][arcs[j]];
        flow[j] = std::max(0.0, budget - a.cap);
        total += flow[j];
      }
      for (std::size_t j = 0; j < members.size(); ++j) {
        const double share =
            total > 0.0 ? flow[j] / total : 1.0 / static_cast<double>(members.size());
        chosen[members[j]] += sign * budget * share;
      }
    }
  }
  double res = 0.0;
  for (std::size_t v = 0; v < n; ++v) res += std::fabs(target[v] - lam * chosen[v]);
  if (res >= best) {
    if (defect != nullptr) *defect = dev_avg;
    return best;
  }
  if (defect != nullptr)
    for (std::size_t v = 0; v < n; ++v) (*defect)[v] = target[v] - lam * chosen[v];
  return res;
}

}  // namespace

double residual(const Hypergraph& H, const std::vector<double>& rho,
                const std::vector<double>& s, double alpha, double tie_tol) {
  return residual_impl(H, rho, s, alpha, tie_tol, nullptr);
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(b)] = find(a); }
};

/// Guessed tie structure: per edge the vertices pinned to the top level, the
/// ones pinned to the bottom level, or a whole-edge tie (no gap term at all).
struct PoolPattern {
  std::vector<std::vector<VertexId>> top, bot;
  std::vector<char> merged;
};

PoolPattern pools_from(const Hypergraph& H, const std::vector<double>& z, double tol) {
  const std::size_t m = H.edge_count();
  PoolPattern P;
  P.top.resize(m);
  P.bot.resize(m);
  P.merged.assign(m, 0);
  for (EdgeId i = 0; i < m; ++i) {
    const Hyperedge& e = H.edge(i);
    double zmax = z[e.members[0]], zmin = zmax;
    for (VertexId v : e.members) {
      zmax = std::max(zmax, z[v]);
      zmin = std::min(zmin, z[v]);
    }
    if (zmax - zmin <= 2.0 * tol) {
      P.merged[i] = 1;
      continue;
    }
    for (VertexId v : e.members) {
      if (z[v] >= zmax - tol)
        P.top[i].push_back(v);
      else if (z[v] <= zmin + tol)
        P.bot[i].push_back(v);
    }
  }
  return P;
}

/// Stationarity for a fixed pool pattern: ties collapse vertices into classes
/// and each unmerged edge couples its top class to its bottom class, giving a
/// small SPD system in the class levels. Vertices outside both pools of an
/// edge take no subgradient share from it, so they only enter through their
/// own degree term and any edge that does pool them.
void solve_pattern(const Hypergraph& H, const std::vector<double>& s, double beta,
                   const PoolPattern& P, std::vector<double>& p, std::vector<double>& z) {
  const std::size_t n = H.vertex_count();
  UnionFind uf(n);
  for (EdgeId i = 0; i < H.edge_count(); ++i) {
    const Hyperedge& e = H.edge(i);
    if (P.merged[i]) {
      for (VertexId v : e.members) uf.unite(e.members[0], v);
      continue;
    }
    for (VertexId v : P.top[i]) uf.unite(P.top[i][0], v);
    for (VertexId v : P.bot[i]) uf.unite(P.bot[i][0], v);
  }
  std::vector<int> root_cls(n, -1), cls(n, -1);
  int nc = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (!(H.degree(v) > 0.0)) continue;
    const int r = uf.find(static_cast<int>(v));
    if (root_cls[r] < 0) root_cls[r] = nc++;
    cls[v] = root_cls[r];
  }

  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(nc, nc);
  Eigen::VectorXd b = Eigen::VectorXd::Zero(nc);
  for (std::size_t v = 0; v < n; ++v) {
    if (cls[v] < 0) continue;
    A(cls[v], cls[v]) += beta * H.degree(v);
    b(cls[v]) += beta * s[v];
  }
  for (EdgeId i = 0; i < H.edge_count(); ++i) {
    if (P.merged[i]) continue;
    const int ct = cls[P.top[i][0]], cb = cls[P.bot[i][0]];
    if (ct == cb) continue;  // pools linked up through other edges
    const double w = (1.0 - beta) * H.edge(i).weight;
    A(ct, ct) += w;
    A(cb, cb) += w;
    A(ct, cb) -= w;
    A(cb, ct) -= w;
  }
  Eigen::LDLT<Eigen::MatrixXd> fac(A);
  Eigen::VectorXd y = fac.solve(b);
  if (fac.info() != Eigen::Success || !y.allFinite()) throw SingularSystem();

  p.assign(n, 0.0);
  z.assign(n, 0.0);
  for (std::size_t v = 0; v < n; ++v) {
    if (cls[v] < 0) {
      p[v] = s[v];  // edgeless vertex: its stationarity stands alone
      continue;
    }
    z[v] = y(cls[v]);
    p[v] = H.degree(v) * z[v];
  }
}

/// Grow pools until they sit at the extremes of the solved levels. Pools only
/// gain members and merges are one-way, so the caller's repair loop is
/// bounded by the total member count.
bool repair_extremes(const Hypergraph& H, const std::vector<double>& z, PoolPattern& P,
                     double eps) {
  bool changed = false;
  for (EdgeId i = 0; i < H.edge_count(); ++i) {
    if (P.merged[i]) continue;
    const double yt = z[P.top[i][0]], yb = z[P.bot[i][0]];
    if (yt - yb <= eps) {
      P.merged[i] = 1;
      changed = true;
      continue;
    }
    for (VertexId v : H.edge(i).members) {
      if (z[v] > yt + eps) {
        P.top[i].push_back(v);
        changed = true;
      } else if (z[v] < yb - eps) {
        P.bot[i].push_back(v);
        changed = true;
      }
    }
  }
  return changed;
}

/// The PPR vector is the KKT point of the convex quadratic program
///   min (beta/2) sum_v d_v z_v^2 - beta sum_v s_v z_v
///       + ((1-beta)/2) sum_e w_e (M_e - L_e)^2
///   s.t. z_v <= M_e and L_e <= z_v for every v in e
/// (the multipliers are the subgradient shares, so stationarity in z is the
/// PPR inclusion). A primal-dual interior-point pass recovers the level
/// vector to ~1e-9; the pooled solve then snaps the ties exactly.
std::vector<double> ipm_levels(const Hypergraph& H, const std::vector<double>& s,
                               double beta, const std::vector<double>& z0) {
  const std::size_t n = H.vertex_count();
  const std::size_t m = H.edge_count();
  std::vector<int> zvar(n, -1);
  int nz = 0;
  for (std::size_t v = 0; v < n; ++v)
    if (H.degree(v) > 0.0) zvar[v] = nz++;
  const int N = nz + 2 * static_cast<int>(m);
  const auto mi = [&](EdgeId e) { return nz + 2 * static_cast<int>(e); };
  const auto li = [&](EdgeId e) { return nz + 2 * static_cast<int>(e) + 1; };

  struct Con {
    int a, b;  // constraint value x[a] - x[b] <= 0
  };
  std::vector<Con> cons;
  for (EdgeId e = 0; e < m; ++e)
    for (VertexId v : H.edge(e).members) {
      cons.push_back({zvar[v], mi(e)});
      cons.push_back({li(e), zvar[v]});
    }
  const int K = static_cast<int>(cons.size());

  Eigen::VectorXd x = Eigen::VectorXd::Zero(N);
  double span = 1e-3;
  for (std::size_t v = 0; v < n; ++v) {
    if (zvar[v] < 0) continue;
    x[zvar[v]] = z0[v];
    span = std::max(span, std::fabs(z0[v]));
  }
  for (EdgeId e = 0; e < m; ++e) {
    double zmax = x[zvar[H.edge(e).members[0]]], zmin = zmax;
    for (VertexId v : H.edge(e).members) {
      zmax = std::max(zmax, x[zvar[v]]);
      zmin = std::min(zmin, x[zvar[v]]);
    }
    x[mi(e)] = zmax + 0.1 * span;
    x[li(e)] = zmin - 0.1 * span;
  }
  Eigen::VectorXd lam = Eigen::VectorXd::Constant(K, 1.0);

  const auto fill_f = [&](const Eigen::VectorXd& xx, Eigen::VectorXd& f) {
    for (int i = 0; i < K; ++i) f[i] = xx[cons[i].a] - xx[cons[i].b];
  };
  const auto fill_grad = [&](const Eigen::VectorXd& xx, Eigen::VectorXd& g) {
    g.setZero();
    for (std::size_t v = 0; v < n; ++v)
      if (zvar[v] >= 0) g[zvar[v]] = beta * (H.degree(v) * xx[zvar[v]] - s[v]);
    for (EdgeId e = 0; e < m; ++e) {
      const double t = (1.0 - beta) * H.edge(e).weight * (xx[mi(e)] - xx[li(e)]);
      g[mi(e)] += t;
      g[li(e)] -= t;
    }
  };
  const auto rnorm = [&](const Eigen::VectorXd& xx, const Eigen::VectorXd& ll,
                         double tinv) {
    Eigen::VectorXd f(K), g(N);
    fill_f(xx, f);
    fill_grad(xx, g);
    for (int i = 0; i < K; ++i) {
      g[cons[i].a] += ll[i];
      g[cons[i].b] -= ll[i];
    }
    double cent = 0.0;
    for (int i = 0; i < K; ++i) {
      const double c = -ll[i] * f[i] - tinv;
      cent += c * c;
    }
    return std::sqrt(g.squaredNorm() + cent);
  };

  const double tol = 1e-13 * std::max(1.0, l1_norm(s));
  Eigen::VectorXd f(K), g(N), rd(N), rhs(N), dx(N), dlam(K);
  Eigen::MatrixXd Mred(N, N);
  for (int iter = 0; iter < 120; ++iter) {
    fill_f(x, f);
    fill_grad(x, g);
    rd = g;
    for (int i = 0; i < K; ++i) {
      rd[cons[i].a] += lam[i];
      rd[cons[i].b] -= lam[i];
    }
    const double gap = -f.dot(lam);
    if (gap < tol && rd.lpNorm<Eigen::Infinity>() < tol) break;
    const double tinv = 0.1 * gap / K;

    Mred.setZero();
    for (std::size_t v = 0; v < n; ++v)
      if (zvar[v] >= 0) Mred(zvar[v], zvar[v]) = beta * H.degree(v);
    for (EdgeId e = 0; e < m; ++e) {
      const double c = (1.0 - beta) * H.edge(e).weight;
      Mred(mi(e), mi(e)) += c;
      Mred(li(e), li(e)) += c;
      Mred(mi(e), li(e)) -= c;
      Mred(li(e), mi(e)) -= c;
    }
    rhs = -rd;
    for (int i = 0; i < K; ++i) {
      const double w = lam[i] / -f[i];
      Mred(cons[i].a, cons[i].a) += w;
      Mred(cons[i].b, cons[i].b) += w;
      Mred(cons[i].a, cons[i].b) -= w;
      Mred(cons[i].b, cons[i].a) -= w;
      const double extra = lam[i] + tinv / f[i];
      rhs[cons[i].a] += extra;
      rhs[cons[i].b] -= extra;
    }
    Eigen::LDLT<Eigen::MatrixXd> fac(Mred);
    dx = fac.solve(rhs);
    if (fac.info() != Eigen::Success || !dx.allFinite()) break;
    for (int i = 0; i < K; ++i) {
      const double adx = dx[cons[i].a] - dx[cons[i].b];
      dlam[i] = -lam[i] - (tinv + lam[i] * adx) / f[i];
    }

    double step = 1.0;
    for (int i = 0; i < K; ++i)
      if (dlam[i] < 0.0) step = std::min(step, -0.99 * lam[i] / dlam[i]);
    const double base = rnorm(x, lam, tinv);
    bool moved = false;
    for (int bt = 0; bt < 40; ++bt, step *= 0.5) {
      Eigen::VectorXd xn = x + step * dx;
      fill_f(xn, f);
      if (f.maxCoeff() >= 0.0) continue;
      Eigen::VectorXd ln = lam + step * dlam;
      if (rnorm(xn, ln, tinv) > (1.0 - 0.01 * step) * base) continue;
      x = xn;
      lam = ln;
      moved = true;
      break;
    }
    if (!moved) break;
  }

  std::vector<double> z(n, 0.0);
  for (std::size_t v = 0; v < n; ++v)
    if (zvar[v] >= 0) z[v] = x[zvar[v]];
  return z;
}

}  // namespace

PprResult hypergraph_ppr_exact(const Hypergraph& H, const std::vector<double>& s,
                               double alpha, double residual_target) {
  check_alpha(alpha);
  check_seed(H, s);
  if (!(residual_target > 0.0)) throw InvalidParameter("residual_target must be positive");
  const std::size_t n = H.vertex_count();
  if (n > kDenseSolveLimit) throw TooLarge(n, kDenseSolveLimit);

  PprResult best;
  if (alpha == 1.0) {
    best.rho = s;
    for (double v : s) best.mass += v;
    return best;
  }
  const double beta = 2.0 * alpha / (1.0 + alpha);

  // A short Euler orbit either converges outright (no ties in the solution)
  // or chatters in a small neighbourhood of it, which is all the pool
  // detection below needs.
  PprParams warm;
  warm.alpha = alpha;
  warm.dt = 0.1;
  warm.total_time = 60.0;
  warm.theta = 0.0;
  warm.residual_target = residual_target;
  best = euler_ppr(H, s, warm);
  if (best.final_residual <= residual_target) return best;

  std::size_t memb = 0;
  for (const Hyperedge& e : H.edges()) memb += e.members.size();
  const std::size_t repair_rounds = memb + H.edge_count() + 2;

  std::size_t work = best.iterations;
  std::vector<double> warm_z(n, 0.0);
  for (std::size_t v = 0; v < n; ++v)
    if (H.degree(v) > 0.0) warm_z[v] = best.rho[v] / H.degree(v);
  const std::vector<double> levels = ipm_levels(H, s, beta, warm_z);
  double zscale = 1e-12;
  for (double v : levels) zscale = std::max(zscale, std::fabs(v));

  // The levels come back tied only to solver accuracy (~1e-9); grouping at a
  // ladder of tolerances around that and letting the certificate arbitrate
  // picks out the tier matching the actual tie pattern. Certificates run at
  // an ulp-scale tie tolerance: the returned vector stores d_v * z_v, and
  // that product does not round-trip to bit-identical levels for tied
  // vertices of different degree.
  const double cert_tol = 1e-14 * zscale;
  std::vector<double> p, z;
  PoolPattern P_best;
  bool have_best = false;
  for (double tolg = 1e-4; tolg > 3e-10; tolg *= 0.316) {
    PoolPattern P = pools_from(H, levels, tolg * zscale);
    for (std::size_t round = 0; round < repair_rounds; ++round) {
      solve_pattern(H, s, beta, P, p, z);
      ++work;
      if (repair_extremes(H, z, P, 1e-12 * zscale)) continue;
      const double res = residual_impl(H, p, s, alpha, cert_tol, nullptr);
      if (res < best.final_residual) {
        best.rho = p;
        best.final_residual = res;
        P_best = P;
        have_best = true;
      }
      break;
    }
    if (best.final_residual <= residual_target) break;
  }

  // Active-set cleanup for near-degenerate level structure the ladder cannot
  // separate: a top-pooled vertex whose stationarity defect is negative (or
  // bot-pooled, positive) is asking for a negative share, so drop it from
  // that pool and re-solve. One membership per round, bounded rounds.
  if (best.final_residual > residual_target && have_best) {
    PoolPattern P = P_best;
    std::vector<double> defect;
    for (int pass = 0; pass < 64; ++pass) {
      std::size_t round = 0;
      for (; round < repair_rounds; ++round) {
        solve_pattern(H, s, beta, P, p, z);
        ++work;
        if (!repair_extremes(H, z, P, 1e-12 * zscale)) break;
      }
      if (round == repair_rounds) break;
      const double res = residual_impl(H, p, s, alpha, cert_tol, &defect);
      if (res < best.final_residual) {
        best.rho = p;
        best.final_residual = res;
      }
      if (best.final_residual <= residual_target) break;
      double worst_mag = 0.25 * residual_target;
      EdgeId we = 0;
      std::size_t wj = 0;
      int side = -1;
      for (EdgeId i = 0; i < H.edge_count(); ++i) {
        if (P.merged[i]) continue;
        if (P.top[i].size() > 1)
          for (std::size_t j = 0; j < P.top[i].size(); ++j)
            if (-defect[P.top[i][j]] > worst_mag) {
              worst_mag = -defect[P.top[i][j]];
              we = i, wj = j, side = 0;
            }
        if (P.bot[i].size() > 1)
          for (std::size_t j = 0; j < P.bot[i].size(); ++j)
            if (defect[P.bot[i][j]] > worst_mag) {
              worst_mag = defect[P.bot[i][j]];
              we = i, wj = j, side = 1;
            }
      }
      if (side < 0) break;
      std::vector<VertexId>& pool = side == 0 ? P.top[we] : P.bot[we];
      pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(wj));
    }
  }

  best.iterations = work;
  best.mass = 0.0;
  for (double v : best.rho) best.mass += v;
  return best;
}

std::vector<double> graph_ppr_power(const Hypergraph& G, const std::vector<double>& s,
                                    double alpha, double tol, std::size_t max_iter) {
  check_is_graph(G);
  check_alpha(alpha);
  check_seed(G, s);
  if (!(tol > 0.0)) throw InvalidParameter("tol must be positive");

  const std::size_t n = G.vertex_count();
  std::vector<double> x(n, 1.0 / static_cast<double>(n));
  std::vector<double> walk(n);
  for (std::size_t iter = 0; iter < max_iter; ++iter) {
    // walk = A D^{-1} x
    std::fill(walk.begin(), walk.end(), 0.0);
    for (const Hyperedge& e : G.edges()) {
      const VertexId u = e.members[0], v = e.members[1];
      walk[u] += e.weight * x[v] / G.degree(v);
      walk[v] += e.weight * x[u] / G.degree(u);
    }
    double diff = 0.0;
    for (std::size_t v = 0; v < n; ++v) {
      const double next = alpha * s[v] + (1.0 - alpha) * 0.5 * (x[v] + walk[v]);
      diff += std::fabs(next - x[v]);
      x[v] = next;
    }
    if (diff <= tol) return x;
  }
  throw NoConvergence(max_iter);
}

std::vector<double> graph_ppr_exact(const Hypergraph& G, const std::vector<double>& s,
                                    double alpha) {
  check_is_graph(G);
  check_alpha(alpha);
  check_seed(G, s);
  const std::size_t n = G.vertex_count();
  if (n > kDenseSolveLimit) throw TooLarge(n, kDenseSolveLimit);
  if (alpha == 1.0) return s;

  const double lambda = (1.0 - alpha) / (2.0 * alpha);
  Eigen::MatrixXd M = Eigen::MatrixXd::Identity(n, n) * (1.0 + lambda);
  for (const Hyperedge& e : G.edges()) {
    const VertexId u = e.members[0], v = e.members[1];
    M(u, v) -= lambda * e.weight / G.degree(v);
    M(v, u) -= lambda * e.weight / G.degree(u);
  }
  Eigen::VectorXd b(n);
  for (std::size_t v = 0; v < n; ++v) b[v] = s[v];

  Eigen::VectorXd p = M.partialPivLu().solve(b);
  double scale = std::max(1.0, b.cwiseAbs().maxCoeff());
  if (!p.allFinite() || (M * p - b).cwiseAbs().maxCoeff() > 1e-8 * scale)
    throw SingularSystem();

  return {p.data(), p.data() + n};
}

}  // namespace hyperppr
