#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "hyperppr/clustering.hpp"
#include "hyperppr/errors.hpp"
#include "hyperppr/hypergraph.hpp"
#include "hyperppr/synthetic.hpp"
#include "hyperppr/verify.hpp"

using namespace hyperppr;

namespace {

Hypergraph fixture_f1() {
  return Hypergraph::build(4, {{1.0, {0, 1, 2}}, {1.0, {2, 3}}});
}

}  // namespace

TEST_CASE("alpha candidate grid on F1") {
  Hypergraph H = fixture_f1();  // w_min = w_max = 1, sum |e| = 5
  std::vector<double> grid = alpha_candidates(H, 0.9);
  REQUIRE(grid.size() == 4);
  CHECK(grid[0] == doctest::Approx(0.2).epsilon(1e-12));
  CHECK(grid[1] == doctest::Approx(0.38).epsilon(1e-12));
  CHECK(grid[2] == doctest::Approx(0.722).epsilon(1e-12));
  CHECK(grid[3] == 1.0);
  CHECK(std::is_sorted(grid.begin(), grid.end()));

  CHECK_THROWS_AS(alpha_candidates(H, 0.0), InvalidParameter);
  CHECK_THROWS_AS(alpha_candidates(H, 1.0), InvalidParameter);
}

TEST_CASE("alpha grid brackets every conductance value") {
  std::mt19937_64 rng(31);
  PlantedParams params;
  Hypergraph H = generate_planted(params);
  const double base = H.min_edge_weight() / (H.max_edge_weight() * H.total_edge_size());
  for (double epsilon : {0.9, 0.5, 0.1}) {
    std::vector<double> grid = alpha_candidates(H, epsilon);
    CHECK(grid.back() == 1.0);
    CHECK(grid.front() <= base * (1.0 + epsilon) + 1e-15);
    std::uniform_real_distribution<double> pd(base, 1.0);
    for (int i = 0; i < 1000; ++i) {
      const double phi = pd(rng);
      bool bracketed = false;
      for (double a : grid)
        if (a <= phi && phi <= (1.0 + epsilon) * a) bracketed = true;
      CHECK(bracketed);
    }
  }
}

TEST_CASE("local clustering on F1 finds the left pair") {
  Hypergraph H = fixture_f1();
  LocalParams params;  // mu = 0.5, epsilon = 0.9, Euler defaults
  ClusterResult r = local_clustering(H, 0, params);
  CHECK(r.set == VertexSet{0, 1});
  CHECK(r.conductance == 0.5);
  CHECK(r.seed == 0);
  CHECK(r.set.contains(r.seed));
  CHECK(r.volume == 2.0);
  CHECK(r.method == "local");
  CHECK(measure(H, r.set).conductance == r.conductance);

  // exact stationary solves reach the same answer
  LocalParams exact = params;
  exact.exact = true;
  ClusterResult re = local_clustering(H, 0, exact);
  CHECK(re.set == VertexSet{0, 1});
  CHECK(re.conductance == 0.5);
}

TEST_CASE("local clustering recovers the planted cluster from an interior seed") {
  PlantedParams params;
  Hypergraph H = generate_planted(params);
  VertexSet C0 = planted_cluster(params, 0);
  VertexSet inner = interior(H, C0);
  REQUIRE_FALSE(inner.empty());

  LocalParams lp;
  lp.mu = 0.5;
  ClusterResult r = local_clustering(H, inner.members()[0], lp);
  CHECK(r.set == C0);
  CHECK(r.conductance == doctest::Approx(1.0 / 121.0).epsilon(1e-12));
  CHECK(measure(H, r.set).conductance == r.conductance);
}

TEST_CASE("local clustering validates inputs") {
  Hypergraph H = fixture_f1();
  LocalParams bad_mu;
  bad_mu.mu = 0.75;
  CHECK_THROWS_AS(local_clustering(H, 0, bad_mu), InvalidParameter);
  bad_mu.mu = 0.0;
  CHECK_THROWS_AS(local_clustering(H, 0, bad_mu), InvalidParameter);
  LocalParams ok;
  CHECK_THROWS_AS(local_clustering(H, 9, ok), InputError);
}

TEST_CASE("local output respects the volume cap with overshoot") {
  PlantedParams params;
  params.cluster_size = 8;
  params.edges_per_cluster = 12;
  Hypergraph H = generate_planted(params);
  for (double mu : {0.1, 0.25, 0.5}) {
    LocalParams lp;
    lp.mu = mu;
    ClusterResult r = local_clustering(H, 2, lp);
    CHECK(r.set.contains(2));
    CHECK(r.volume <= mu * H.total_volume() + H.max_degree() + 1e-12);
    CHECK(r.volume == doctest::Approx(measure(H, r.set).volume).epsilon(1e-12));
  }
}

TEST_CASE("global clustering on F1") {
  Hypergraph H = fixture_f1();
  LocalParams lp;
  ClusterResult r = global_clustering(H, lp);
  CHECK(r.conductance == 0.5);
  // {0,1} from seed 0 and {2,3} from seed 2 tie at phi = 0.5 and size 2;
  // the smaller seed id wins
  CHECK(r.seed == 0);
  CHECK(r.set == VertexSet{0, 1});

  // a single-seed run equals local clustering with mu = 1/2
  ClusterResult single = global_clustering(H, lp, std::vector<VertexId>{3});
  LocalParams half = lp;
  half.mu = 0.5;
  ClusterResult local3 = local_clustering(H, 3, half);
  CHECK(single.set == local3.set);
  CHECK(single.conductance == local3.conductance);
  CHECK(single.alpha_used == local3.alpha_used);

  // sampling everything is the same as enumerating everything
  ClusterResult sampled = global_clustering(H, lp, {}, 4, 77);
  CHECK(sampled.set == r.set);
  CHECK(sampled.conductance == r.conductance);
  CHECK(sampled.seed == r.seed);

  // determinism under a fixed rng seed
  ClusterResult s1 = global_clustering(H, lp, {}, 2, 123);
  ClusterResult s2 = global_clustering(H, lp, {}, 2, 123);
  CHECK(s1.set == s2.set);
  CHECK(s1.seed == s2.seed);
}

TEST_CASE("global clustering matches brute force on small instances") {
  std::mt19937_64 rng(32);
  int matches = 0;
  const int trials = 12;
  for (int trial = 0; trial < trials; ++trial) {
    // small random hypergraphs, n <= 10, connected by construction
    std::uniform_int_distribution<std::size_t> nd(5, 10);
    const std::size_t n = nd(rng);
    std::uniform_int_distribution<std::size_t> md(4, 10);
    std::uniform_int_distribution<std::size_t> kd(2, 4);
    std::uniform_int_distribution<VertexId> vd(0, static_cast<VertexId>(n - 1));
    std::uniform_int_distribution<int> wq(1, 8);
    std::vector<Hyperedge> edges;
    for (VertexId v = 0; v + 1 < n; ++v)
      edges.push_back({1.0, {v, static_cast<VertexId>(v + 1)}});
    const std::size_t m = md(rng);
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t k = kd(rng);
      std::vector<VertexId> members;
      while (members.size() < k) {
        VertexId v = vd(rng);
        if (std::find(members.begin(), members.end(), v) == members.end()) members.push_back(v);
      }
      edges.push_back({wq(rng) * 0.5, std::move(members)});
    }
    Hypergraph H = Hypergraph::build(n, std::move(edges));

    LocalParams lp;
    lp.exact = true;
    ClusterResult got = global_clustering(H, lp);
    BruteForceResult want = brute_force_conductance(H);
    CHECK(got.conductance >= want.conductance - 1e-12);
    if (got.conductance <= want.conductance + 1e-9) ++matches;
  }
  // sweep cuts of PPR vectors are not guaranteed optimal, but on instances
  // this small they nearly always are
  CHECK(matches >= (trials * 3) / 4);
}

TEST_CASE("baseline expansions on F1") {
  Hypergraph H = fixture_f1();

  BaselineParams clique;
  clique.mode = ExpansionMode::clique;
  ClusterResult rc = baseline_expansion_clustering(H, 0, clique);
  CHECK(rc.set.contains(0));
  CHECK(rc.conductance >= 0.5 - 1e-12);  // brute-force minimum on F1
  CHECK(measure(H, rc.set).conductance == rc.conductance);
  CHECK(rc.method == "clique");

  BaselineParams star;
  star.mode = ExpansionMode::star;
  ClusterResult rs = baseline_expansion_clustering(H, 0, star);
  CHECK(rs.set.contains(0));
  CHECK(rs.conductance >= 0.5 - 1e-12);
  CHECK(measure(H, rs.set).conductance == rs.conductance);
  CHECK(rs.method == "star");
  // hubs never leak into the result
  for (VertexId v : rs.set.members()) CHECK(v < 4);
}

TEST_CASE("baselines recover the planted cluster") {
  PlantedParams params;
  Hypergraph H = generate_planted(params);
  for (ExpansionMode mode : {ExpansionMode::clique, ExpansionMode::star}) {
    BaselineParams bp;
    bp.mode = mode;
    ClusterResult r = baseline_expansion_clustering(H, 5, bp);
    CHECK(r.set.contains(5));
    CHECK(r.conductance == doctest::Approx(1.0 / 121.0).epsilon(1e-9));
  }
}

TEST_CASE("clique expansion budget") {
  // a single 300-vertex edge wants C(300,2) = 44850 pairwise edges
  std::vector<VertexId> members(300);
  for (VertexId v = 0; v < 300; ++v) members[v] = v;
  Hypergraph big = Hypergraph::build(300, {{1.0, std::move(members)}, {1.0, {0, 1}}});
  BaselineParams bp;
  bp.mode = ExpansionMode::clique;
  bp.clique_pair_budget = 10000;
  CHECK_THROWS_AS(baseline_expansion_clustering(big, 0, bp), ExpansionBudgetExceeded);
  // star mode has no such blowup
  bp.mode = ExpansionMode::star;
  ClusterResult r = baseline_expansion_clustering(big, 0, bp);
  CHECK(r.set.contains(0));
}

TEST_CASE("returned conductance beats the theorem bound on planted instances") {
  // seed in the interior, alpha grid bracketing phi_H(C*): the local
  // guarantee phi < 8/sqrt(3-eps-4mu) * sqrt(6 phi* log(2/(3-eps-4mu)))
  const double eps = 0.9, mu = 0.5;
  const double denom = 3.0 - eps - 4.0 * mu;  // 0.1
  for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
    PlantedParams params;
    params.rng_seed = seed;
    Hypergraph H = generate_planted(params);
    VertexSet C0 = planted_cluster(params, 0);
    const double phi_star = measure(H, C0).conductance;
    VertexSet inner = interior(H, C0);
    REQUIRE_FALSE(inner.empty());

    LocalParams lp;
    lp.mu = mu;
    lp.epsilon = eps;
    ClusterResult r = local_clustering(H, inner.members()[0], lp);
    const double bound =
        8.0 / std::sqrt(denom) * std::sqrt(6.0 * phi_star * std::log(2.0 / denom));
    CHECK(r.conductance < bound);
  }
}

TEST_CASE("cluster results serialize to JSON") {
  Hypergraph H = fixture_f1();
  LocalParams lp;
  ClusterResult r = local_clustering(H, 0, lp);
  std::string json = r.to_json();
  CHECK(json.find("\"method\"") != std::string::npos);
  CHECK(json.find("\"phi\"") != std::string::npos);
  CHECK(json.find("\"members_sorted\"") != std::string::npos);
  CHECK(json.find("[0,1]") != std::string::npos);
}
