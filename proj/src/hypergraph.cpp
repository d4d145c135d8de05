#include "hyperppr/hypergraph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace hyperppr {

VertexSet::VertexSet(std::vector<VertexId> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet::VertexSet(std::initializer_list<VertexId> members)
    : VertexSet(std::vector<VertexId>(members)) {}

bool VertexSet::contains(VertexId v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

std::vector<char> VertexSet::mask(std::size_t n) const {
  std::vector<char> out(n, 0);
  for (VertexId v : members_) {
    if (v >= n) throw InputError("vertex set member " + std::to_string(v) + " out of range");
    out[v] = 1;
  }
  return out;
}

Hypergraph Hypergraph::build_impl(std::size_t n, std::vector<Hyperedge> edges,
                                  bool allow_isolated, std::vector<char>* isolated_out) {
  if (n == 0) throw InputError("hypergraph needs at least one vertex");

  Hypergraph H;
  H.n_ = n;
  H.degrees_.assign(n, 0.0);

  for (std::size_t i = 0; i < edges.size(); ++i) {
    Hyperedge& e = edges[i];
    if (!(e.weight > 0.0) || !std::isfinite(e.weight)) throw NonPositiveWeight(i);
    if (e.members.empty()) throw EmptyEdge(i);
    std::sort(e.members.begin(), e.members.end());
    for (std::size_t k = 0; k < e.members.size(); ++k) {
      if (e.members[k] >= n) throw MemberOutOfRange(i, e.members[k]);
      if (k > 0 && e.members[k] == e.members[k - 1]) throw DuplicateMember(i);
    }
    for (VertexId v : e.members) H.degrees_[v] += e.weight;
    H.total_edge_size_ += e.members.size();
  }

  if (isolated_out) {
    isolated_out->assign(n, 0);
    for (std::size_t v = 0; v < n; ++v) (*isolated_out)[v] = H.degrees_[v] == 0.0;
  }
  if (!allow_isolated) {
    for (std::size_t v = 0; v < n; ++v)
      if (H.degrees_[v] == 0.0) throw IsolatedVertex(v);
  }

  H.edges_ = std::move(edges);

  // incidence index, CSR layout
  H.incidence_offsets_.assign(n + 1, 0);
  for (const Hyperedge& e : H.edges_)
    for (VertexId v : e.members) ++H.incidence_offsets_[v + 1];
  std::partial_sum(H.incidence_offsets_.begin(), H.incidence_offsets_.end(),
                   H.incidence_offsets_.begin());
  H.incidence_.resize(H.total_edge_size_);
  std::vector<std::size_t> cursor(H.incidence_offsets_.begin(), H.incidence_offsets_.end() - 1);
  for (EdgeId i = 0; i < H.edges_.size(); ++i)
    for (VertexId v : H.edges_[i].members) H.incidence_[cursor[v]++] = i;

  H.total_volume_ = std::accumulate(H.degrees_.begin(), H.degrees_.end(), 0.0);
  H.max_degree_ = *std::max_element(H.degrees_.begin(), H.degrees_.end());
  H.w_min_ = std::numeric_limits<double>::infinity();
  H.w_max_ = 0.0;
  for (const Hyperedge& e : H.edges_) {
    H.w_min_ = std::min(H.w_min_, e.weight);
    H.w_max_ = std::max(H.w_max_, e.weight);
  }
  if (H.edges_.empty()) H.w_min_ = 0.0;
  return H;
}

Hypergraph Hypergraph::build(std::size_t n, std::vector<Hyperedge> edges) {
  return build_impl(n, std::move(edges), false, nullptr);
}

DropResult Hypergraph::build_drop_isolated(std::size_t n,
                                                       std::vector<Hyperedge> edges) {
  std::vector<char> isolated;
  build_impl(n, edges, true, &isolated);  // validates and finds degree-0 vertices

  std::vector<VertexId> remap(n, 0);
  std::vector<VertexId> kept;
  for (std::size_t v = 0; v < n; ++v) {
    if (!isolated[v]) {
      remap[v] = static_cast<VertexId>(kept.size());
      kept.push_back(static_cast<VertexId>(v));
    }
  }
  if (kept.empty()) throw InputError("all vertices are isolated");
  for (Hyperedge& e : edges)
    for (VertexId& v : e.members) v = remap[v];
  return {build_impl(kept.size(), std::move(edges), false, nullptr), std::move(kept)};
}

bool Hypergraph::is_graph() const {
  for (const Hyperedge& e : edges_)
    if (e.members.size() != 2) return false;
  return true;
}

double Hypergraph::volume(const VertexSet& S) const {
  double vol = 0.0;
  for (VertexId v : S.members()) {
    if (v >= n_) throw InputError("vertex set member " + std::to_string(v) + " out of range");
    vol += degrees_[v];
  }
  return vol;
}

SubsetMeasure measure(const Hypergraph& H, const VertexSet& S) {
  const std::size_t n = H.vertex_count();
  if (S.empty() || S.size() >= n) {
    if (S.size() > n) throw InputError("vertex set larger than V");
    throw DegenerateSubset();
  }
  std::vector<char> in = S.mask(n);

  // Both side volumes are summed in ascending vertex order so that the
  // measure of S and of its complement see bit-identical values.
  double vol_in = 0.0, vol_out = 0.0;
  for (std::size_t v = 0; v < n; ++v) (in[v] ? vol_in : vol_out) += H.degree(v);

  double cut = 0.0;
  for (const Hyperedge& e : H.edges()) {
    std::size_t inside = 0;
    for (VertexId v : e.members) inside += in[v];
    if (inside > 0 && inside < e.members.size()) cut += e.weight;
  }
  return {vol_in, cut, cut / std::min(vol_in, vol_out)};
}

VertexSet interior(const Hypergraph& H, const VertexSet& S) {
  const std::size_t n = H.vertex_count();
  std::vector<char> in = S.mask(n);
  std::vector<char> touched(n, 0);  // members incident to a boundary edge
  for (const Hyperedge& e : H.edges()) {
    std::size_t inside = 0;
    for (VertexId v : e.members) inside += in[v];
    if (inside == 0 || inside == e.members.size()) continue;
    for (VertexId v : e.members)
      if (in[v]) touched[v] = 1;
  }
  std::vector<VertexId> result;
  for (VertexId v : S.members())
    if (!touched[v]) result.push_back(v);
  return VertexSet(std::move(result));
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), VertexId{0});
  }
  VertexId find(VertexId v) {
    while (parent_[v] != v) v = parent_[v] = parent_[parent_[v]];
    return v;
  }
  void unite(VertexId a, VertexId b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<VertexId> parent_;
};

}  // namespace

ConnectivityResult connectivity(const Hypergraph& H) {
  const std::size_t n = H.vertex_count();
  UnionFind uf(n);
  for (const Hyperedge& e : H.edges())
    for (std::size_t k = 1; k < e.members.size(); ++k) uf.unite(e.members[0], e.members[k]);

  // Roots are the minimum ids of their components, so scanning vertices in
  // ascending order yields components ordered by smallest member.
  std::vector<std::size_t> index_of_root(n, SIZE_MAX);
  ConnectivityResult result;
  for (std::size_t v = 0; v < n; ++v) {
    VertexId root = uf.find(static_cast<VertexId>(v));
    if (index_of_root[root] == SIZE_MAX) {
      index_of_root[root] = result.components.size();
      result.components.emplace_back();
    }
  }
  std::vector<std::vector<VertexId>> groups(result.components.size());
  for (std::size_t v = 0; v < n; ++v)
    groups[index_of_root[uf.find(static_cast<VertexId>(v))]].push_back(
        static_cast<VertexId>(v));
  for (std::size_t i = 0; i < groups.size(); ++i)
    result.components[i] = VertexSet(std::move(groups[i]));

  result.largest_index = 0;
  for (std::size_t i = 1; i < result.components.size(); ++i)
    if (result.components[i].size() > result.components[result.largest_index].size())
      result.largest_index = i;  // ties keep the earlier = smaller-min-id one
  return result;
}

bool is_connected(const Hypergraph& H) { return connectivity(H).components.size() == 1; }

std::vector<double> pi(const Hypergraph& H, const VertexSet& S) {
  if (S.empty()) throw EmptySubset();
  double vol = H.volume(S);
  std::vector<double> out(H.vertex_count(), 0.0);
  for (VertexId v : S.members()) out[v] = H.degree(v) / vol;
  return out;
}

std::vector<double> chi(const Hypergraph& H, VertexId v) {
  if (v >= H.vertex_count()) throw InputError("vertex " + std::to_string(v) + " out of range");
  std::vector<double> out(H.vertex_count(), 0.0);
  out[v] = 1.0;
  return out;
}

HypergraphStats stats(const Hypergraph& H) {
  HypergraphStats s;
  s.n = H.vertex_count();
  s.m = H.edge_count();
  s.avg_degree = H.total_volume() / static_cast<double>(s.n);
  s.avg_edge_size =
      s.m == 0 ? 0.0 : static_cast<double>(H.total_edge_size()) / static_cast<double>(s.m);
  return s;
}

double sum_on(const std::vector<double>& x, const VertexSet& S) {
  double total = 0.0;
  for (VertexId v : S.members()) {
    if (v >= x.size()) throw InputError("vertex set member " + std::to_string(v) + " out of range");
    total += x[v];
  }
  return total;
}

double sum_off(const std::vector<double>& x, const VertexSet& S) {
  double total = 0.0;
  std::size_t k = 0;
  const auto& members = S.members();
  for (std::size_t v = 0; v < x.size(); ++v) {
    if (k < members.size() && members[k] == v) {
      ++k;
      continue;
    }
    total += x[v];
  }
  return total;
}

}  // namespace hyperppr
