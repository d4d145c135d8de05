#include "hyperppr/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>

namespace hyperppr {

namespace {

// Returns false on blank/comment lines, true with the payload otherwise.
bool next_payload(std::istream& in, std::string& line, std::size_t& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#' || line[first] == '%') continue;
    return true;
  }
  return false;
}

bool parse_count(std::istringstream& tokens, std::uint64_t& out) {
  std::string tok;
  if (!(tokens >> tok)) return false;
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) return false;
  try {
    out = std::stoull(tok);
  } catch (const std::exception&) {
    return false;
  }
  return true;
}

void format_weight(double w, char* buf, std::size_t size) { std::snprintf(buf, size, "%.17g", w); }

}  // namespace

Hypergraph parse_hypergraph(std::istream& in, bool drop_isolated, std::vector<VertexId>* kept) {
  std::string line;
  std::size_t line_no = 0;

  if (!next_payload(in, line, line_no)) throw MalformedLine(line_no + 1, "missing header");
  std::istringstream header(line);
  std::uint64_t n = 0, m = 0;
  if (!parse_count(header, n) || !parse_count(header, m))
    throw MalformedLine(line_no, "expected \"n m\"");
  std::string extra;
  if (header >> extra) throw MalformedLine(line_no, "trailing tokens after \"n m\"");

  std::vector<Hyperedge> edges;
  edges.reserve(m);
  for (std::uint64_t i = 0; i < m; ++i) {
    if (!next_payload(in, line, line_no))
      throw MalformedLine(line_no + 1, "expected " + std::to_string(m) + " edges, got " +
                              std::to_string(i));
    std::istringstream tokens(line);
    Hyperedge e;
    if (!(tokens >> e.weight)) throw MalformedLine(line_no, "edge weight");
    std::string tok;
    while (tokens >> tok) {
      std::uint64_t v = 0;
      if (tok.find_first_not_of("0123456789") != std::string::npos)
        throw MalformedLine(line_no, "vertex id '" + tok + "'");
      try {
        v = std::stoull(tok);
      } catch (const std::exception&) {
        throw MalformedLine(line_no, "vertex id '" + tok + "'");
      }
      if (v > std::numeric_limits<VertexId>::max()) throw MalformedLine(line_no, "vertex id");
      e.members.push_back(static_cast<VertexId>(v));
    }
    edges.push_back(std::move(e));
  }
  if (next_payload(in, line, line_no)) throw MalformedLine(line_no, "data after the last edge");

  if (drop_isolated) {
    auto dropped = Hypergraph::build_drop_isolated(n, std::move(edges));
    if (kept) *kept = std::move(dropped.kept);
    return std::move(dropped.graph);
  }
  if (kept) {
    kept->resize(n);
    for (std::size_t v = 0; v < n; ++v) (*kept)[v] = static_cast<VertexId>(v);
  }
  return Hypergraph::build(n, std::move(edges));
}

Hypergraph load_hypergraph(const std::string& path, bool drop_isolated,
                           std::vector<VertexId>* kept) {
  std::ifstream in(path);
  if (!in) throw IoError(path);
  return parse_hypergraph(in, drop_isolated, kept);
}

void serialize_hypergraph(const Hypergraph& H, std::ostream& out) {
  out << H.vertex_count() << ' ' << H.edge_count() << '\n';
  char buf[64];
  for (const Hyperedge& e : H.edges()) {
    format_weight(e.weight, buf, sizeof(buf));
    out << buf;
    for (VertexId v : e.members) out << ' ' << v;
    out << '\n';
  }
}

void save_hypergraph(const Hypergraph& H, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError(path);
  serialize_hypergraph(H, out);
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> parse_bipartite(std::istream& in) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  std::string line;
  std::size_t line_no = 0;
  while (next_payload(in, line, line_no)) {
    std::istringstream tokens(line);
    std::uint64_t l = 0, r = 0;
    // Extra columns (weights, timestamps in KONECT bodies) are ignored.
    if (!parse_count(tokens, l) || !parse_count(tokens, r) || l == 0 || r == 0)
      throw MalformedLine(line_no, "expected \"left right\" with positive 1-based ids");
    pairs.emplace_back(l, r);
  }
  return pairs;
}

Hypergraph convert_bipartite(
    const std::vector<std::pair<std::uint64_t, std::uint64_t>>& pairs) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> clean(pairs);
  std::sort(clean.begin(), clean.end());
  clean.erase(std::unique(clean.begin(), clean.end()), clean.end());
  if (clean.empty()) throw InputError("bipartite edge list is empty");

  std::vector<std::uint64_t> lefts;
  lefts.reserve(clean.size());
  for (const auto& [l, r] : clean) lefts.push_back(l);
  std::sort(lefts.begin(), lefts.end());
  lefts.erase(std::unique(lefts.begin(), lefts.end()), lefts.end());
  std::map<std::uint64_t, VertexId> id_of;
  for (std::size_t i = 0; i < lefts.size(); ++i) id_of[lefts[i]] = static_cast<VertexId>(i);

  std::map<std::uint64_t, std::vector<VertexId>> group;  // right id -> members
  for (const auto& [l, r] : clean) group[r].push_back(id_of[l]);

  std::vector<Hyperedge> edges;
  edges.reserve(group.size());
  for (auto& [r, members] : group) edges.push_back({1.0, std::move(members)});
  return Hypergraph::build(lefts.size(), std::move(edges));
}

Hypergraph convert_bipartite(std::istream& in) { return convert_bipartite(parse_bipartite(in)); }

}  // namespace hyperppr
