#include "mincut/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>

#include "dsu.hpp"

namespace mincut {

const char* to_string(GraphErrorCode code) {
  switch (code) {
    case GraphErrorCode::kIo: return "io";
    case GraphErrorCode::kMalformed: return "malformed";
    case GraphErrorCode::kVertexOutOfRange: return "vertex-out-of-range";
    case GraphErrorCode::kSelfLoop: return "self-loop";
    case GraphErrorCode::kWeightOverflow: return "weight-overflow";
    case GraphErrorCode::kDisconnected: return "disconnected";
    case GraphErrorCode::kTooFewVertices: return "too-few-vertices";
    case GraphErrorCode::kNotSpanningTree: return "not-spanning-tree";
    case GraphErrorCode::kTreeCycle: return "tree-cycle";
    case GraphErrorCode::kEdgeAbsent: return "edge-absent";
  }
  return "unknown";
}

bool is_connected(Vertex n, std::span<const Edge> edges) {
  if (n <= 1) return true;
  Dsu dsu(static_cast<std::size_t>(n));
  Vertex components = n;
  for (const auto& e : edges) {
    if (e.w == 0) continue;
    if (dsu.unite(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v))) --components;
  }
  return components == 1;
}

WeightedGraph WeightedGraph::from_edges(Vertex n, std::span<const Edge> input, Connectivity connectivity) {
  if (n < 0) throw GraphError(GraphErrorCode::kMalformed, "negative vertex count");
  std::vector<Edge> edges;
  edges.reserve(input.size());
  for (const auto& e : input) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw GraphError(GraphErrorCode::kVertexOutOfRange,
                       "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") outside 0.." +
                           std::to_string(n - 1));
    }
    if (e.u == e.v) throw GraphError(GraphErrorCode::kSelfLoop, "self-loop at vertex " + std::to_string(e.u));
    if (e.w > kMaxEdgeWeight) throw GraphError(GraphErrorCode::kWeightOverflow, "edge weight exceeds 2^32");
    if (e.w == 0) continue;
    edges.push_back({std::min(e.u, e.v), std::max(e.u, e.v), e.w});
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  std::vector<Edge> merged;
  merged.reserve(edges.size());
  for (const auto& e : edges) {
    if (!merged.empty() && merged.back().u == e.u && merged.back().v == e.v) {
      merged.back().w += e.w;
      if (merged.back().w > kMaxEdgeWeight) {
        throw GraphError(GraphErrorCode::kWeightOverflow, "merged parallel edges exceed 2^32");
      }
    } else {
      merged.push_back(e);
    }
  }
  if (connectivity == Connectivity::kRequire && !is_connected(n, merged)) {
    throw GraphError(GraphErrorCode::kDisconnected, "graph is disconnected");
  }

  WeightedGraph g;
  g.n_ = n;
  g.edges_ = std::move(merged);
  const auto nn = static_cast<std::size_t>(n);
  std::vector<std::size_t> degree(nn + 1, 0);
  for (const auto& e : g.edges_) ++degree[static_cast<std::size_t>(e.u)], ++degree[static_cast<std::size_t>(e.v)];
  g.offsets_.assign(nn + 1, 0);
  for (std::size_t v = 0; v < nn; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  g.adjacency_.resize(g.offsets_[nn]);
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (EdgeId id = 0; id < g.m(); ++id) {
    const auto& e = g.edges_[static_cast<std::size_t>(id)];
    g.adjacency_[fill[static_cast<std::size_t>(e.u)]++] = {e.v, id};
    g.adjacency_[fill[static_cast<std::size_t>(e.v)]++] = {e.u, id};
  }
  g.soa_u_.reserve(g.edges_.size());
  g.soa_v_.reserve(g.edges_.size());
  g.soa_w_.reserve(g.edges_.size());
  for (const auto& e : g.edges_) {
    g.soa_u_.push_back(e.u);
    g.soa_v_.push_back(e.v);
    g.soa_w_.push_back(e.w);
  }
  return g;
}

std::optional<EdgeId> WeightedGraph::find_edge(Vertex a, Vertex b) const {
  if (a == b) return std::nullopt;
  const Edge key{std::min(a, b), std::max(a, b), 0};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key, [](const Edge& x, const Edge& y) {
    return x.u != y.u ? x.u < y.u : x.v < y.v;
  });
  if (it == edges_.end() || it->u != key.u || it->v != key.v) return std::nullopt;
  return static_cast<EdgeId>(it - edges_.begin());
}

Weight WeightedGraph::weighted_degree(Vertex v) const {
  Weight total = 0;
  for (const auto& inc : neighbors(v)) total += edge(inc.edge).w;
  return total;
}

Weight WeightedGraph::total_weight() const {
  Weight total = 0;
  for (const auto& e : edges_) total += e.w;
  return total;
}

bool WeightedGraph::connected() const { return is_connected(n_, edges_); }

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename T>
T parse_number(std::string_view token, std::size_t line_no) {
  T value{};
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec == std::errc::result_out_of_range) {
    throw GraphError(GraphErrorCode::kWeightOverflow, "line " + std::to_string(line_no) + ": number out of range");
  }
  if (ec != std::errc{} || ptr != end) {
    throw GraphError(GraphErrorCode::kMalformed,
                     "line " + std::to_string(line_no) + ": expected a number, got '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

WeightedGraph load_graph(std::string_view text, InputFormat format) {
  std::optional<std::int64_t> n;
  std::int64_t declared_m = 0;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    const auto tok = split_tokens(line);
    if (tok.empty() || tok[0][0] == 'c' || tok[0][0] == '#') continue;

    if (tok[0] == "p") {
      if (n) throw GraphError(GraphErrorCode::kMalformed, "line " + std::to_string(line_no) + ": duplicate header");
      // "p n m" (edge list) or "p <kind> n m" (DIMACS).
      if (tok.size() == 3) {
        n = parse_number<std::int64_t>(tok[1], line_no);
        declared_m = parse_number<std::int64_t>(tok[2], line_no);
      } else if (tok.size() == 4 && format == InputFormat::kDimacs) {
        n = parse_number<std::int64_t>(tok[2], line_no);
        declared_m = parse_number<std::int64_t>(tok[3], line_no);
      } else {
        throw GraphError(GraphErrorCode::kMalformed, "line " + std::to_string(line_no) + ": bad header");
      }
      if (*n < 0 || *n > (std::int64_t{1} << 30) || declared_m < 0) {
        throw GraphError(GraphErrorCode::kMalformed, "line " + std::to_string(line_no) + ": bad header counts");
      }
      continue;
    }
    if (!n) throw GraphError(GraphErrorCode::kMalformed, "line " + std::to_string(line_no) + ": edge before header");

    std::size_t first = 0;
    std::int64_t shift = 0;
    if (format == InputFormat::kDimacs) {
      if (tok[0] != "a" && tok[0] != "e") {
        throw GraphError(GraphErrorCode::kMalformed, "line " + std::to_string(line_no) + ": expected 'a u v w'");
      }
      first = 1;
      shift = 1;
    }
    if (tok.size() != first + 3) {
      throw GraphError(GraphErrorCode::kMalformed, "line " + std::to_string(line_no) + ": expected 'u v w'");
    }
    const auto u = parse_number<std::int64_t>(tok[first], line_no) - shift;
    const auto v = parse_number<std::int64_t>(tok[first + 1], line_no) - shift;
    const auto w = parse_number<std::uint64_t>(tok[first + 2], line_no);
    if (u < 0 || v < 0 || u >= *n || v >= *n) {
      throw GraphError(GraphErrorCode::kVertexOutOfRange, "line " + std::to_string(line_no) + ": vertex out of range");
    }
    if (w > kMaxEdgeWeight) {
      throw GraphError(GraphErrorCode::kWeightOverflow, "line " + std::to_string(line_no) + ": weight exceeds 2^32");
    }
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), w});
  }
  if (!n) throw GraphError(GraphErrorCode::kMalformed, "missing header line");
  if (static_cast<std::int64_t>(edges.size()) != declared_m) {
    throw GraphError(GraphErrorCode::kMalformed, "header declares " + std::to_string(declared_m) + " edges, found " +
                                                     std::to_string(edges.size()));
  }
  return WeightedGraph::from_edges(static_cast<Vertex>(*n), edges);
}

WeightedGraph load_graph_file(const std::filesystem::path& path, InputFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GraphError(GraphErrorCode::kIo, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw GraphError(GraphErrorCode::kIo, "read failure on " + path.string());
  return load_graph(buf.str(), format);
}

std::string to_edge_list(const WeightedGraph& g) {
  std::ostringstream out;
  out << "p " << g.n() << ' ' << g.m() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << ' ' << e.w << '\n';
  return out.str();
}

}  // namespace mincut
