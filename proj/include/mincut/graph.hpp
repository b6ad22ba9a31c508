#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mincut/kernels.hpp"
#include "mincut/weight.hpp"

namespace mincut {

enum class GraphErrorCode {
  kIo,
  kMalformed,
  kVertexOutOfRange,
  kSelfLoop,
  kWeightOverflow,
  kDisconnected,
  kTooFewVertices,
  kNotSpanningTree,
  kTreeCycle,
  kEdgeAbsent,
};

const char* to_string(GraphErrorCode code);

class GraphError : public std::runtime_error {
 public:
  GraphError(GraphErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  GraphErrorCode code() const noexcept { return code_; }

 private:
  GraphErrorCode code_;
};

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  std::uint64_t w = 0;
};

/// Undirected multigraph with parallel edges merged by summing weights.
/// Stored edges satisfy u < v and are sorted lexicographically, so edge ids
/// are a deterministic function of the edge set.
class WeightedGraph {
 public:
  enum class Connectivity { kRequire, kAllow };

  WeightedGraph() = default;

  /// Validates and merges `edges`. Throws GraphError on self-loops,
  /// out-of-range endpoints, merged weights above 2^32, and (when required)
  /// disconnection. Zero-weight edges are dropped.
  static WeightedGraph from_edges(Vertex n, std::span<const Edge> edges,
                                  Connectivity connectivity = Connectivity::kRequire);

  Vertex n() const { return n_; }
  EdgeId m() const { return static_cast<EdgeId>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId id) const { return edges_[static_cast<std::size_t>(id)]; }

  struct Incidence {
    Vertex to;
    EdgeId edge;
  };
  std::span<const Incidence> neighbors(Vertex v) const {
    const auto b = offsets_[static_cast<std::size_t>(v)];
    const auto e = offsets_[static_cast<std::size_t>(v) + 1];
    return {adjacency_.data() + b, adjacency_.data() + e};
  }

  std::optional<EdgeId> find_edge(Vertex a, Vertex b) const;
  Weight weighted_degree(Vertex v) const;
  Weight total_weight() const;
  bool connected() const;

  kernels::EdgeArrays arrays() const { return {soa_u_, soa_v_, soa_w_}; }

 private:
  Vertex n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<Incidence> adjacency_;
  std::vector<std::int32_t> soa_u_, soa_v_;
  std::vector<std::uint64_t> soa_w_;
};

bool is_connected(Vertex n, std::span<const Edge> edges);

enum class InputFormat { kEdgeList, kDimacs };

/// Parses an edge-list document ("p <n> <m>" header, then "u v w" lines) or a
/// DIMACS document ("p <kind> <n> <m>", "a u v w" with 1-based ids).
WeightedGraph load_graph(std::string_view text, InputFormat format = InputFormat::kEdgeList);
WeightedGraph load_graph_file(const std::filesystem::path& path, InputFormat format = InputFormat::kEdgeList);

/// Serializes in the edge-list format accepted by load_graph.
std::string to_edge_list(const WeightedGraph& g);

}  // namespace mincut
