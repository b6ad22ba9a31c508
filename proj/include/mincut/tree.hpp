#pragma once

#include <compare>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "mincut/graph.hpp"

namespace mincut {

/// Rooted spanning tree with post-order numbering. Tree edges are named by
/// their child vertex; the subtree of v occupies po range [lo(v), hi(v)].
class RootedSpanTree {
 public:
  RootedSpanTree() = default;

  Vertex n() const { return static_cast<Vertex>(parent_.size()); }
  Vertex root() const { return root_; }
  Vertex parent(Vertex v) const { return parent_[idx(v)]; }
  /// Graph edge id joining v to its parent; -1 at the root.
  EdgeId parent_edge(Vertex v) const { return parent_edge_[idx(v)]; }
  Vertex po(Vertex v) const { return po_[idx(v)]; }
  Vertex at_po(Vertex index) const { return order_[idx(index)]; }
  Vertex lo(Vertex v) const { return lo_[idx(v)]; }
  Vertex hi(Vertex v) const { return po_[idx(v)]; }
  Vertex depth(Vertex v) const { return depth_[idx(v)]; }
  Vertex subtree_size(Vertex v) const { return hi(v) - lo(v) + 1; }
  std::span<const Vertex> children(Vertex v) const {
    return {child_list_.data() + child_offset_[idx(v)], child_list_.data() + child_offset_[idx(v) + 1]};
  }

  /// True when a is an ancestor of b or a == b.
  bool is_ancestor(Vertex a, Vertex b) const { return lo(a) <= po(b) && po(b) <= hi(a); }
  bool contains_po(Vertex v, Vertex index) const { return lo(v) <= index && index <= hi(v); }
  Vertex lca(Vertex a, Vertex b) const;

  /// Child vertices of all tree edges, in increasing vertex id.
  std::vector<Vertex> edge_children() const;

 private:
  friend RootedSpanTree build_rooted_tree(const WeightedGraph&, std::span<const std::pair<Vertex, Vertex>>, Vertex);
  static std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

  Vertex root_ = 0;
  std::vector<Vertex> parent_;
  std::vector<EdgeId> parent_edge_;
  std::vector<Vertex> po_, lo_, depth_, order_;
  std::vector<std::size_t> child_offset_;
  std::vector<Vertex> child_list_;
  std::vector<std::vector<Vertex>> up_;  // binary lifting table
};

/// Throws GraphError (kTreeCycle, kNotSpanningTree, kEdgeAbsent) on bad input.
RootedSpanTree build_rooted_tree(const WeightedGraph& g, std::span<const std::pair<Vertex, Vertex>> tree_edges,
                                 Vertex root = 0);
RootedSpanTree build_rooted_tree(const WeightedGraph& g, std::span<const EdgeId> tree_edges, Vertex root = 0);

/// One or two tree edges, each named by its child vertex.
struct TreeEdgePair {
  enum class Kind { kSingle = 0, kOrthogonal = 1, kNested = 2 };

  Kind kind = Kind::kSingle;
  Vertex first = -1;   // Single edge, orthogonal edge with smaller po, or nested upper
  Vertex second = -1;  // orthogonal edge with larger po or nested lower; -1 for Single

  static TreeEdgePair single(Vertex u) { return {Kind::kSingle, u, -1}; }
  static TreeEdgePair orthogonal(Vertex a, Vertex b) { return {Kind::kOrthogonal, a, b}; }
  static TreeEdgePair nested(Vertex upper, Vertex lower) { return {Kind::kNested, upper, lower}; }

  friend bool operator==(const TreeEdgePair&, const TreeEdgePair&) = default;
};

/// Builds the pair for two distinct non-root vertices, choosing the kind from
/// the subtree ranges and canonicalizing the order.
TreeEdgePair make_pair(const RootedSpanTree& t, Vertex a, Vertex b);

/// Throws GraphError(kMalformed) when the recorded kind disagrees with the ranges.
void check_pair(const RootedSpanTree& t, const TreeEdgePair& p);

/// Tie-break key: kind rank, then po of the first and second child.
std::tuple<int, Vertex, Vertex> tie_key(const RootedSpanTree& t, const TreeEdgePair& p);

std::string describe(const TreeEdgePair& p);

}  // namespace mincut
