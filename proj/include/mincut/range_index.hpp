#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "mincut/graph.hpp"
#include "mincut/tree.hpp"

namespace mincut {

/// An edge mapped into post-order coordinates, x < y.
struct EdgePoint {
  Vertex x = 0;
  Vertex y = 0;
  std::uint64_t w = 0;
  EdgeId id = -1;
};

/// Closed rectangle [x1, x2] x [y1, y2]; empty when x1 > x2 or y1 > y2.
struct Rect {
  Vertex x1, x2, y1, y2;
  bool empty() const { return x1 > x2 || y1 > y2; }
  bool contains(const EdgePoint& p) const { return x1 <= p.x && p.x <= x2 && y1 <= p.y && p.y <= y2; }
};

std::vector<EdgePoint> build_point_set(const WeightedGraph& g, const RootedSpanTree& t);
std::vector<EdgePoint> build_point_set(const WeightedGraph& g, const RootedSpanTree& t, std::span<const EdgeId> ids);

/// Static merge-sort tree over x with y-sorted point lists and prefix weight
/// sums per node. Queries cost O(log^2 m).
class WeightRangeIndex {
 public:
  WeightRangeIndex() = default;
  explicit WeightRangeIndex(std::span<const EdgePoint> points);

  std::size_t size() const { return xs_.size(); }
  Weight rect_weight(const Rect& r) const;
  std::size_t rect_count(const Rect& r) const;
  /// Appends every contained point to out.
  void report(const Rect& r, std::vector<EdgePoint>& out) const;

 private:
  template <typename Visit>
  void visit_nodes(const Rect& r, Visit&& visit) const;

  std::vector<Vertex> xs_;                        // sorted x of the leaves
  std::vector<std::vector<EdgePoint>> by_y_;      // per node, points sorted by y
  std::vector<std::vector<std::uint64_t>> sums_;  // per node, prefix weights
  std::size_t leaves_ = 0;
};

/// Level subsets S_0 ⊇ S_1 ⊇ ... ⊇ S_k (k = ceil(log2 m)), each point copied
/// to the next level with probability 1/2. All randomness is drawn when the
/// index is built; queries are deterministic functions of the levels.
class SampleRangeIndex {
 public:
  SampleRangeIndex() = default;
  SampleRangeIndex(std::span<const EdgePoint> points, std::uint64_t seed);

  std::size_t levels() const { return levels_.size(); }
  std::size_t level_size(std::size_t i) const { return levels_[i].size(); }

  /// Finds the highest level whose part of r holds at least k points (or
  /// level 0) and returns all points of r at that level.
  std::vector<EdgePoint> sample_rect(const Rect& r, std::size_t k) const;

 private:
  std::vector<WeightRangeIndex> levels_;
};

/// The two rectangles holding the edges with exactly one endpoint in v↓.
std::array<Rect, 2> deg_rects(const RootedSpanTree& t, Vertex v);

/// deg(v↓).
Weight deg_subtree(const WeightRangeIndex& idx, const RootedSpanTree& t, Vertex v);
/// C(u↓, v↓) for disjoint subtrees.
Weight cross_sub(const WeightRangeIndex& idx, const RootedSpanTree& t, Vertex u, Vertex v);
/// C(v↓, V - u↓) for v inside u↓.
Weight cross_nested(const WeightRangeIndex& idx, const RootedSpanTree& t, Vertex v, Vertex u);

}  // namespace mincut
