#pragma once

#include <span>
#include <vector>

#include "mincut/tree.hpp"

namespace mincut {

struct PathHit {
  Vertex edge;  // child vertex of the tree edge
  int path;
};

/// Heavy-light decomposition of the tree edges into vertical paths. Each path
/// lists its edges (by child vertex) from the root-most edge downward.
class PathDecomposition {
 public:
  PathDecomposition() = default;
  explicit PathDecomposition(const RootedSpanTree& t);

  int path_count() const { return static_cast<int>(paths_.size()); }
  std::span<const Vertex> path(int id) const { return paths_[static_cast<std::size_t>(id)]; }
  int path_of(Vertex edge) const { return path_of_[static_cast<std::size_t>(edge)]; }
  int index_in_path(Vertex edge) const { return index_[static_cast<std::size_t>(edge)]; }
  Vertex top_edge(int id) const { return paths_[static_cast<std::size_t>(id)].front(); }
  /// Heavy child of v, or -1 for leaves.
  Vertex heavy_child(Vertex v) const { return heavy_[static_cast<std::size_t>(v)]; }

  /// For each path meeting the root-to-v tree path, the root-most shared edge,
  /// ordered from the root toward v. Empty for the root.
  std::vector<PathHit> top_edges_on_root_path(Vertex v) const;
  /// Same, restricted to the tree path from u down to its descendant v.
  std::vector<PathHit> top_edge_below(Vertex u, Vertex v) const;

 private:
  const RootedSpanTree* tree_ = nullptr;
  std::vector<std::vector<Vertex>> paths_;
  std::vector<int> path_of_;
  std::vector<int> index_;
  std::vector<Vertex> heavy_;
};

inline PathDecomposition decompose(const RootedSpanTree& t) { return PathDecomposition(t); }

}  // namespace mincut
