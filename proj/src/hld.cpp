#include "mincut/hld.hpp"

#include <algorithm>
#include <stdexcept>

namespace mincut {

PathDecomposition::PathDecomposition(const RootedSpanTree& t) : tree_(&t) {
  const auto n = static_cast<std::size_t>(t.n());
  heavy_.assign(n, -1);
  path_of_.assign(n, -1);
  index_.assign(n, -1);
  for (Vertex v = 0; v < t.n(); ++v) {
    Vertex best = -1;
    for (Vertex c : t.children(v)) {  // ascending ids, so ties keep the smaller one
      if (best < 0 || t.subtree_size(c) > t.subtree_size(best)) best = c;
    }
    heavy_[static_cast<std::size_t>(v)] = best;
  }
  // Pre-order walk; a path starts at every light edge and at the root's heavy edge.
  std::vector<Vertex> stack{t.root()};
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    const auto kids = t.children(v);
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
    if (v == t.root()) continue;
    const Vertex p = t.parent(v);
    if (p != t.root() && heavy_[static_cast<std::size_t>(p)] == v) continue;  // continues p's path
    std::vector<Vertex> path;
    for (Vertex x = v; x >= 0; x = heavy_[static_cast<std::size_t>(x)]) {
      path_of_[static_cast<std::size_t>(x)] = static_cast<int>(paths_.size());
      index_[static_cast<std::size_t>(x)] = static_cast<int>(path.size());
      path.push_back(x);
    }
    paths_.push_back(std::move(path));
  }
}

std::vector<PathHit> PathDecomposition::top_edges_on_root_path(Vertex v) const {
  return v == tree_->root() ? std::vector<PathHit>{} : top_edge_below(tree_->root(), v);
}

std::vector<PathHit> PathDecomposition::top_edge_below(Vertex u, Vertex v) const {
  const auto& t = *tree_;
  if (u == v || !t.is_ancestor(u, v)) throw std::invalid_argument("top_edge_below needs a proper descendant");
  std::vector<PathHit> hits;
  Vertex x = v;
  while (x != u) {
    const int id = path_of(x);
    const Vertex head = top_edge(id);
    if (t.depth(t.parent(head)) < t.depth(u)) {
      // The path runs through u; its first edge below u is u's heavy edge.
      hits.push_back({heavy_[static_cast<std::size_t>(u)], id});
      break;
    }
    hits.push_back({head, id});
    x = t.parent(head);
  }
  std::reverse(hits.begin(), hits.end());
  return hits;
}

}  // namespace mincut
