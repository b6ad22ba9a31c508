#include "mincut/tree.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace mincut {

RootedSpanTree build_rooted_tree(const WeightedGraph& g, std::span<const std::pair<Vertex, Vertex>> tree_edges,
                                 Vertex root) {
  const Vertex n = g.n();
  if (n < 1) throw GraphError(GraphErrorCode::kTooFewVertices, "tree needs at least one vertex");
  if (root < 0 || root >= n) throw GraphError(GraphErrorCode::kVertexOutOfRange, "root outside vertex range");
  if (static_cast<Vertex>(tree_edges.size()) != n - 1) {
    throw GraphError(GraphErrorCode::kNotSpanningTree,
                     "expected " + std::to_string(n - 1) + " tree edges, got " + std::to_string(tree_edges.size()));
  }
  const auto nn = static_cast<std::size_t>(n);

  std::vector<std::size_t> dsu(nn);
  std::iota(dsu.begin(), dsu.end(), 0);
  auto find = [&](std::size_t x) {
    while (dsu[x] != x) x = dsu[x] = dsu[dsu[x]];
    return x;
  };
  std::vector<std::vector<std::pair<Vertex, EdgeId>>> adj(nn);
  for (const auto& [a, b] : tree_edges) {
    const auto id = g.find_edge(a, b);
    if (a < 0 || b < 0 || a >= n || b >= n || !id) {
      throw GraphError(GraphErrorCode::kEdgeAbsent,
                       "tree edge (" + std::to_string(a) + "," + std::to_string(b) + ") is not a graph edge");
    }
    const auto ra = find(static_cast<std::size_t>(a));
    const auto rb = find(static_cast<std::size_t>(b));
    if (ra == rb) throw GraphError(GraphErrorCode::kTreeCycle, "tree edges contain a cycle");
    dsu[ra] = rb;
    adj[static_cast<std::size_t>(a)].push_back({b, *id});
    adj[static_cast<std::size_t>(b)].push_back({a, *id});
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());

  RootedSpanTree t;
  t.root_ = root;
  t.parent_.assign(nn, -1);
  t.parent_edge_.assign(nn, -1);
  t.po_.assign(nn, -1);
  t.lo_.assign(nn, -1);
  t.depth_.assign(nn, 0);
  t.order_.assign(nn, -1);

  // Iterative DFS; children in ascending vertex id.
  std::vector<std::size_t> cursor(nn, 0);
  std::vector<Vertex> stack{root};
  Vertex next_po = 0;
  std::vector<char> seen(nn, 0);
  seen[static_cast<std::size_t>(root)] = 1;
  t.lo_[static_cast<std::size_t>(root)] = 0;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    const auto vi = static_cast<std::size_t>(v);
    if (cursor[vi] < adj[vi].size()) {
      const auto [w, id] = adj[vi][cursor[vi]++];
      const auto wi = static_cast<std::size_t>(w);
      if (seen[wi]) continue;
      seen[wi] = 1;
      t.parent_[wi] = v;
      t.parent_edge_[wi] = id;
      t.depth_[wi] = t.depth_[vi] + 1;
      t.lo_[wi] = next_po;
      stack.push_back(w);
    } else {
      t.po_[vi] = next_po;
      t.order_[static_cast<std::size_t>(next_po)] = v;
      ++next_po;
      stack.pop_back();
    }
  }
  if (next_po != n) throw GraphError(GraphErrorCode::kNotSpanningTree, "tree edges do not span the graph");

  t.child_offset_.assign(nn + 1, 0);
  for (std::size_t v = 0; v < nn; ++v) {
    if (t.parent_[v] >= 0) ++t.child_offset_[static_cast<std::size_t>(t.parent_[v]) + 1];
  }
  for (std::size_t v = 0; v < nn; ++v) t.child_offset_[v + 1] += t.child_offset_[v];
  t.child_list_.resize(nn > 0 ? nn - 1 : 0);
  std::vector<std::size_t> fill(t.child_offset_.begin(), t.child_offset_.end() - 1);
  for (std::size_t v = 0; v < nn; ++v) {
    if (t.parent_[v] >= 0) t.child_list_[fill[static_cast<std::size_t>(t.parent_[v])]++] = static_cast<Vertex>(v);
  }

  std::size_t levels = 1;
  while ((std::size_t{1} << levels) < nn) ++levels;
  t.up_.assign(levels, std::vector<Vertex>(nn));
  for (std::size_t v = 0; v < nn; ++v) t.up_[0][v] = t.parent_[v] >= 0 ? t.parent_[v] : static_cast<Vertex>(v);
  for (std::size_t k = 1; k < levels; ++k) {
    for (std::size_t v = 0; v < nn; ++v) t.up_[k][v] = t.up_[k - 1][static_cast<std::size_t>(t.up_[k - 1][v])];
  }
  return t;
}

RootedSpanTree build_rooted_tree(const WeightedGraph& g, std::span<const EdgeId> tree_edges, Vertex root) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(tree_edges.size());
  for (EdgeId id : tree_edges) {
    if (id < 0 || id >= g.m()) throw GraphError(GraphErrorCode::kEdgeAbsent, "edge id out of range");
    pairs.emplace_back(g.edge(id).u, g.edge(id).v);
  }
  return build_rooted_tree(g, pairs, root);
}

Vertex RootedSpanTree::lca(Vertex a, Vertex b) const {
  if (is_ancestor(a, b)) return a;
  if (is_ancestor(b, a)) return b;
  for (std::size_t k = up_.size(); k-- > 0;) {
    const Vertex x = up_[k][idx(a)];
    if (!is_ancestor(x, b)) a = x;
  }
  return parent(a);
}

std::vector<Vertex> RootedSpanTree::edge_children() const {
  std::vector<Vertex> out;
  out.reserve(parent_.size());
  for (Vertex v = 0; v < n(); ++v) {
    if (v != root_) out.push_back(v);
  }
  return out;
}

TreeEdgePair make_pair(const RootedSpanTree& t, Vertex a, Vertex b) {
  if (a == b) return TreeEdgePair::single(a);
  if (t.is_ancestor(a, b)) return TreeEdgePair::nested(a, b);
  if (t.is_ancestor(b, a)) return TreeEdgePair::nested(b, a);
  return t.po(a) < t.po(b) ? TreeEdgePair::orthogonal(a, b) : TreeEdgePair::orthogonal(b, a);
}

void check_pair(const RootedSpanTree& t, const TreeEdgePair& p) {
  auto valid_edge = [&](Vertex v) { return v >= 0 && v < t.n() && v != t.root(); };
  bool ok = valid_edge(p.first);
  switch (p.kind) {
    case TreeEdgePair::Kind::kSingle:
      break;
    case TreeEdgePair::Kind::kOrthogonal:
      ok = ok && valid_edge(p.second) && !t.is_ancestor(p.first, p.second) && !t.is_ancestor(p.second, p.first);
      break;
    case TreeEdgePair::Kind::kNested:
      ok = ok && valid_edge(p.second) && p.first != p.second && t.is_ancestor(p.first, p.second);
      break;
  }
  if (!ok) throw GraphError(GraphErrorCode::kMalformed, "tree edge pair " + describe(p) + " does not match the tree");
}

std::tuple<int, Vertex, Vertex> tie_key(const RootedSpanTree& t, const TreeEdgePair& p) {
  return {static_cast<int>(p.kind), t.po(p.first), p.second >= 0 ? t.po(p.second) : -1};
}

std::string describe(const TreeEdgePair& p) {
  switch (p.kind) {
    case TreeEdgePair::Kind::kSingle: return "Single(" + std::to_string(p.first) + ")";
    case TreeEdgePair::Kind::kOrthogonal:
      return "Orthogonal(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
    case TreeEdgePair::Kind::kNested:
      return "Nested(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
  }
  return "?";
}

}  // namespace mincut
