#include "mincut/cut.hpp"

#include <algorithm>

namespace mincut {

Weight crossing_weight(const WeightedGraph& g, std::span<const std::int32_t> side) {
  return kernels::crossing_weight(g.arrays(), side);
}

Weight cut_of_partition(const WeightedGraph& g, const VertexMask& side) {
  if (side.size() != static_cast<std::size_t>(g.n())) {
    throw GraphError(GraphErrorCode::kMalformed, "partition size does not match vertex count");
  }
  const auto members = std::count_if(side.begin(), side.end(), [](std::uint8_t s) { return s != 0; });
  if (members == 0 || members == g.n()) {
    throw GraphError(GraphErrorCode::kMalformed, "partition side must be a nonempty proper subset");
  }
  std::vector<std::int32_t> labels(side.size());
  std::transform(side.begin(), side.end(), labels.begin(), [](std::uint8_t s) { return s != 0 ? 1 : 0; });
  return crossing_weight(g, labels);
}

Weight cross_weight(const WeightedGraph& g, const VertexMask& a, const VertexMask& b) {
  Weight total = 0;
  for (const auto& e : g.edges()) {
    const auto u = static_cast<std::size_t>(e.u);
    const auto v = static_cast<std::size_t>(e.v);
    if ((a[u] && b[v]) || (a[v] && b[u])) total += e.w;
  }
  return total;
}

namespace {

// Scans edges once per term, classifying endpoints by po range.
Weight subtree_degree(const WeightedGraph& g, const RootedSpanTree& t, Vertex u) {
  Weight total = 0;
  for (const auto& e : g.edges()) {
    if (t.is_ancestor(u, e.u) != t.is_ancestor(u, e.v)) total += e.w;
  }
  return total;
}

}  // namespace

Weight pair_cut_value(const WeightedGraph& g, const RootedSpanTree& t, const TreeEdgePair& p) {
  check_pair(t, p);
  const Vertex u = p.first;
  const Vertex v = p.second;
  switch (p.kind) {
    case TreeEdgePair::Kind::kSingle:
      return subtree_degree(g, t, u);
    case TreeEdgePair::Kind::kOrthogonal: {
      Weight c = 0;
      for (const auto& e : g.edges()) {
        if ((t.is_ancestor(u, e.u) && t.is_ancestor(v, e.v)) || (t.is_ancestor(u, e.v) && t.is_ancestor(v, e.u))) {
          c += e.w;
        }
      }
      return subtree_degree(g, t, u) + subtree_degree(g, t, v) - 2 * c;
    }
    case TreeEdgePair::Kind::kNested: {
      Weight c = 0;
      for (const auto& e : g.edges()) {
        if ((t.is_ancestor(v, e.u) && !t.is_ancestor(u, e.v)) || (t.is_ancestor(v, e.v) && !t.is_ancestor(u, e.u))) {
          c += e.w;
        }
      }
      return subtree_degree(g, t, u) + subtree_degree(g, t, v) - 2 * c;
    }
  }
  return 0;
}

VertexMask subtree_mask(const RootedSpanTree& t, Vertex v) {
  VertexMask mask(static_cast<std::size_t>(t.n()), 0);
  for (Vertex i = t.lo(v); i <= t.hi(v); ++i) mask[static_cast<std::size_t>(t.at_po(i))] = 1;
  return mask;
}

VertexMask reconstruct_partition(const RootedSpanTree& t, const TreeEdgePair& p) {
  check_pair(t, p);
  VertexMask mask = subtree_mask(t, p.first);
  if (p.kind == TreeEdgePair::Kind::kSingle) return mask;
  const std::uint8_t fill = p.kind == TreeEdgePair::Kind::kOrthogonal ? 1 : 0;
  for (Vertex i = t.lo(p.second); i <= t.hi(p.second); ++i) mask[static_cast<std::size_t>(t.at_po(i))] = fill;
  return mask;
}

}  // namespace mincut
