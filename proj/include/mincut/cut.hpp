#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mincut/graph.hpp"
#include "mincut/tree.hpp"

namespace mincut {

/// side[v] != 0 marks v as belonging to the side.
using VertexMask = std::vector<std::uint8_t>;

struct CutResult {
  Weight value = 0;
  std::optional<TreeEdgePair> certificate;
  std::optional<VertexMask> partition;
};

/// Weight of edges with exactly one endpoint in `side`. Throws GraphError
/// (kMalformed) when the side is empty or covers every vertex.
Weight cut_of_partition(const WeightedGraph& g, const VertexMask& side);

/// Same sum without the proper-subset check; side holds 0/1 labels.
Weight crossing_weight(const WeightedGraph& g, std::span<const std::int32_t> side);

/// Total weight of edges joining disjoint vertex sets a and b.
Weight cross_weight(const WeightedGraph& g, const VertexMask& a, const VertexMask& b);

/// deg(u↓) for Single, deg(u↓)+deg(v↓)-2C(u↓,v↓) for Orthogonal and
/// deg(u↓)+deg(v↓)-2C(v↓,V-u↓) for Nested, each term summed directly.
Weight pair_cut_value(const WeightedGraph& g, const RootedSpanTree& t, const TreeEdgePair& p);

VertexMask reconstruct_partition(const RootedSpanTree& t, const TreeEdgePair& p);
VertexMask subtree_mask(const RootedSpanTree& t, Vertex v);

}  // namespace mincut
