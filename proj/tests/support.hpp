#pragma once

// Shared fixtures for the test binaries: the five-vertex reference graph,
// seeded random graph families and a doctest printer for 128-bit weights.

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "doctest.h"
#include "mincut/cut.hpp"
#include "mincut/graph.hpp"
#include "mincut/tree.hpp"

namespace doctest {
template <>
struct StringMaker<__int128> {
  static String convert(__int128 value) { return mincut::to_string(value).c_str(); }
};
template <>
struct StringMaker<mincut::TreeEdgePair> {
  static String convert(const mincut::TreeEdgePair& p) { return mincut::describe(p).c_str(); }
};
}  // namespace doctest

namespace testing {

using mincut::Edge;
using mincut::EdgeId;
using mincut::Vertex;
using mincut::Weight;
using mincut::WeightedGraph;

// Tree (0,1),(1,2),(0,3),(3,4) with unit weights plus chords (2,4,4), (1,3,2).
inline WeightedGraph gstar() {
  const std::vector<Edge> edges{{0, 1, 1}, {1, 2, 1}, {0, 3, 1}, {3, 4, 1}, {2, 4, 4}, {1, 3, 2}};
  return WeightedGraph::from_edges(5, edges);
}

inline mincut::RootedSpanTree gstar_tree(const WeightedGraph& g) {
  const std::vector<std::pair<Vertex, Vertex>> tree{{0, 1}, {1, 2}, {0, 3}, {3, 4}};
  return mincut::build_rooted_tree(g, tree, 0);
}

/// Random spanning tree plus `extra` random chords; weights uniform in [1, wmax].
inline WeightedGraph random_graph(Vertex n, int extra, std::uint64_t wmax, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  std::uniform_int_distribution<std::uint64_t> weight(1, wmax);
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  for (Vertex i = 1; i < n; ++i) {
    std::uniform_int_distribution<Vertex> pick(0, i - 1);
    edges.push_back({perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(pick(rng))], weight(rng)});
  }
  if (n >= 2) {
    std::uniform_int_distribution<Vertex> any(0, n - 1);
    for (int k = 0; k < extra; ++k) {
      const Vertex a = any(rng);
      const Vertex b = any(rng);
      if (a != b) edges.push_back({a, b, weight(rng)});
    }
  }
  return WeightedGraph::from_edges(n, edges);
}

/// Uniformly weighted random Kruskal over the graph's edges.
inline std::vector<EdgeId> random_spanning_tree(const WeightedGraph& g, std::mt19937_64& rng) {
  std::vector<EdgeId> ids(static_cast<std::size_t>(g.m()));
  std::iota(ids.begin(), ids.end(), 0);
  std::shuffle(ids.begin(), ids.end(), rng);
  std::vector<Vertex> parent(static_cast<std::size_t>(g.n()));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Vertex x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    }
    return x;
  };
  std::vector<EdgeId> tree;
  for (EdgeId id : ids) {
    const Vertex a = find(g.edge(id).u);
    const Vertex b = find(g.edge(id).v);
    if (a != b) {
      parent[static_cast<std::size_t>(a)] = b;
      tree.push_back(id);
    }
  }
  return tree;
}

/// Random labelled tree on n vertices as a graph whose edge set is the tree.
inline WeightedGraph random_tree_graph(Vertex n, std::mt19937_64& rng) {
  return random_graph(n, 0, 1, rng);
}

inline mincut::VertexMask mask_of(Vertex n, std::initializer_list<Vertex> members) {
  mincut::VertexMask mask(static_cast<std::size_t>(n), 0);
  for (Vertex v : members) mask[static_cast<std::size_t>(v)] = 1;
  return mask;
}

}  // namespace testing
