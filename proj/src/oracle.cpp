#include "mincut/oracle.hpp"

#include <bit>
#include <limits>
#include <tuple>

namespace mincut {

namespace {

CutResult exhaustive_min_cut(const WeightedGraph& g) {
  const Vertex n = g.n();
  const auto nn = static_cast<std::size_t>(n);
  // Vertex 0 stays outside; Gray code over vertices 1..n-1 toggles one vertex per step.
  std::vector<std::uint8_t> side(nn, 0);
  Weight current = 0;
  Weight best = -1;
  std::uint64_t best_code = 0;
  const std::uint64_t limit = std::uint64_t{1} << (n - 1);
  for (std::uint64_t i = 1; i < limit; ++i) {
    const auto v = static_cast<Vertex>(std::countr_zero(i) + 1);
    const auto vi = static_cast<std::size_t>(v);
    for (const auto& inc : g.neighbors(v)) {
      const Weight w = g.edge(inc.edge).w;
      current += side[static_cast<std::size_t>(inc.to)] == side[vi] ? w : -w;
    }
    side[vi] ^= 1;
    if (best < 0 || current < best) {
      best = current;
      best_code = i ^ (i >> 1);
    }
  }
  CutResult result;
  result.value = best;
  VertexMask mask(nn, 0);
  for (Vertex v = 1; v < n; ++v) mask[static_cast<std::size_t>(v)] = (best_code >> (v - 1)) & 1;
  result.partition = std::move(mask);
  return result;
}

CutResult stoer_wagner(const WeightedGraph& g) {
  const auto n = static_cast<std::size_t>(g.n());
  std::vector<std::vector<Weight>> w(n, std::vector<Weight>(n, 0));
  for (const auto& e : g.edges()) {
    w[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] += e.w;
    w[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] += e.w;
  }
  std::vector<std::vector<Vertex>> members(n);
  for (std::size_t v = 0; v < n; ++v) members[v] = {static_cast<Vertex>(v)};
  std::vector<std::size_t> alive(n);
  for (std::size_t v = 0; v < n; ++v) alive[v] = v;

  Weight best = -1;
  std::vector<Vertex> best_side;
  std::vector<Weight> key(n);
  std::vector<char> added(n);
  while (alive.size() > 1) {
    for (auto v : alive) key[v] = 0, added[v] = 0;
    std::size_t prev = alive[0];
    std::size_t last = alive[0];
    for (std::size_t step = 0; step < alive.size(); ++step) {
      std::size_t pick = n;
      for (auto v : alive) {
        if (!added[v] && (pick == n || key[v] > key[pick])) pick = v;
      }
      added[pick] = 1;
      prev = last;
      last = pick;
      if (step + 1 == alive.size()) {
        if (best < 0 || key[pick] < best) {
          best = key[pick];
          best_side = members[pick];
        }
      }
      for (auto v : alive) {
        if (!added[v]) key[v] += w[pick][v];
      }
    }
    // Merge last into prev.
    for (auto v : alive) {
      w[prev][v] += w[last][v];
      w[v][prev] = w[prev][v];
    }
    w[prev][prev] = 0;
    members[prev].insert(members[prev].end(), members[last].begin(), members[last].end());
    std::erase(alive, last);
  }
  CutResult result;
  result.value = best;
  VertexMask mask(n, 0);
  for (Vertex v : best_side) mask[static_cast<std::size_t>(v)] = 1;
  result.partition = std::move(mask);
  return result;
}

}  // namespace

CutResult oracle_min_cut(const WeightedGraph& g, OracleMethod method) {
  if (g.n() < 2) throw GraphError(GraphErrorCode::kTooFewVertices, "a cut needs at least two vertices");
  if (!g.connected()) throw GraphError(GraphErrorCode::kDisconnected, "graph is disconnected");
  if (method == OracleMethod::kExhaustive && g.n() > kExhaustiveLimit) {
    throw GraphError(GraphErrorCode::kMalformed, "exhaustive oracle limited to " +
                                                     std::to_string(kExhaustiveLimit) + " vertices");
  }
  if (method == OracleMethod::kExhaustive || (method == OracleMethod::kAuto && g.n() <= kExhaustiveLimit)) {
    return exhaustive_min_cut(g);
  }
  return stoer_wagner(g);
}

CutResult oracle_2respect_min(const WeightedGraph& g, const RootedSpanTree& t) {
  if (g.n() < 2) throw GraphError(GraphErrorCode::kTooFewVertices, "a cut needs at least two vertices");
  const auto children = t.edge_children();
  std::vector<std::int32_t> labels(static_cast<std::size_t>(g.n()));
  auto value_of = [&](const TreeEdgePair& p) {
    const VertexMask mask = reconstruct_partition(t, p);
    for (std::size_t v = 0; v < mask.size(); ++v) labels[v] = mask[v];
    return crossing_weight(g, labels);
  };

  CutResult best;
  best.value = -1;
  auto offer = [&](const TreeEdgePair& p) {
    const Weight value = value_of(p);
    if (best.value < 0 || value < best.value ||
        (value == best.value && tie_key(t, p) < tie_key(t, *best.certificate))) {
      best.value = value;
      best.certificate = p;
    }
  };
  for (std::size_t i = 0; i < children.size(); ++i) {
    offer(TreeEdgePair::single(children[i]));
    for (std::size_t j = i + 1; j < children.size(); ++j) offer(make_pair(t, children[i], children[j]));
  }
  best.partition = reconstruct_partition(t, *best.certificate);
  return best;
}

}  // namespace mincut
