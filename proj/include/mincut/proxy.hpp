#pragma once

// Proxy graphs H used by the candidate filters. H is built by peeling
// maximal spanning forests off the remaining graph and keeping their edges
// at full weight, so it is a subgraph of G that grows towards G as more
// forests are peeled.

#include <cstdint>
#include <random>

#include "mincut/graph.hpp"
#include "mincut/query.hpp"
#include "mincut/stream.hpp"

namespace mincut {

struct ProxyOptions {
  double epsilon = 0.01;
  /// Forests peeled: ceil(forest_factor * log2(n) / epsilon^2).
  double forest_factor = 1.0;
  /// Forests sketched per stream pass.
  std::size_t sketch_batch = 8;
  int sketch_repetitions = 2;
};

std::size_t forest_cap(Vertex n, const ProxyOptions& options);

/// In-memory peeling, forests taken greedily in edge-id order.
WeightedGraph build_proxy_direct(const WeightedGraph& g, const ProxyOptions& options);

/// Boruvka rounds driven by recover_crossing_edge on the remaining graph.
WeightedGraph build_proxy_oracle(CutOracle& o, const ProxyOptions& options, std::mt19937_64& rng);

/// Boruvka over vertex sketches. Each pass sketches a batch of forests with
/// one copy per Boruvka round; edges already peeled are subtracted before a
/// forest is grown. The resulting edges stay tracked as resident words.
WeightedGraph build_proxy_stream(StreamHarness& h, const ProxyOptions& options, std::uint64_t seed);

}  // namespace mincut
