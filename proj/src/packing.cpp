#include "mincut/packing.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "dsu.hpp"

namespace mincut {

TreePacking greedy_pack(const WeightedGraph& host, std::size_t k) {
  if (!host.connected()) throw GraphError(GraphErrorCode::kDisconnected, "cannot pack trees into a disconnected graph");
  const auto m = static_cast<std::size_t>(host.m());
  const auto n = static_cast<std::size_t>(host.n());
  TreePacking packing;
  packing.loads.assign(m, 0);
  std::vector<EdgeId> order(m);
  for (std::size_t t = 0; t < k; ++t) {
    std::iota(order.begin(), order.end(), 0);
    // load_a / w_a < load_b / w_b, compared exactly.
    std::sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
      const auto la = static_cast<unsigned __int128>(packing.loads[static_cast<std::size_t>(a)]) * host.edge(b).w;
      const auto lb = static_cast<unsigned __int128>(packing.loads[static_cast<std::size_t>(b)]) * host.edge(a).w;
      return la != lb ? la < lb : a < b;
    });
    Dsu dsu(n);
    std::vector<EdgeId> tree;
    for (EdgeId id : order) {
      const auto& e = host.edge(id);
      if (dsu.unite(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v))) tree.push_back(id);
      if (tree.size() + 1 == n) break;
    }
    for (EdgeId id : tree) ++packing.loads[static_cast<std::size_t>(id)];
    std::sort(tree.begin(), tree.end());
    packing.trees.push_back(std::move(tree));
  }
  return packing;
}

Skeleton build_skeleton(const WeightedGraph& host, double eps, double lambda_guess, std::mt19937_64& rng, double c1) {
  if (lambda_guess < 1) throw std::invalid_argument("lambda guess must be at least 1");
  if (!(eps > 0)) throw std::invalid_argument("epsilon must be positive");
  const double n = static_cast<double>(host.n());
  double p = std::min(1.0, c1 * std::log(n) / (eps * eps * lambda_guess));
  const int retries = p >= 1 ? 0 : static_cast<int>(std::ceil(std::log2(1 / p)));
  for (int attempt = 0; attempt <= retries; ++attempt, p = std::min(1.0, 2 * p)) {
    if (p >= 1) {
      if (!host.connected()) break;
      return {host, 1.0, lambda_guess};
    }
    std::vector<Edge> kept;
    for (const auto& e : host.edges()) {
      std::binomial_distribution<std::uint64_t> units(e.w, p);
      if (const auto w = units(rng)) kept.push_back({e.u, e.v, w});
    }
    auto graph = WeightedGraph::from_edges(host.n(), kept, WeightedGraph::Connectivity::kAllow);
    if (graph.connected()) return {std::move(graph), p, lambda_guess};
  }
  throw GraphError(GraphErrorCode::kDisconnected, "skeleton stayed disconnected after all retries");
}

std::vector<double> lambda_schedule(const WeightedGraph& host) {
  if (host.n() < 2) throw GraphError(GraphErrorCode::kTooFewVertices, "a cut needs at least two vertices");
  Weight u = host.weighted_degree(0);
  for (Vertex v = 1; v < host.n(); ++v) u = std::min(u, host.weighted_degree(v));
  const double top = static_cast<double>(u);
  const double floor = std::max(1.0, top / (2.0 * static_cast<double>(host.n())));
  const auto limit = static_cast<std::size_t>(std::bit_width(static_cast<std::uint64_t>(2 * host.n() - 1)));
  std::vector<double> out;
  for (double g = top; g >= floor && out.size() < limit; g /= 2) out.push_back(g);
  if (out.empty()) out.push_back(1.0);
  return out;
}

}  // namespace mincut
