#pragma once

// Cut-query execution model: the input graph sits behind an oracle that only
// answers "what is the weight crossing this bipartition".

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "mincut/cost.hpp"

namespace mincut {

class CutOracle {
 public:
  explicit CutOracle(const WeightedGraph& hidden);

  Vertex n() const { return n_; }
  /// Weight crossing (side, V - side). Empty and full sides answer 0.
  /// Every call counts as one query.
  Weight cut(const VertexMask& side);
  std::uint64_t queries() const { return queries_; }

 private:
  const WeightedGraph& g_;
  Vertex n_;
  std::uint64_t queries_ = 0;
  std::vector<std::int32_t> buffer_;
};

/// C(A, B) for disjoint A, B from cut(A) + cut(B) - cut(A ∪ B), 3 queries.
Weight oracle_cross_weight(CutOracle& o, const VertexMask& a, const VertexMask& b);

enum class RecoverMode { kAny, kUniformRandom };

/// Finds an edge leaving U by binary descent, first over V - U and then
/// inside U. Weights of `known` edges are subtracted from every answer, so
/// the search runs on the graph with those edges removed. The returned
/// weight is the remaining weight between the endpoints. Uses at most
/// 4 ceil(log2 n) queries; none when U is empty or full.
std::optional<Edge> recover_crossing_edge(CutOracle& o, const VertexMask& u, std::mt19937_64& rng,
                                          RecoverMode mode, std::span<const Edge> known = {});

/// Answers requests with oracle queries: PairCut and DegSubtree cost one,
/// CrossSub and CrossNested three. Local work uses the supplied proxy.
class QueryProvider final : public CostProvider {
 public:
  QueryProvider(CutOracle& oracle, const WeightedGraph& proxy) : o_(oracle), proxy_(proxy) {}

  void batch_eval(std::span<const CostRequest> requests, std::vector<Weight>& out) override;
  const WeightedGraph& local_graph() const override { return proxy_; }
  bool local_is_proxy() const override { return true; }
  RunStats stats() const override;

 private:
  CutOracle& o_;
  const WeightedGraph& proxy_;
};

}  // namespace mincut
