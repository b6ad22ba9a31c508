#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <unordered_map>
#include <vector>

#include "mincut/cut.hpp"
#include "mincut/kernels.hpp"
#include "mincut/range_index.hpp"
#include "mincut/tree.hpp"

namespace mincut {

/// One cut quantity, phrased against a rooted spanning tree.
struct CostRequest {
  enum class Kind { kDegSubtree, kCrossSub, kCrossNested, kPairCut };

  Kind kind = Kind::kDegSubtree;
  const RootedSpanTree* tree = nullptr;
  Vertex a = -1;  // DegSubtree(a), CrossSub(a, b), CrossNested(a inside b)
  Vertex b = -1;
  TreeEdgePair pair;

  static CostRequest deg_subtree(const RootedSpanTree& t, Vertex v) { return {Kind::kDegSubtree, &t, v, -1, {}}; }
  static CostRequest cross_sub(const RootedSpanTree& t, Vertex u, Vertex v) { return {Kind::kCrossSub, &t, u, v, {}}; }
  static CostRequest cross_nested(const RootedSpanTree& t, Vertex v, Vertex u) {
    return {Kind::kCrossNested, &t, v, u, {}};
  }
  static CostRequest pair_cut(const RootedSpanTree& t, const TreeEdgePair& p) { return {Kind::kPairCut, &t, -1, -1, p}; }
};

/// The request as a pair of vertex sets in post-order coordinates: the value
/// is the weight of edges joining A and B (B may be the complement of A).
struct RequestSets {
  kernels::RangeCounterBank::Ranges a, b;
  bool b_is_complement = false;
};
RequestSets request_sets(const CostRequest& r);

struct RunStats {
  std::uint64_t probes = 0;
  std::uint64_t queries = 0;
  std::uint64_t passes = 0;
  std::uint64_t tracked_words = 0;
  std::uint64_t wall_ms = 0;
  std::uint64_t trees_packed = 0;
  std::uint64_t lambda_guesses = 0;
};

/// Batch interface through which every cut value is obtained. Values are
/// exact in the input graph whatever the execution model.
class CostProvider {
 public:
  virtual ~CostProvider() = default;

  /// Appends one value per request to out.
  virtual void batch_eval(std::span<const CostRequest> requests, std::vector<Weight>& out) = 0;
  /// Graph the algorithm may inspect locally (candidate sampling, filtering).
  virtual const WeightedGraph& local_graph() const = 0;
  /// True when local_graph() only approximates the input's cuts.
  virtual bool local_is_proxy() const = 0;
  virtual RunStats stats() const = 0;
};

/// In-memory evaluation through per-tree range indexes.
class SequentialProvider final : public CostProvider {
 public:
  explicit SequentialProvider(const WeightedGraph& g) : g_(g) {}

  void batch_eval(std::span<const CostRequest> requests, std::vector<Weight>& out) override;
  const WeightedGraph& local_graph() const override { return g_; }
  bool local_is_proxy() const override { return false; }
  RunStats stats() const override { return {}; }

  Weight eval(const CostRequest& r);

 private:
  const WeightRangeIndex& index_for(const RootedSpanTree& t);

  const WeightedGraph& g_;
  std::unordered_map<const RootedSpanTree*, std::unique_ptr<WeightRangeIndex>> indexes_;
};

}  // namespace mincut
