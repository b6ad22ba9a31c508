#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "mincut/cost.hpp"
#include "mincut/proxy.hpp"

namespace mincut {

enum class ExecutionMode { kSequential, kCutQuery, kStreaming };

const char* to_string(ExecutionMode mode);
std::optional<ExecutionMode> parse_mode(std::string_view name);

struct PipelineOptions {
  ExecutionMode mode = ExecutionMode::kSequential;
  double epsilon = 0.01;
  std::uint64_t seed = 0;
  /// Insert/delete pairs per edge added to the stream.
  double churn = 0;
  /// Trees per lambda guess; 0 means ceil(c2 ln n).
  std::size_t trees = 0;
  double c1 = 12;
  double c2 = 6;
  std::size_t sample_multiplier = 4;
  /// Sequential mode builds a proxy only above sparsify_factor * n * ceil(log2 n)^2 edges.
  double sparsify_factor = 4;
  /// Stream space budget c5 * n * log2(n)^3 words; 0 disables it.
  double word_budget_factor = 50;
  ProxyOptions proxy;
};

struct PipelineResult {
  CutResult cut;
  RunStats stats;
  std::size_t rounds = 0;
};

/// Global minimum cut: proxy for the mode, skeleton and greedy packing for
/// each lambda guess, then every distinct packed tree solved in lockstep.
/// Every candidate value is exact in g. Throws GraphError for graphs with
/// fewer than two vertices or more than one component, BudgetExceeded when
/// the stream budget is hit.
PipelineResult min_cut_pipeline(const WeightedGraph& g, const PipelineOptions& options);

}  // namespace mincut
