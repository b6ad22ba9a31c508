#pragma once

#include "mincut/cut.hpp"

namespace mincut {

enum class OracleMethod {
  kAuto,        // exhaustive up to kExhaustiveLimit vertices, Stoer-Wagner above
  kExhaustive,
  kStoerWagner,
};

inline constexpr Vertex kExhaustiveLimit = 18;

/// Exact global minimum cut with a witness partition. The certificate field
/// stays empty since no tree is involved.
CutResult oracle_min_cut(const WeightedGraph& g, OracleMethod method = OracleMethod::kAuto);

/// Scans every Single and every pair of tree edges; ties resolved by tie_key.
CutResult oracle_2respect_min(const WeightedGraph& g, const RootedSpanTree& t);

}  // namespace mincut
