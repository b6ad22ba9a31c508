#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <tuple>
#include <vector>

#include "mincut/cost.hpp"
#include "mincut/hld.hpp"
#include "mincut/range_index.hpp"

namespace mincut {

/// Edges bucketed by weight into [2^i, 2^(i+1)), one sampling index per
/// nonempty bucket.
class WeightClassIndex {
 public:
  WeightClassIndex(const WeightedGraph& host, const RootedSpanTree& t, std::uint64_t seed);

  int class_count() const { return static_cast<int>(samplers_.size()); }
  /// nullptr for empty classes.
  const SampleRangeIndex* sampler(int cls) const { return samplers_[static_cast<std::size_t>(cls)].get(); }
  std::size_t class_size(int cls) const { return sizes_[static_cast<std::size_t>(cls)]; }

 private:
  std::vector<std::unique_ptr<SampleRangeIndex>> samplers_;
  std::vector<std::size_t> sizes_;
};

int weight_class(std::uint64_t w);

/// Samples of host edges with exactly one endpoint in u↓, drawn per weight
/// class from both boundary rectangles. The same bundle feeds the cross and
/// the down searches: the outside endpoint locates cross partners, the inside
/// endpoint locates down partners.
std::vector<EdgePoint> sample_boundary(const WeightClassIndex& w, const RootedSpanTree& t, Vertex u, std::size_t k);

enum class InterestKind { kCross, kDown };

/// A candidate relation to verify: edge u against the top edge of one
/// decomposition path.
struct InterestCheck {
  Vertex u;
  PathHit hit;
  InterestKind kind;
};

/// Turns a boundary sample into the candidate top edges to verify, without
/// duplicates and without paths that contain u's own edge.
std::vector<InterestCheck> candidate_checks(const RootedSpanTree& t, const PathDecomposition& d, Vertex u,
                                            std::span<const EdgePoint> sample);

/// C(u↓, h↓) for cross checks, C(h↓, V - u↓) for down checks.
CostRequest check_request(const RootedSpanTree& t, const InterestCheck& c);

/// Exact threshold: 2C > deg(u↓). Proxy threshold: 3C_H > deg_H(u↓).
inline bool exceeds_half(Weight c, Weight deg) { return 2 * c > deg; }
inline bool exceeds_third(Weight c, Weight deg) { return 3 * c > deg; }

/// Evaluates one check through a provider; proxy mode filters in the
/// provider's local graph before confirming exactly.
bool verify_interest(CostProvider& provider, const RootedSpanTree& t, const InterestCheck& c, bool proxy_first);

/// Synchronous version of the discovery step for a single tree edge:
/// returns verified cross and down path ids.
std::pair<std::set<int>, std::set<int>> interesting_paths_for_edge(const RootedSpanTree& t,
                                                                   const PathDecomposition& d, Vertex u,
                                                                   std::span<const EdgePoint> sample,
                                                                   CostProvider& provider);

enum class PairKind { kCross = 0, kDown = 1 };

struct PairTuple {
  int p;
  std::vector<Vertex> marks_p;  // top to bottom along p
  int q;
  std::vector<Vertex> marks_q;  // top to bottom along q
  PairKind kind;
};

/// Path pairs with their marked edges. Cross keys are unordered (smaller
/// path id first); down keys are (upper path, lower path).
class PairAccumulator {
 public:
  /// Marks edge e, which lies on path p, as interested in path q.
  void accumulate(const PathDecomposition& d, int p, int q, Vertex e, PairKind kind);
  std::size_t size() const { return pairs_.size(); }

  /// Tuples in key order. Cross tuples missing one side are dropped; down
  /// tuples mark every edge of the lower path.
  std::vector<PairTuple> drain(const PathDecomposition& d) const;

 private:
  std::map<std::tuple<int, int, int>, std::pair<std::set<int>, std::set<int>>> pairs_;
};

}  // namespace mincut
