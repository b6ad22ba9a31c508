#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "mincut/cost.hpp"
#include "mincut/hld.hpp"
#include "mincut/interesting.hpp"
#include "mincut/interval.hpp"

namespace mincut {

struct TwoRespectOptions {
  /// Samples per weight class and boundary rectangle, times ceil(log2 n).
  std::size_t sample_multiplier = 4;
  std::uint64_t seed = 0;
};

struct TwoRespectTrace {
  std::size_t rounds = 0;
  std::size_t probes = 0;        // pair-cut entries evaluated by the searches
  std::size_t checks = 0;        // interest verifications sent to the provider
  std::size_t step5_marks = 0;   // sum of marked-list lengths over drained tuples
  std::vector<PairTuple> tuples;
};

/// Minimum 2-respecting cut of one tree, as a round-driven state machine.
///
/// Round 1 asks for every single-edge cut, the first probes of the per-path
/// searches and the interest verifications. Once those are answered the
/// path pairs are known and their bipartite searches join the remaining
/// per-path rounds.
class TwoRespectRun {
 public:
  /// `local` is the graph inspected for candidate sampling; when `proxy` is
  /// set it only approximates the cut values and is used as a 1/3 filter.
  TwoRespectRun(const RootedSpanTree& t, const WeightedGraph& local, bool proxy, const TwoRespectOptions& options);

  bool done() const { return phase_ == Phase::kDone; }
  /// Appends this round's requests.
  void collect(std::vector<CostRequest>& out);
  /// Receives the values for the requests appended by the last collect().
  void absorb(std::span<const Weight> values);

  const CutResult& result() const { return best_; }
  const TwoRespectTrace& trace() const { return trace_; }

 private:
  enum class Phase { kFirst, kSearch, kDone };

  struct PathSearch {
    std::vector<Vertex> edges;  // top to bottom
    IntervalSearch search;
  };
  struct PairSearch {
    std::vector<Vertex> rows, cols;
    BipartiteSearch search;
  };

  void offer(const TreeEdgePair& p, Weight value);
  void collect_searches(std::vector<CostRequest>& out);
  void absorb_searches(std::span<const Weight> values);
  void update_phase();

  const RootedSpanTree& t_;
  PathDecomposition d_;
  Phase phase_ = Phase::kFirst;
  std::vector<Vertex> edges_;
  std::vector<PathSearch> paths_;
  std::vector<PairSearch> pairs_;
  std::vector<InterestCheck> checks_;
  CutResult best_;
  bool have_best_ = false;
  TwoRespectTrace trace_;
};

/// Runs several instances against one provider, one batch per round.
/// Returns the number of rounds.
std::size_t run_lockstep(std::span<TwoRespectRun* const> runs, CostProvider& provider);

/// Exact minimum 2-respecting cut of t (with high probability).
CutResult min_2respect(const RootedSpanTree& t, CostProvider& provider, const TwoRespectOptions& options = {},
                       TwoRespectTrace* trace = nullptr);

}  // namespace mincut
