#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "mincut/weight.hpp"

namespace mincut {

/// Matrix coordinates of one probed entry.
struct Probe {
  std::size_t row = 0;
  std::size_t col = 0;
};

struct MatrixMin {
  Weight value = 0;
  std::size_t row = 0;
  std::size_t col = 0;
};

struct ProbeLedger {
  std::size_t probes = 0;
  std::size_t levels = 0;
};

/// Divide-and-conquer minimum search over a rows x cols matrix whose column
/// minima move monotonically (rows ordered outward from the split).
///
/// The search is driven in rounds: pending() lists every probe of the
/// current recursion depth, absorb() receives their values in the same order.
class BipartiteSearch {
 public:
  BipartiteSearch(std::size_t rows, std::size_t cols);

  bool done() const { return pending_.empty(); }
  const std::vector<Probe>& pending() const { return pending_; }
  void absorb(std::span<const Weight> values);

  const std::optional<MatrixMin>& best() const { return best_; }
  const ProbeLedger& ledger() const { return ledger_; }

 private:
  struct Task {
    std::size_t r0, r1, c0, c1;  // inclusive bounds
    bool base() const { return r0 == r1 || c0 == c1; }
    std::size_t mid() const { return c0 + (c1 - c0) / 2; }
  };
  void plan();

  std::vector<Task> tasks_;
  std::vector<Probe> pending_;
  std::optional<MatrixMin> best_;
  ProbeLedger ledger_;
};

/// Minimum over all unordered pairs i < j of a list of length p: the
/// bipartite search between the two halves (first half reversed so rows grow
/// away from the split), then the same on each half. Every sub-search is
/// known up front, so they all advance in the same rounds.
class IntervalSearch {
 public:
  explicit IntervalSearch(std::size_t length);

  bool done() const { return pending_.empty(); }
  /// Pairs (i, j) of list positions, i < j.
  const std::vector<std::pair<std::size_t, std::size_t>>& pending() const { return pending_; }
  void absorb(std::span<const Weight> values);

  struct Result {
    Weight value;
    std::size_t i, j;
  };
  const std::optional<Result>& best() const { return best_; }
  const ProbeLedger& ledger() const { return ledger_; }

 private:
  struct Part {
    std::size_t a_begin, a_end, b_end;  // A = [a_begin, a_end), B = [a_end, b_end)
    BipartiteSearch search;
  };
  void plan();

  std::vector<Part> parts_;
  std::vector<std::pair<std::size_t, std::size_t>> pending_;
  std::optional<Result> best_;
  ProbeLedger ledger_;
};

using MatrixEval = std::function<void(std::span<const Probe>, std::vector<Weight>&)>;

/// Runs a bipartite search against a batch evaluator; one call per round.
MatrixMin bipartite_interval(std::size_t rows, std::size_t cols, const MatrixEval& eval,
                             ProbeLedger* ledger = nullptr);

using PairEval = std::function<void(std::span<const std::pair<std::size_t, std::size_t>>, std::vector<Weight>&)>;

IntervalSearch::Result interval_self(std::size_t length, const PairEval& eval, ProbeLedger* ledger = nullptr);

/// True iff M(i,j) - M(i,j+1) is non-decreasing in i for every j.
bool monge_check(const std::vector<std::vector<Weight>>& m);

}  // namespace mincut
