#pragma once

// Dynamic-stream execution model: the graph arrives as a sequence of edge
// insertions and deletions that can only be read in whole passes.

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mincut/cost.hpp"

namespace mincut {

/// Thrown when a stream computation would exceed its word budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct StreamUpdate {
  Vertex u = 0, v = 0;
  std::uint64_t w = 0;
  bool insert = true;
};

/// Update sequence for a graph: its edges in seeded random order plus
/// round(churn * m) insert/delete pairs that cancel out. Half of the pairs
/// repeat a real edge, the rest join random vertex pairs.
class StreamHarness {
 public:
  StreamHarness(const WeightedGraph& g, double churn, std::uint64_t seed);

  Vertex n() const { return n_; }
  std::size_t length() const { return updates_.size(); }

  /// One full pass; every update is handed to visit in stream order.
  template <class Visit>
  void pass(Visit&& visit) {
    ++passes_;
    for (const auto& u : updates_) visit(u);
  }

  /// Space ledger in 64-bit words. Peak live words is the reported figure.
  void track(std::uint64_t words);
  void release(std::uint64_t words);
  void set_budget(std::uint64_t words) { budget_ = words; }
  /// Words that can still be tracked; unlimited without a budget.
  std::uint64_t headroom() const;

  std::uint64_t passes() const { return passes_; }
  std::uint64_t tracked_words() const { return peak_; }
  std::uint64_t live_words() const { return live_; }

  /// "+ u v w" / "- u v w", one update per line.
  std::string dump() const;

 private:
  Vertex n_;
  std::vector<StreamUpdate> updates_;
  std::uint64_t passes_ = 0;
  std::uint64_t live_ = 0, peak_ = 0, budget_ = 0;
};

/// Shared randomness for a family of mergeable sketches.
struct L0Family {
  std::uint64_t universe = 0;
  int levels = 0;
  int repetitions = 0;
  std::uint64_t z = 0;  // fingerprint base, shared by every family of a run
  std::vector<std::uint64_t> level_seeds;

  static L0Family make(std::uint64_t universe, int repetitions, std::uint64_t seed, std::uint64_t z);
  /// z^index in the fingerprint field.
  std::uint64_t power(std::uint64_t index) const;
};

/// Linear sketch of an integer vector over [0, universe) that returns a
/// random nonzero coordinate. Each repetition keeps one-sparse recovery
/// cells (value sum, index sum, fingerprint) on nested subsampling levels.
class L0Sketch {
 public:
  static constexpr std::size_t kWordsPerCell = 3;

  explicit L0Sketch(const L0Family& family);

  void update(std::uint64_t index, std::int64_t delta);
  /// Same with z^index already computed.
  void update(std::uint64_t index, std::int64_t delta, std::uint64_t zpow);
  /// this += sign * other; both must come from the same family.
  void merge(const L0Sketch& other, int sign = 1);

  /// A nonzero coordinate and its value, or nothing when every repetition
  /// fails or the vector is zero.
  std::optional<std::pair<std::uint64_t, std::int64_t>> recover() const;
  /// True when the whole vector is zero (fingerprint-verified).
  bool empty() const;
  std::size_t words() const { return cells_.size() * kWordsPerCell; }

 private:
  struct Cell {
    std::int64_t sum = 0;
    std::uint64_t index_sum = 0;  // mod 2^61 - 1
    std::uint64_t print = 0;      // mod 2^61 - 1
  };

  const L0Family* family_;
  std::vector<Cell> cells_;  // repetition-major
};

/// Answers each batch with one pass over the stream, one counter per request.
class StreamProvider final : public CostProvider {
 public:
  StreamProvider(StreamHarness& h, const WeightedGraph& proxy) : h_(h), proxy_(proxy) {}

  void batch_eval(std::span<const CostRequest> requests, std::vector<Weight>& out) override;
  const WeightedGraph& local_graph() const override { return proxy_; }
  bool local_is_proxy() const override { return true; }
  RunStats stats() const override;

 private:
  StreamHarness& h_;
  const WeightedGraph& proxy_;
};

/// Keeps ell uniformly random items of a stream of unknown length.
template <class T>
class Reservoir {
 public:
  Reservoir(std::size_t ell, std::uint64_t seed) : ell_(ell), rng_(seed) {
    if (ell == 0) throw std::invalid_argument("reservoir needs ell >= 1");
  }

  void push(const T& item) {
    ++seen_;
    if (items_.size() < ell_) {
      items_.push_back(item);
      return;
    }
    std::uniform_int_distribution<std::uint64_t> pick(0, seen_ - 1);
    const auto slot = pick(rng_);
    if (slot < ell_) items_[slot] = item;
  }

  const std::vector<T>& items() const { return items_; }
  std::uint64_t seen() const { return seen_; }

 private:
  std::size_t ell_;
  std::mt19937_64 rng_;
  std::uint64_t seen_ = 0;
  std::vector<T> items_;
};

template <class T>
std::vector<T> reservoir_sample(std::span<const T> stream, std::size_t ell, std::uint64_t seed) {
  Reservoir<T> r(ell, seed);
  for (const auto& x : stream) r.push(x);
  return r.items();
}

}  // namespace mincut
