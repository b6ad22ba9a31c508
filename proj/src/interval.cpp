#include "mincut/interval.hpp"

#include <stdexcept>

namespace mincut {

BipartiteSearch::BipartiteSearch(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("bipartite search needs nonempty rows and columns");
  tasks_.push_back({0, rows - 1, 0, cols - 1});
  plan();
}

void BipartiteSearch::plan() {
  pending_.clear();
  for (const auto& t : tasks_) {
    if (t.base()) {
      for (std::size_t r = t.r0; r <= t.r1; ++r) {
        for (std::size_t c = t.c0; c <= t.c1; ++c) pending_.push_back({r, c});
      }
    } else {
      for (std::size_t r = t.r0; r <= t.r1; ++r) pending_.push_back({r, t.mid()});
    }
  }
  if (!pending_.empty()) ++ledger_.levels;
}

void BipartiteSearch::absorb(std::span<const Weight> values) {
  if (values.size() != pending_.size()) throw std::invalid_argument("probe/value count mismatch");
  ledger_.probes += values.size();
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!best_ || values[i] < best_->value) best_ = MatrixMin{values[i], pending_[i].row, pending_[i].col};
  }
  std::vector<Task> next;
  std::size_t cursor = 0;
  for (const auto& t : tasks_) {
    if (t.base()) {
      cursor += (t.r1 - t.r0 + 1) * (t.c1 - t.c0 + 1);
      continue;
    }
    // i_s: first row attaining the column minimum, i_t: last such row.
    std::size_t i_s = t.r0, i_t = t.r0;
    Weight lowest = values[cursor];
    for (std::size_t r = t.r0; r <= t.r1; ++r) {
      const Weight v = values[cursor + (r - t.r0)];
      if (v < lowest) lowest = v, i_s = r, i_t = r;
      else if (v == lowest) i_t = r;
    }
    cursor += t.r1 - t.r0 + 1;
    const std::size_t mid = t.mid();
    if (mid > t.c0) next.push_back({t.r0, i_s, t.c0, mid - 1});
    if (mid < t.c1) next.push_back({i_t, t.r1, mid + 1, t.c1});
  }
  tasks_ = std::move(next);
  plan();
}

IntervalSearch::IntervalSearch(std::size_t length) {
  if (length < 2) throw std::invalid_argument("interval search needs at least two positions");
  std::vector<std::pair<std::size_t, std::size_t>> stack{{0, length}};
  while (!stack.empty()) {
    const auto [b, e] = stack.back();
    stack.pop_back();
    if (e - b < 2) continue;
    const std::size_t half = b + (e - b) / 2;
    parts_.push_back({b, half, e, BipartiteSearch(half - b, e - half)});
    stack.push_back({half, e});
    stack.push_back({b, half});
  }
  plan();
}

void IntervalSearch::plan() {
  pending_.clear();
  for (const auto& part : parts_) {
    for (const auto& p : part.search.pending()) {
      // Row r counts outward from the split: position a_end-1-r.
      pending_.emplace_back(part.a_end - 1 - p.row, part.a_end + p.col);
    }
  }
  if (!pending_.empty()) ++ledger_.levels;
}

void IntervalSearch::absorb(std::span<const Weight> values) {
  if (values.size() != pending_.size()) throw std::invalid_argument("probe/value count mismatch");
  ledger_.probes += values.size();
  for (std::size_t i = 0; i < values.size(); ++i) {
    const auto [a, b] = pending_[i];
    if (!best_ || values[i] < best_->value) best_ = Result{values[i], a, b};
  }
  std::size_t cursor = 0;
  for (auto& part : parts_) {
    const std::size_t count = part.search.pending().size();
    if (count > 0) part.search.absorb(values.subspan(cursor, count));
    cursor += count;
  }
  plan();
}

MatrixMin bipartite_interval(std::size_t rows, std::size_t cols, const MatrixEval& eval, ProbeLedger* ledger) {
  BipartiteSearch search(rows, cols);
  std::vector<Weight> values;
  while (!search.done()) {
    values.clear();
    eval(search.pending(), values);
    search.absorb(values);
  }
  if (ledger) ledger->probes += search.ledger().probes, ledger->levels += search.ledger().levels;
  return *search.best();
}

IntervalSearch::Result interval_self(std::size_t length, const PairEval& eval, ProbeLedger* ledger) {
  IntervalSearch search(length);
  std::vector<Weight> values;
  while (!search.done()) {
    values.clear();
    eval(search.pending(), values);
    search.absorb(values);
  }
  if (ledger) ledger->probes += search.ledger().probes, ledger->levels += search.ledger().levels;
  return *search.best();
}

bool monge_check(const std::vector<std::vector<Weight>>& m) {
  for (std::size_t i = 0; i + 1 < m.size(); ++i) {
    for (std::size_t j = 0; j + 1 < m[i].size(); ++j) {
      if (m[i][j] - m[i][j + 1] > m[i + 1][j] - m[i + 1][j + 1]) return false;
    }
  }
  return true;
}

}  // namespace mincut
