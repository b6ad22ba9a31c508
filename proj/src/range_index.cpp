#include "mincut/range_index.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace mincut {

std::vector<EdgePoint> build_point_set(const WeightedGraph& g, const RootedSpanTree& t) {
  std::vector<EdgePoint> points;
  points.reserve(static_cast<std::size_t>(g.m()));
  for (EdgeId id = 0; id < g.m(); ++id) {
    const auto& e = g.edge(id);
    const Vertex a = t.po(e.u);
    const Vertex b = t.po(e.v);
    points.push_back({std::min(a, b), std::max(a, b), e.w, id});
  }
  return points;
}

std::vector<EdgePoint> build_point_set(const WeightedGraph& g, const RootedSpanTree& t, std::span<const EdgeId> ids) {
  std::vector<EdgePoint> points;
  points.reserve(ids.size());
  for (EdgeId id : ids) {
    const auto& e = g.edge(id);
    const Vertex a = t.po(e.u);
    const Vertex b = t.po(e.v);
    points.push_back({std::min(a, b), std::max(a, b), e.w, id});
  }
  return points;
}

WeightRangeIndex::WeightRangeIndex(std::span<const EdgePoint> points) {
  std::vector<EdgePoint> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end(), [](const EdgePoint& a, const EdgePoint& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  });
  leaves_ = 1;
  while (leaves_ < sorted.size()) leaves_ *= 2;
  xs_.reserve(sorted.size());
  for (const auto& p : sorted) xs_.push_back(p.x);

  by_y_.assign(2 * leaves_, {});
  sums_.assign(2 * leaves_, {});
  for (std::size_t i = 0; i < sorted.size(); ++i) by_y_[leaves_ + i] = {sorted[i]};
  auto by_y = [](const EdgePoint& a, const EdgePoint& b) { return a.y != b.y ? a.y < b.y : a.x < b.x; };
  for (std::size_t node = leaves_ - 1; node >= 1; --node) {
    const auto& l = by_y_[2 * node];
    const auto& r = by_y_[2 * node + 1];
    by_y_[node].resize(l.size() + r.size());
    std::merge(l.begin(), l.end(), r.begin(), r.end(), by_y_[node].begin(), by_y);
  }
  for (std::size_t node = 1; node < 2 * leaves_; ++node) {
    auto& s = sums_[node];
    s.resize(by_y_[node].size() + 1, 0);
    for (std::size_t i = 0; i < by_y_[node].size(); ++i) s[i + 1] = s[i] + by_y_[node][i].w;
  }
}

// Calls visit(node, first, last) for the canonical nodes covering the x-range,
// where [first, last) are the node's points with y inside the rectangle.
template <typename Visit>
void WeightRangeIndex::visit_nodes(const Rect& r, Visit&& visit) const {
  if (r.empty() || xs_.empty()) return;
  std::size_t lo = static_cast<std::size_t>(std::lower_bound(xs_.begin(), xs_.end(), r.x1) - xs_.begin());
  std::size_t hi = static_cast<std::size_t>(std::upper_bound(xs_.begin(), xs_.end(), r.x2) - xs_.begin());
  auto emit = [&](std::size_t node) {
    const auto& ys = by_y_[node];
    auto first = std::lower_bound(ys.begin(), ys.end(), r.y1, [](const EdgePoint& p, Vertex y) { return p.y < y; });
    auto last = std::upper_bound(first, ys.end(), r.y2, [](Vertex y, const EdgePoint& p) { return y < p.y; });
    if (first != last) {
      visit(node, static_cast<std::size_t>(first - ys.begin()), static_cast<std::size_t>(last - ys.begin()));
    }
  };
  for (lo += leaves_, hi += leaves_; lo < hi; lo /= 2, hi /= 2) {
    if (lo & 1) emit(lo++);
    if (hi & 1) emit(--hi);
  }
}

Weight WeightRangeIndex::rect_weight(const Rect& r) const {
  Weight total = 0;
  visit_nodes(r, [&](std::size_t node, std::size_t first, std::size_t last) {
    total += sums_[node][last] - sums_[node][first];
  });
  return total;
}

std::size_t WeightRangeIndex::rect_count(const Rect& r) const {
  std::size_t total = 0;
  visit_nodes(r, [&](std::size_t, std::size_t first, std::size_t last) { total += last - first; });
  return total;
}

void WeightRangeIndex::report(const Rect& r, std::vector<EdgePoint>& out) const {
  visit_nodes(r, [&](std::size_t node, std::size_t first, std::size_t last) {
    out.insert(out.end(), by_y_[node].begin() + static_cast<std::ptrdiff_t>(first),
               by_y_[node].begin() + static_cast<std::ptrdiff_t>(last));
  });
}

SampleRangeIndex::SampleRangeIndex(std::span<const EdgePoint> points, std::uint64_t seed) {
  std::size_t k = 0;
  while ((std::size_t{1} << k) < points.size()) ++k;
  std::mt19937_64 rng(seed);
  std::vector<EdgePoint> current(points.begin(), points.end());
  levels_.reserve(k + 1);
  levels_.emplace_back(current);
  for (std::size_t i = 1; i <= k; ++i) {
    std::vector<EdgePoint> next;
    for (const auto& p : current) {
      if (rng() & 1) next.push_back(p);
    }
    current = std::move(next);
    levels_.emplace_back(current);
  }
}

std::vector<EdgePoint> SampleRangeIndex::sample_rect(const Rect& r, std::size_t k) const {
  if (k == 0) throw std::invalid_argument("sample_rect needs k >= 1");
  std::vector<EdgePoint> out;
  if (levels_.empty() || r.empty()) return out;
  std::size_t level = levels_.size() - 1;
  while (level > 0 && levels_[level].rect_count(r) < k) --level;
  levels_[level].report(r, out);
  return out;
}

std::array<Rect, 2> deg_rects(const RootedSpanTree& t, Vertex v) {
  const Vertex a = t.lo(v);
  const Vertex b = t.hi(v);
  const Vertex last = t.n() - 1;
  return {Rect{0, a - 1, a, b}, Rect{a, b, b + 1, last}};
}

Weight deg_subtree(const WeightRangeIndex& idx, const RootedSpanTree& t, Vertex v) {
  const auto rects = deg_rects(t, v);
  return idx.rect_weight(rects[0]) + idx.rect_weight(rects[1]);
}

Weight cross_sub(const WeightRangeIndex& idx, const RootedSpanTree& t, Vertex u, Vertex v) {
  if (t.hi(v) < t.lo(u)) std::swap(u, v);
  if (t.hi(u) >= t.lo(v)) throw std::invalid_argument("cross_sub needs disjoint subtrees");
  return idx.rect_weight({t.lo(u), t.hi(u), t.lo(v), t.hi(v)});
}

Weight cross_nested(const WeightRangeIndex& idx, const RootedSpanTree& t, Vertex v, Vertex u) {
  if (!t.is_ancestor(u, v)) throw std::invalid_argument("cross_nested needs v inside u's subtree");
  const Vertex a = t.lo(u), b = t.hi(u), c = t.lo(v), d = t.hi(v);
  return idx.rect_weight({0, a - 1, c, d}) + idx.rect_weight({c, d, b + 1, t.n() - 1});
}

}  // namespace mincut
