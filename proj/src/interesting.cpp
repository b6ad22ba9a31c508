#include "mincut/interesting.hpp"

#include <bit>
#include <stdexcept>

namespace mincut {

int weight_class(std::uint64_t w) {
  if (w == 0) throw std::invalid_argument("weight classes need positive weights");
  return static_cast<int>(std::bit_width(w)) - 1;
}

WeightClassIndex::WeightClassIndex(const WeightedGraph& host, const RootedSpanTree& t, std::uint64_t seed) {
  std::vector<std::vector<EdgeId>> buckets;
  for (EdgeId id = 0; id < host.m(); ++id) {
    const auto cls = static_cast<std::size_t>(weight_class(host.edge(id).w));
    if (buckets.size() <= cls) buckets.resize(cls + 1);
    buckets[cls].push_back(id);
  }
  samplers_.resize(buckets.size());
  sizes_.resize(buckets.size());
  for (std::size_t cls = 0; cls < buckets.size(); ++cls) {
    sizes_[cls] = buckets[cls].size();
    if (buckets[cls].empty()) continue;
    // Independent coins per class, derived from the caller's seed.
    const std::uint64_t class_seed = seed ^ (0x9e3779b97f4a7c15ULL * (cls + 1));
    samplers_[cls] = std::make_unique<SampleRangeIndex>(build_point_set(host, t, buckets[cls]), class_seed);
  }
}

std::vector<EdgePoint> sample_boundary(const WeightClassIndex& w, const RootedSpanTree& t, Vertex u, std::size_t k) {
  std::vector<EdgePoint> out;
  const auto rects = deg_rects(t, u);
  for (int cls = 0; cls < w.class_count(); ++cls) {
    const auto* s = w.sampler(cls);
    if (!s) continue;
    for (const auto& r : rects) {
      auto part = s->sample_rect(r, k);
      out.insert(out.end(), part.begin(), part.end());
    }
  }
  return out;
}

std::vector<InterestCheck> candidate_checks(const RootedSpanTree& t, const PathDecomposition& d, Vertex u,
                                            std::span<const EdgePoint> sample) {
  std::set<std::tuple<int, Vertex, int>> seen;
  std::vector<InterestCheck> out;
  const int own = d.path_of(u);
  auto add = [&](const PathHit& h, InterestKind kind) {
    if (h.path == own) return;  // same-path pairs belong to the per-path search
    if (seen.insert({static_cast<int>(kind), h.edge, h.path}).second) out.push_back({u, h, kind});
  };
  for (const auto& p : sample) {
    const Vertex a = t.at_po(p.x);
    const Vertex b = t.at_po(p.y);
    const bool a_inside = t.is_ancestor(u, a);
    const Vertex inside = a_inside ? a : b;
    const Vertex outside = a_inside ? b : a;
    // Cross partners sit below lca(u, outside) on the way to the outside endpoint.
    const Vertex l = t.lca(u, outside);
    if (l != outside) {
      for (const auto& h : d.top_edge_below(l, outside)) add(h, InterestKind::kCross);
    }
    // Down partners sit between u and the inside endpoint.
    if (inside != u) {
      for (const auto& h : d.top_edge_below(u, inside)) add(h, InterestKind::kDown);
    }
  }
  return out;
}

CostRequest check_request(const RootedSpanTree& t, const InterestCheck& c) {
  return c.kind == InterestKind::kCross ? CostRequest::cross_sub(t, c.u, c.hit.edge)
                                        : CostRequest::cross_nested(t, c.hit.edge, c.u);
}

namespace {

// C and deg for a check, summed directly over a graph's edges.
std::pair<Weight, Weight> scan_check(const WeightedGraph& g, const RootedSpanTree& t, const InterestCheck& c) {
  Weight cross = 0, deg = 0;
  const Vertex h = c.hit.edge;
  for (const auto& e : g.edges()) {
    const bool ua = t.is_ancestor(c.u, e.u), ub = t.is_ancestor(c.u, e.v);
    if (ua != ub) deg += e.w;
    const bool ha = t.is_ancestor(h, e.u), hb = t.is_ancestor(h, e.v);
    if (c.kind == InterestKind::kCross) {
      if ((ua && hb) || (ub && ha)) cross += e.w;
    } else if ((ha && !ub) || (hb && !ua)) {
      cross += e.w;
    }
  }
  return {cross, deg};
}

}  // namespace

bool verify_interest(CostProvider& provider, const RootedSpanTree& t, const InterestCheck& c, bool proxy_first) {
  const bool cross = c.kind == InterestKind::kCross;
  const bool geometry_ok = cross ? !t.is_ancestor(c.u, c.hit.edge) && !t.is_ancestor(c.hit.edge, c.u)
                                 : c.u != c.hit.edge && t.is_ancestor(c.u, c.hit.edge);
  if (!geometry_ok) throw std::invalid_argument("interest check with invalid geometry");
  if (proxy_first) {
    const auto [ch, dh] = scan_check(provider.local_graph(), t, c);
    if (!exceeds_third(ch, dh)) return false;
  }
  const std::vector<CostRequest> requests{check_request(t, c), CostRequest::deg_subtree(t, c.u)};
  std::vector<Weight> values;
  provider.batch_eval(requests, values);
  return exceeds_half(values[0], values[1]);
}

std::pair<std::set<int>, std::set<int>> interesting_paths_for_edge(const RootedSpanTree& t,
                                                                   const PathDecomposition& d, Vertex u,
                                                                   std::span<const EdgePoint> sample,
                                                                   CostProvider& provider) {
  std::set<int> cross, down;
  for (const auto& c : candidate_checks(t, d, u, sample)) {
    if (verify_interest(provider, t, c, provider.local_is_proxy())) {
      (c.kind == InterestKind::kCross ? cross : down).insert(c.hit.path);
    }
  }
  return {cross, down};
}

void PairAccumulator::accumulate(const PathDecomposition& d, int p, int q, Vertex e, PairKind kind) {
  const int pos = d.index_in_path(e);
  if (kind == PairKind::kCross && p > q) {
    pairs_[{q, p, static_cast<int>(kind)}].second.insert(pos);
  } else {
    pairs_[{p, q, static_cast<int>(kind)}].first.insert(pos);
  }
}

std::vector<PairTuple> PairAccumulator::drain(const PathDecomposition& d) const {
  std::vector<PairTuple> out;
  for (const auto& [key, sides] : pairs_) {
    const auto [p, q, k] = key;
    const auto kind = static_cast<PairKind>(k);
    PairTuple tuple{p, {}, q, {}, kind};
    const auto path_p = d.path(p);
    const auto path_q = d.path(q);
    for (int i : sides.first) tuple.marks_p.push_back(path_p[static_cast<std::size_t>(i)]);
    if (kind == PairKind::kDown) {
      tuple.marks_q.assign(path_q.begin(), path_q.end());
    } else {
      for (int i : sides.second) tuple.marks_q.push_back(path_q[static_cast<std::size_t>(i)]);
    }
    if (tuple.marks_p.empty() || tuple.marks_q.empty()) continue;
    out.push_back(std::move(tuple));
  }
  return out;
}

}  // namespace mincut
