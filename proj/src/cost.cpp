#include "mincut/cost.hpp"

namespace mincut {

RequestSets request_sets(const CostRequest& r) {
  const auto& t = *r.tree;
  const Vertex last = t.n() - 1;
  RequestSets s;
  switch (r.kind) {
    case CostRequest::Kind::kDegSubtree:
      s.a = {t.lo(r.a), t.hi(r.a), 1, 0};
      s.b_is_complement = true;
      break;
    case CostRequest::Kind::kCrossSub:
      s.a = {t.lo(r.a), t.hi(r.a), 1, 0};
      s.b = {t.lo(r.b), t.hi(r.b), 1, 0};
      break;
    case CostRequest::Kind::kCrossNested:
      s.a = {t.lo(r.a), t.hi(r.a), 1, 0};
      s.b = {0, t.lo(r.b) - 1, t.hi(r.b) + 1, last};
      break;
    case CostRequest::Kind::kPairCut: {
      const auto& p = r.pair;
      s.b_is_complement = true;
      switch (p.kind) {
        case TreeEdgePair::Kind::kSingle:
          s.a = {t.lo(p.first), t.hi(p.first), 1, 0};
          break;
        case TreeEdgePair::Kind::kOrthogonal:
          s.a = {t.lo(p.first), t.hi(p.first), t.lo(p.second), t.hi(p.second)};
          break;
        case TreeEdgePair::Kind::kNested:
          s.a = {t.lo(p.first), t.lo(p.second) - 1, t.hi(p.second) + 1, t.hi(p.first)};
          break;
      }
      break;
    }
  }
  return s;
}

const WeightRangeIndex& SequentialProvider::index_for(const RootedSpanTree& t) {
  auto& slot = indexes_[&t];
  if (!slot) slot = std::make_unique<WeightRangeIndex>(build_point_set(g_, t));
  return *slot;
}

Weight SequentialProvider::eval(const CostRequest& r) {
  const auto& t = *r.tree;
  const auto& idx = index_for(t);
  switch (r.kind) {
    case CostRequest::Kind::kDegSubtree:
      return deg_subtree(idx, t, r.a);
    case CostRequest::Kind::kCrossSub:
      return cross_sub(idx, t, r.a, r.b);
    case CostRequest::Kind::kCrossNested:
      return cross_nested(idx, t, r.a, r.b);
    case CostRequest::Kind::kPairCut: {
      const auto& p = r.pair;
      check_pair(t, p);
      const Weight du = deg_subtree(idx, t, p.first);
      if (p.kind == TreeEdgePair::Kind::kSingle) return du;
      const Weight dv = deg_subtree(idx, t, p.second);
      if (p.kind == TreeEdgePair::Kind::kOrthogonal) return du + dv - 2 * cross_sub(idx, t, p.first, p.second);
      return du + dv - 2 * cross_nested(idx, t, p.second, p.first);
    }
  }
  return 0;
}

void SequentialProvider::batch_eval(std::span<const CostRequest> requests, std::vector<Weight>& out) {
  out.reserve(out.size() + requests.size());
  for (const auto& r : requests) out.push_back(eval(r));
}

}  // namespace mincut
