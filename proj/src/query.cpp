#include "mincut/query.hpp"

#include <algorithm>
#include <stdexcept>

namespace mincut {

CutOracle::CutOracle(const WeightedGraph& hidden) : g_(hidden), n_(hidden.n()), buffer_(static_cast<std::size_t>(n_)) {}

Weight CutOracle::cut(const VertexMask& side) {
  if (side.size() != buffer_.size()) throw std::invalid_argument("cut side has the wrong length");
  ++queries_;
  for (std::size_t i = 0; i < side.size(); ++i) buffer_[i] = side[i] ? 1 : 0;
  return crossing_weight(g_, buffer_);
}

Weight oracle_cross_weight(CutOracle& o, const VertexMask& a, const VertexMask& b) {
  VertexMask both(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] && b[i]) throw std::invalid_argument("cross weight needs disjoint sets");
    both[i] = a[i] | b[i];
  }
  return (o.cut(a) + o.cut(b) - o.cut(both)) / 2;
}

namespace {

class ResidualCut {
 public:
  ResidualCut(CutOracle& o, std::span<const Edge> known) : o_(o), known_(known) {}

  Weight operator()(const VertexMask& side) {
    Weight w = o_.cut(side);
    for (const auto& e : known_) {
      if (side[static_cast<std::size_t>(e.u)] != side[static_cast<std::size_t>(e.v)]) w -= e.w;
    }
    return w;
  }

 private:
  CutOracle& o_;
  std::span<const Edge> known_;
};

VertexMask mask_of(std::size_t n, std::span<const Vertex> members) {
  VertexMask m(n, 0);
  for (Vertex v : members) m[static_cast<std::size_t>(v)] = 1;
  return m;
}

// Halves `candidates` until one vertex is left, keeping the half that holds
// the chosen share of the weight towards `anchor`. cut_anchor is the
// residual cut of the anchor set alone; weight is C(anchor, candidates).
Vertex descend(ResidualCut& cut, const VertexMask& anchor, Weight cut_anchor, std::vector<Vertex> candidates,
               Weight& weight, std::mt19937_64& rng, RecoverMode mode) {
  const std::size_t n = anchor.size();
  while (candidates.size() > 1) {
    const std::size_t half = (candidates.size() + 1) / 2;
    const std::span<const Vertex> first(candidates.data(), half);
    const auto m1 = mask_of(n, first);
    auto joint = m1;
    for (std::size_t i = 0; i < n; ++i) joint[i] |= anchor[i];
    const Weight c1 = (cut_anchor + cut(m1) - cut(joint)) / 2;
    bool take_first = c1 > 0;
    if (mode == RecoverMode::kUniformRandom) {
      std::uniform_int_distribution<std::uint64_t> pick(0, static_cast<std::uint64_t>(weight) - 1);
      take_first = static_cast<Weight>(pick(rng)) < c1;
    }
    if (take_first) {
      candidates.resize(half);
      weight = c1;
    } else {
      candidates.erase(candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(half));
      weight -= c1;
    }
  }
  return candidates[0];
}

}  // namespace

std::optional<Edge> recover_crossing_edge(CutOracle& o, const VertexMask& u, std::mt19937_64& rng, RecoverMode mode,
                                          std::span<const Edge> known) {
  std::vector<Vertex> inside, outside;
  for (std::size_t i = 0; i < u.size(); ++i) (u[i] ? inside : outside).push_back(static_cast<Vertex>(i));
  if (inside.empty() || outside.empty()) return std::nullopt;

  ResidualCut cut(o, known);
  const Weight total = cut(u);
  if (total <= 0) return std::nullopt;
  Weight weight = total;
  const Vertex x = descend(cut, u, total, std::move(outside), weight, rng, mode);

  const auto xm = mask_of(u.size(), std::span<const Vertex>(&x, 1));
  const Weight cut_x = cut(xm);
  const Vertex y = descend(cut, xm, cut_x, std::move(inside), weight, rng, mode);
  return Edge{std::min(x, y), std::max(x, y), static_cast<std::uint64_t>(weight)};
}

namespace {

VertexMask mask_from(const RootedSpanTree& t, const kernels::RangeCounterBank::Ranges& r) {
  VertexMask m(static_cast<std::size_t>(t.n()), 0);
  for (Vertex v = 0; v < t.n(); ++v) {
    const Vertex p = t.po(v);
    m[static_cast<std::size_t>(v)] = (r.lo1 <= p && p <= r.hi1) || (r.lo2 <= p && p <= r.hi2);
  }
  return m;
}

}  // namespace

void QueryProvider::batch_eval(std::span<const CostRequest> requests, std::vector<Weight>& out) {
  out.reserve(out.size() + requests.size());
  for (const auto& r : requests) {
    if (r.kind == CostRequest::Kind::kPairCut) check_pair(*r.tree, r.pair);
    const auto sets = request_sets(r);
    const auto a = mask_from(*r.tree, sets.a);
    out.push_back(sets.b_is_complement ? o_.cut(a) : oracle_cross_weight(o_, a, mask_from(*r.tree, sets.b)));
  }
}

RunStats QueryProvider::stats() const {
  RunStats s;
  s.queries = o_.queries();
  return s;
}

}  // namespace mincut
