#include "mincut/two_respect.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace mincut {

namespace {

std::size_t ceil_log2(std::size_t x) { return x <= 1 ? 1 : static_cast<std::size_t>(std::bit_width(x - 1)); }

}  // namespace

TwoRespectRun::TwoRespectRun(const RootedSpanTree& t, const WeightedGraph& local, bool proxy,
                             const TwoRespectOptions& options)
    : t_(t), d_(t) {
  if (t.n() < 2) throw GraphError(GraphErrorCode::kTooFewVertices, "a cut needs at least two vertices");
  if (local.n() != t.n()) throw std::invalid_argument("local graph and tree disagree on the vertex count");
  edges_ = t.edge_children();

  for (int p = 0; p < d_.path_count(); ++p) {
    const auto path = d_.path(p);
    if (path.size() < 2) continue;
    paths_.push_back({std::vector<Vertex>(path.begin(), path.end()), IntervalSearch(path.size())});
  }

  const WeightClassIndex classes(local, t, options.seed);
  const std::size_t k = std::max<std::size_t>(1, options.sample_multiplier * ceil_log2(static_cast<std::size_t>(t.n())));
  std::unique_ptr<WeightRangeIndex> local_index;
  if (proxy) local_index = std::make_unique<WeightRangeIndex>(build_point_set(local, t));
  for (Vertex u : edges_) {
    const auto sample = sample_boundary(classes, t, u, k);
    auto checks = candidate_checks(t, d_, u, sample);
    if (proxy) {
      const Weight deg_h = deg_subtree(*local_index, t, u);
      std::erase_if(checks, [&](const InterestCheck& c) {
        const Weight c_h = c.kind == InterestKind::kCross ? cross_sub(*local_index, t, u, c.hit.edge)
                                                          : cross_nested(*local_index, t, c.hit.edge, u);
        return !exceeds_third(c_h, deg_h);
      });
    }
    checks_.insert(checks_.end(), checks.begin(), checks.end());
  }
  trace_.checks = checks_.size();
}

void TwoRespectRun::offer(const TreeEdgePair& p, Weight value) {
  if (!have_best_ || value < best_.value || (value == best_.value && tie_key(t_, p) < tie_key(t_, *best_.certificate))) {
    best_.value = value;
    best_.certificate = p;
    have_best_ = true;
  }
}

void TwoRespectRun::collect_searches(std::vector<CostRequest>& out) {
  for (const auto& ps : paths_) {
    for (const auto& [i, j] : ps.search.pending()) {
      out.push_back(CostRequest::pair_cut(t_, make_pair(t_, ps.edges[i], ps.edges[j])));
    }
  }
  for (const auto& pr : pairs_) {
    for (const auto& probe : pr.search.pending()) {
      out.push_back(CostRequest::pair_cut(t_, make_pair(t_, pr.rows[probe.row], pr.cols[probe.col])));
    }
  }
}

void TwoRespectRun::absorb_searches(std::span<const Weight> values) {
  std::size_t cursor = 0;
  for (auto& ps : paths_) {
    const std::size_t count = ps.search.pending().size();
    if (count == 0) continue;
    for (std::size_t k = 0; k < count; ++k) {
      const auto [i, j] = ps.search.pending()[k];
      offer(make_pair(t_, ps.edges[i], ps.edges[j]), values[cursor + k]);
    }
    ps.search.absorb(values.subspan(cursor, count));
    cursor += count;
  }
  for (auto& pr : pairs_) {
    const std::size_t count = pr.search.pending().size();
    if (count == 0) continue;
    for (std::size_t k = 0; k < count; ++k) {
      const auto& probe = pr.search.pending()[k];
      offer(make_pair(t_, pr.rows[probe.row], pr.cols[probe.col]), values[cursor + k]);
    }
    pr.search.absorb(values.subspan(cursor, count));
    cursor += count;
  }
  trace_.probes += cursor;
  if (cursor != values.size()) throw std::logic_error("search value count mismatch");
}

void TwoRespectRun::collect(std::vector<CostRequest>& out) {
  if (phase_ == Phase::kDone) return;
  ++trace_.rounds;
  if (phase_ == Phase::kFirst) {
    for (Vertex u : edges_) out.push_back(CostRequest::deg_subtree(t_, u));
  }
  collect_searches(out);
  if (phase_ == Phase::kFirst) {
    for (const auto& c : checks_) out.push_back(check_request(t_, c));
  }
}

void TwoRespectRun::absorb(std::span<const Weight> values) {
  if (phase_ == Phase::kDone) return;
  if (phase_ == Phase::kSearch) {
    absorb_searches(values);
    update_phase();
    return;
  }

  const std::size_t singles = edges_.size();
  std::vector<Weight> deg(static_cast<std::size_t>(t_.n()), 0);
  for (std::size_t i = 0; i < singles; ++i) {
    deg[static_cast<std::size_t>(edges_[i])] = values[i];
    offer(TreeEdgePair::single(edges_[i]), values[i]);
  }
  std::size_t search_count = 0;
  for (const auto& ps : paths_) search_count += ps.search.pending().size();
  absorb_searches(values.subspan(singles, search_count));

  const auto check_values = values.subspan(singles + search_count);
  if (check_values.size() != checks_.size()) throw std::logic_error("check value count mismatch");
  PairAccumulator acc;
  for (std::size_t i = 0; i < checks_.size(); ++i) {
    const auto& c = checks_[i];
    if (!exceeds_half(check_values[i], deg[static_cast<std::size_t>(c.u)])) continue;
    acc.accumulate(d_, d_.path_of(c.u), c.hit.path, c.u,
                   c.kind == InterestKind::kCross ? PairKind::kCross : PairKind::kDown);
  }
  checks_.clear();
  trace_.tuples = acc.drain(d_);
  for (const auto& tuple : trace_.tuples) {
    trace_.step5_marks += tuple.marks_p.size() + tuple.marks_q.size();
    // Rows and columns both run away from where the two paths meet.
    std::vector<Vertex> rows = tuple.marks_p;
    if (tuple.kind == PairKind::kDown) std::reverse(rows.begin(), rows.end());
    BipartiteSearch search(rows.size(), tuple.marks_q.size());
    pairs_.push_back({std::move(rows), tuple.marks_q, std::move(search)});
  }
  phase_ = Phase::kSearch;
  update_phase();
}

void TwoRespectRun::update_phase() {
  const bool busy = std::any_of(paths_.begin(), paths_.end(), [](const PathSearch& p) { return !p.search.done(); }) ||
                    std::any_of(pairs_.begin(), pairs_.end(), [](const PairSearch& p) { return !p.search.done(); });
  if (!busy) {
    phase_ = Phase::kDone;
    best_.partition = reconstruct_partition(t_, *best_.certificate);
  }
}

std::size_t run_lockstep(std::span<TwoRespectRun* const> runs, CostProvider& provider) {
  std::size_t rounds = 0;
  std::vector<CostRequest> requests;
  std::vector<std::size_t> offsets;
  std::vector<Weight> values;
  while (std::any_of(runs.begin(), runs.end(), [](const TwoRespectRun* r) { return !r->done(); })) {
    requests.clear();
    offsets.assign(1, 0);
    for (auto* run : runs) {
      run->collect(requests);
      offsets.push_back(requests.size());
    }
    values.clear();
    provider.batch_eval(requests, values);
    if (values.size() != requests.size()) throw std::logic_error("provider returned the wrong number of values");
    const std::span<const Weight> all(values);
    for (std::size_t i = 0; i < runs.size(); ++i) {
      runs[i]->absorb(all.subspan(offsets[i], offsets[i + 1] - offsets[i]));
    }
    ++rounds;
  }
  return rounds;
}

CutResult min_2respect(const RootedSpanTree& t, CostProvider& provider, const TwoRespectOptions& options,
                       TwoRespectTrace* trace) {
  TwoRespectRun run(t, provider.local_graph(), provider.local_is_proxy(), options);
  TwoRespectRun* runs[] = {&run};
  run_lockstep(runs, provider);
  if (trace) *trace = run.trace();
  return run.result();
}

}  // namespace mincut
