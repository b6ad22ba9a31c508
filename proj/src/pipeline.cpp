#include "mincut/pipeline.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <deque>
#include <memory>
#include <set>

#include "mincut/packing.hpp"
#include "mincut/query.hpp"
#include "mincut/stream.hpp"
#include "mincut/two_respect.hpp"

namespace mincut {

const char* to_string(ExecutionMode mode) {
  switch (mode) {
    case ExecutionMode::kSequential: return "sequential";
    case ExecutionMode::kCutQuery: return "cut-query";
    case ExecutionMode::kStreaming: return "streaming";
  }
  return "unknown";
}

std::optional<ExecutionMode> parse_mode(std::string_view name) {
  if (name == "sequential") return ExecutionMode::kSequential;
  if (name == "cut-query") return ExecutionMode::kCutQuery;
  if (name == "streaming") return ExecutionMode::kStreaming;
  return std::nullopt;
}

namespace {

double ceil_log2(Vertex n) { return n <= 1 ? 1.0 : static_cast<double>(std::bit_width(static_cast<std::uint64_t>(n - 1))); }

}  // namespace

PipelineResult min_cut_pipeline(const WeightedGraph& g, const PipelineOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  if (g.n() < 2) throw GraphError(GraphErrorCode::kTooFewVertices, "a cut needs at least two vertices");
  ProxyOptions proxy_options = options.proxy;
  proxy_options.epsilon = options.epsilon;
  forest_cap(g.n(), proxy_options);  // validates epsilon
  const Vertex n = g.n();
  std::mt19937_64 rng(options.seed);

  std::optional<CutOracle> oracle;
  std::optional<StreamHarness> harness;
  WeightedGraph proxy;
  const WeightedGraph* host = &g;
  std::unique_ptr<CostProvider> provider;
  switch (options.mode) {
    case ExecutionMode::kSequential: {
      if (!g.connected()) throw GraphError(GraphErrorCode::kDisconnected, "input graph is disconnected");
      const double threshold = options.sparsify_factor * n * ceil_log2(n) * ceil_log2(n);
      if (static_cast<double>(g.m()) > threshold) {
        proxy = build_proxy_direct(g, proxy_options);
        host = &proxy;
      }
      provider = std::make_unique<SequentialProvider>(g);
      break;
    }
    case ExecutionMode::kCutQuery:
      oracle.emplace(g);
      proxy = build_proxy_oracle(*oracle, proxy_options, rng);
      host = &proxy;
      provider = std::make_unique<QueryProvider>(*oracle, proxy);
      break;
    case ExecutionMode::kStreaming: {
      harness.emplace(g, options.churn, rng());
      if (options.word_budget_factor > 0) {
        const double lg = std::log2(static_cast<double>(n));
        // A positive factor never rounds down to 0, which would mean "no budget".
        harness->set_budget(std::max<std::uint64_t>(1, static_cast<std::uint64_t>(options.word_budget_factor * n * lg * lg * lg)));
      }
      proxy = build_proxy_stream(*harness, proxy_options, rng());
      host = &proxy;
      provider = std::make_unique<StreamProvider>(*harness, proxy);
      break;
    }
  }
  // Peeled forests span every component, so this also catches a
  // disconnected input behind an oracle or a stream.
  if (!host->connected()) throw GraphError(GraphErrorCode::kDisconnected, "input graph is disconnected");

  const std::size_t k = options.trees ? options.trees
                                      : std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(options.c2 * std::log(n))));
  std::deque<RootedSpanTree> trees;
  std::set<std::vector<std::pair<Vertex, Vertex>>> seen;
  std::size_t guesses = 0;
  for (double guess : lambda_schedule(*host)) {
    ++guesses;
    const auto skeleton = build_skeleton(*host, options.epsilon, guess, rng, options.c1);
    for (const auto& ids : greedy_pack(skeleton.graph, k).trees) {
      std::vector<std::pair<Vertex, Vertex>> pairs;
      for (EdgeId id : ids) pairs.emplace_back(skeleton.graph.edge(id).u, skeleton.graph.edge(id).v);
      if (seen.insert(pairs).second) trees.push_back(build_rooted_tree(skeleton.graph, pairs, 0));
    }
    // Smaller guesses only raise the rate; once it is 1 the skeleton is the host.
    if (skeleton.rate >= 1) break;
  }
  if (harness) harness->track(2 * static_cast<std::uint64_t>(n) * trees.size());

  std::vector<std::unique_ptr<TwoRespectRun>> runs;
  std::vector<TwoRespectRun*> handles;
  for (const auto& t : trees) {
    TwoRespectOptions run_options;
    run_options.sample_multiplier = options.sample_multiplier;
    run_options.seed = rng();
    runs.push_back(std::make_unique<TwoRespectRun>(t, provider->local_graph(), provider->local_is_proxy(), run_options));
    handles.push_back(runs.back().get());
  }

  PipelineResult result;
  result.rounds = run_lockstep(handles, *provider);
  std::size_t best = 0;
  std::uint64_t probes = 0;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    probes += runs[i]->trace().probes;
    if (runs[i]->result().value < runs[best]->result().value) best = i;
  }
  result.cut = runs[best]->result();
  result.stats = provider->stats();
  result.stats.probes = probes;
  result.stats.trees_packed = trees.size();
  result.stats.lambda_guesses = guesses;
  result.stats.wall_ms = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
  return result;
}

}  // namespace mincut
