#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

#include <bit>

#include "mincut/oracle.hpp"
#include "mincut/two_respect.hpp"

using namespace mincut;
using testing::gstar;
using testing::gstar_tree;

namespace {

RootedSpanTree tree_of(const WeightedGraph& g, std::vector<std::pair<Vertex, Vertex>> edges, Vertex root = 0) {
  return build_rooted_tree(g, edges, root);
}

std::size_t log2_ceil(Vertex n) { return static_cast<std::size_t>(std::bit_width(static_cast<unsigned>(n - 1))); }

}  // namespace

TEST_CASE("reference graph") {
  const auto g = gstar();
  const auto t = gstar_tree(g);
  SequentialProvider provider(g);
  TwoRespectTrace trace;
  const auto r = min_2respect(t, provider, {}, &trace);
  CHECK(r.value == 2);
  REQUIRE(r.certificate);
  CHECK(*r.certificate == TreeEdgePair::orthogonal(2, 4));  // ties with {0}; smaller post-order wins
  CHECK(r.value == oracle_min_cut(g).value);
  REQUIRE(trace.tuples.size() == 1);
  CHECK(trace.tuples[0].kind == PairKind::kCross);
  CHECK(trace.tuples[0].marks_p == std::vector<Vertex>{1, 2});
  CHECK(trace.tuples[0].marks_q == std::vector<Vertex>{3, 4});
}

TEST_CASE("star and path") {
  const auto star = load_graph("p 5 4\n0 1 3\n0 2 1\n0 3 2\n0 4 5\n");
  const auto ts = tree_of(star, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  SequentialProvider ps(star);
  const auto rs = min_2respect(ts, ps);
  CHECK(rs.value == 1);
  CHECK(*rs.certificate == TreeEdgePair::single(2));
  CHECK(*rs.partition == testing::mask_of(5, {2}));

  const auto path = load_graph("p 6 6\n0 1 5\n1 2 5\n2 3 1\n3 4 5\n4 5 5\n0 5 1\n");
  const auto tp = tree_of(path, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});
  SequentialProvider pp(path);
  const auto rp = min_2respect(tp, pp);
  CHECK(rp.value == 2);
  CHECK(*rp.certificate == TreeEdgePair::single(3));
}

TEST_CASE("two vertices") {
  const auto g = load_graph("p 2 1\n0 1 7\n");
  const auto t = tree_of(g, {{0, 1}});
  SequentialProvider provider(g);
  TwoRespectTrace trace;
  const auto r = min_2respect(t, provider, {}, &trace);
  CHECK(r.value == 7);
  CHECK(trace.rounds == 1);
}

TEST_CASE("property: matches the exhaustive 2-respecting oracle") {
  std::mt19937_64 rng(2024);
  int mismatches = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const Vertex n = 2 + static_cast<Vertex>(rng() % 24);
    const std::uint64_t wmax = trial % 3 == 0 ? (1ULL << 30) : trial % 3 == 1 ? 1 : 100;
    const auto g = testing::random_graph(n, static_cast<int>(rng() % (4 * n)), wmax, rng);
    const auto t = build_rooted_tree(g, testing::random_spanning_tree(g, rng), static_cast<Vertex>(rng() % n));
    SequentialProvider provider(g);
    TwoRespectOptions options;
    options.seed = rng();
    TwoRespectTrace trace;
    const auto got = min_2respect(t, provider, options, &trace);
    const auto want = oracle_2respect_min(g, t);
    if (got.value != want.value || *got.certificate != *want.certificate) ++mismatches;
    CHECK(cut_of_partition(g, *got.partition) == got.value);
    CHECK(trace.rounds <= log2_ceil(n) + 2);
    CHECK(trace.step5_marks <= 8 * static_cast<std::size_t>(n) * log2_ceil(n) * log2_ceil(n) + 8);
  }
  CHECK(mismatches <= 5);
}

TEST_CASE("lockstep runs share rounds") {
  std::mt19937_64 rng(77);
  const auto g = testing::random_graph(40, 120, 50, rng);
  std::vector<RootedSpanTree> trees;
  for (int i = 0; i < 4; ++i) trees.push_back(build_rooted_tree(g, testing::random_spanning_tree(g, rng), 0));
  SequentialProvider provider(g);
  std::vector<std::unique_ptr<TwoRespectRun>> runs;
  std::vector<TwoRespectRun*> ptrs;
  std::size_t max_rounds = 0;
  for (const auto& t : trees) {
    runs.push_back(std::make_unique<TwoRespectRun>(t, g, false, TwoRespectOptions{}));
    ptrs.push_back(runs.back().get());
    SequentialProvider single(g);
    TwoRespectTrace trace;
    min_2respect(t, single, {}, &trace);
    max_rounds = std::max(max_rounds, trace.rounds);
  }
  const auto rounds = run_lockstep(ptrs, provider);
  CHECK(rounds == max_rounds);
  for (std::size_t i = 0; i < trees.size(); ++i) {
    CHECK(runs[i]->result().value == oracle_2respect_min(g, trees[i]).value);
  }
}
