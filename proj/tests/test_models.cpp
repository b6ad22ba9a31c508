#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

#include <bit>
#include <map>
#include <sstream>

#include "mincut/proxy.hpp"
#include "mincut/query.hpp"
#include "mincut/stream.hpp"

using namespace mincut;
using testing::gstar;
using testing::gstar_tree;
using testing::mask_of;

namespace {

std::uint64_t log2_ceil(Vertex n) { return std::bit_width(static_cast<std::uint64_t>(n - 1)); }

// Net multiset of a stream as merged (u, v) -> weight.
std::map<std::pair<Vertex, Vertex>, std::int64_t> net_of(StreamHarness& h) {
  std::map<std::pair<Vertex, Vertex>, std::int64_t> net;
  h.pass([&](const StreamUpdate& up) {
    auto& w = net[{std::min(up.u, up.v), std::max(up.u, up.v)}];
    w += up.insert ? static_cast<std::int64_t>(up.w) : -static_cast<std::int64_t>(up.w);
  });
  std::erase_if(net, [](const auto& kv) { return kv.second == 0; });
  return net;
}

std::vector<CostRequest> every_request(const RootedSpanTree& t) {
  std::vector<CostRequest> out;
  const auto edges = t.edge_children();
  for (Vertex u : edges) {
    out.push_back(CostRequest::deg_subtree(t, u));
    out.push_back(CostRequest::pair_cut(t, TreeEdgePair::single(u)));
    for (Vertex v : edges) {
      if (u == v) continue;
      if (!t.is_ancestor(u, v) && !t.is_ancestor(v, u)) out.push_back(CostRequest::cross_sub(t, u, v));
      if (t.is_ancestor(u, v)) out.push_back(CostRequest::cross_nested(t, v, u));
      if (u < v) out.push_back(CostRequest::pair_cut(t, make_pair(t, u, v)));
    }
  }
  return out;
}

bool same_graph(const WeightedGraph& a, const WeightedGraph& b) {
  if (a.n() != b.n() || a.m() != b.m()) return false;
  for (EdgeId i = 0; i < a.m(); ++i) {
    const auto& x = a.edge(i);
    const auto& y = b.edge(i);
    if (x.u != y.u || x.v != y.v || x.w != y.w) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("cut oracle counts every query") {
  const auto g = gstar();
  CutOracle o(g);
  CHECK(o.cut(mask_of(5, {1, 2})) == 7);
  CHECK(o.cut(mask_of(5, {})) == 0);
  CHECK(o.queries() == 2);
  CHECK(oracle_cross_weight(o, mask_of(5, {1, 2}), mask_of(5, {3, 4})) == 6);
  CHECK(o.queries() == 5);
  CHECK(oracle_cross_weight(o, mask_of(5, {2}), mask_of(5, {4})) == 4);
  CHECK(oracle_cross_weight(o, mask_of(5, {0}), mask_of(5, {2})) == 0);
  CHECK(oracle_cross_weight(o, mask_of(5, {0, 1, 2}), mask_of(5, {3, 4})) == 7);  // A ∪ B = V
  CHECK_THROWS_AS(oracle_cross_weight(o, mask_of(5, {1, 2}), mask_of(5, {2, 3})), std::invalid_argument);
}

TEST_CASE("recover_crossing_edge on the reference graph") {
  const auto g = gstar();
  CutOracle o(g);
  std::mt19937_64 rng(1);
  const auto e = recover_crossing_edge(o, mask_of(5, {2}), rng, RecoverMode::kAny);
  REQUIRE(e);
  CHECK(((e->u == 1 && e->v == 2 && e->w == 1) || (e->u == 2 && e->v == 4 && e->w == 4)));
  CHECK(o.queries() <= 6 * log2_ceil(5));

  int heavy = 0;
  const int trials = 20000;
  for (int i = 0; i < trials; ++i) {
    const auto r = recover_crossing_edge(o, mask_of(5, {2}), rng, RecoverMode::kUniformRandom);
    heavy += r->u == 2 && r->v == 4;
  }
  CHECK(std::abs(heavy / double(trials) - 0.8) <= 0.02);

  // Nothing leaves U once its edges are known.
  const std::vector<Edge> known{{1, 2, 1}, {2, 4, 4}};
  const auto before = o.queries();
  CHECK_FALSE(recover_crossing_edge(o, mask_of(5, {2}), rng, RecoverMode::kAny, known));
  CHECK(o.queries() - before == 1);
  CHECK_FALSE(recover_crossing_edge(o, mask_of(5, {}), rng, RecoverMode::kAny));
}

TEST_CASE("property: recovered edges exist with their remaining weight") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const Vertex n = 2 + static_cast<Vertex>(rng() % 30);
    const auto g = testing::random_graph(n, static_cast<int>(rng() % (3 * n)), 20, rng);
    CutOracle o(g);
    VertexMask u(static_cast<std::size_t>(n), 0);
    for (auto& s : u) s = rng() & 1;
    u[0] = 1;
    u[static_cast<std::size_t>(n - 1)] = 0;
    std::vector<Edge> known;
    for (const auto& e : g.edges()) {
      if (rng() % 4 == 0) known.push_back(e);
    }
    const auto mode = trial % 2 ? RecoverMode::kAny : RecoverMode::kUniformRandom;
    const auto e = recover_crossing_edge(o, u, rng, mode, known);
    CHECK(o.queries() <= 6 * log2_ceil(n));
    bool exists = false;
    for (const auto& x : g.edges()) {
      const bool crossing = u[static_cast<std::size_t>(x.u)] != u[static_cast<std::size_t>(x.v)];
      const bool is_known = std::any_of(known.begin(), known.end(), [&](const Edge& k) { return k.u == x.u && k.v == x.v; });
      if (crossing && !is_known) exists = true;
      if (e && x.u == e->u && x.v == e->v) {
        CHECK(crossing);
        CHECK_FALSE(is_known);
        CHECK(x.w == e->w);
      }
    }
    CHECK(exists == e.has_value());
  }
}

TEST_CASE("query provider costs") {
  const auto g = gstar();
  const auto t = gstar_tree(g);
  CutOracle o(g);
  QueryProvider q(o, g);
  std::vector<Weight> out;
  const std::vector<CostRequest> one{CostRequest::pair_cut(t, TreeEdgePair::orthogonal(1, 3))};
  q.batch_eval(one, out);
  CHECK(out == std::vector<Weight>{2});
  CHECK(q.stats().queries == 1);
  const std::vector<CostRequest> mixed{CostRequest::deg_subtree(t, 1), CostRequest::cross_sub(t, 1, 3),
                                       CostRequest::cross_nested(t, 2, 1), CostRequest::pair_cut(t, TreeEdgePair::single(4))};
  q.batch_eval(mixed, out);
  CHECK(out == std::vector<Weight>{2, 7, 6, 4, 5});
  CHECK(q.stats().queries == 1 + 1 + 3 + 3 + 1);
}

TEST_CASE("stream harness keeps the net multiset") {
  const auto g = gstar();
  for (double churn : {0.0, 0.5, 3.0}) {
    StreamHarness h(g, churn, 11);
    CHECK(h.length() == static_cast<std::size_t>(g.m()) + 2 * static_cast<std::size_t>(std::llround(churn * g.m())));
    const auto net = net_of(h);
    REQUIRE(net.size() == static_cast<std::size_t>(g.m()));
    for (const auto& e : g.edges()) CHECK(net.at({e.u, e.v}) == static_cast<std::int64_t>(e.w));
  }
  StreamHarness h(g, 0.0, 3);
  std::istringstream lines(h.dump());
  std::string sign;
  Vertex u, v;
  std::uint64_t w;
  int count = 0;
  while (lines >> sign >> u >> v >> w) {
    CHECK(sign == "+");
    CHECK(g.find_edge(u, v));
    ++count;
  }
  CHECK(count == g.m());
}

TEST_CASE("stream provider: one pass per batch, churn cancels") {
  const auto g = gstar();
  const auto t = gstar_tree(g);
  for (double churn : {0.0, 0.5, 2.0}) {
    StreamHarness h(g, churn, 5);
    StreamProvider sp(h, g);
    std::vector<Weight> out;
    const auto requests = every_request(t);
    sp.batch_eval(requests, out);
    CHECK(sp.stats().passes == 1);
    CHECK(sp.stats().tracked_words == requests.size());
    CHECK(h.live_words() == 0);
    std::vector<Weight> deg;
    sp.batch_eval(std::vector<CostRequest>{CostRequest::deg_subtree(t, 1)}, deg);
    CHECK(deg == std::vector<Weight>{7});
    CHECK(sp.stats().passes == 2);
    sp.batch_eval({}, deg);
    CHECK(sp.stats().passes == 2);
  }
}

TEST_CASE("property: providers agree on every request") {
  std::mt19937_64 rng(8080);
  for (int trial = 0; trial < 60; ++trial) {
    const Vertex n = 2 + static_cast<Vertex>(rng() % 14);
    const auto g = testing::random_graph(n, static_cast<int>(rng() % (3 * n)), trial % 2 ? 10 : 1u << 30, rng);
    const auto t = build_rooted_tree(g, testing::random_spanning_tree(g, rng), static_cast<Vertex>(rng() % n));
    const auto requests = every_request(t);
    SequentialProvider seq(g);
    CutOracle o(g);
    QueryProvider q(o, g);
    StreamHarness h(g, 0.5, rng());
    StreamProvider s(h, g);
    std::vector<Weight> a, b, c;
    seq.batch_eval(requests, a);
    q.batch_eval(requests, b);
    s.batch_eval(requests, c);
    CHECK(a == b);
    CHECK(a == c);
    for (std::size_t i = 0; i < requests.size(); ++i) {
      if (requests[i].kind == CostRequest::Kind::kPairCut) {
        CHECK(a[i] == cut_of_partition(g, reconstruct_partition(t, requests[i].pair)));
      }
    }
  }
}

TEST_CASE("l0 sketch basics") {
  const auto f = L0Family::make(1000, 4, 9, 12345);
  L0Sketch s(f);
  CHECK(s.empty());
  CHECK_FALSE(s.recover());
  s.update(417, 6);
  const auto r = s.recover();
  REQUIRE(r);
  CHECK(r->first == 417);
  CHECK(r->second == 6);
  s.update(417, -6);
  CHECK(s.empty());
  CHECK_FALSE(s.recover());

  L0Sketch neg(f);
  neg.update(3, -5);
  CHECK(neg.recover()->second == -5);
  CHECK_THROWS(neg.update(1000, 1));

  // sketch(A) + sketch(B) - sketch(B) behaves like sketch(A).
  L0Sketch a(f), b(f);
  a.update(10, 2);
  a.update(20, 3);
  b.update(30, 7);
  b.update(10, -2);
  L0Sketch sum = a;
  sum.merge(b);
  sum.merge(b, -1);
  CHECK(sum.recover() == a.recover());
  L0Sketch other(L0Family::make(1000, 4, 10, 12345));
  CHECK_THROWS(sum.merge(other));
}

TEST_CASE("l0 sketch success rate and uniformity") {
  std::mt19937_64 rng(77);
  int ok = 0;
  const int sets = 1000;
  for (int i = 0; i < sets; ++i) {
    const auto f = L0Family::make(1 << 16, 4, rng(), rng());
    L0Sketch s(f);
    std::map<std::uint64_t, std::int64_t> truth;
    const int size = 1 + static_cast<int>(rng() % 200);
    for (int k = 0; k < size; ++k) {
      const auto idx = rng() % (1 << 16);
      const auto d = static_cast<std::int64_t>(rng() % 9) - 4;
      s.update(idx, d);
      truth[idx] += d;
    }
    std::erase_if(truth, [](const auto& kv) { return kv.second == 0; });
    const auto r = s.recover();
    if (truth.empty()) {
      ok += !r && s.empty();
    } else if (r) {
      ok += truth.count(r->first) && truth.at(r->first) == r->second;
    }
  }
  CHECK(ok >= sets * 99 / 100);

  std::map<std::uint64_t, int> hits;
  const int trials = 10000;
  for (int i = 0; i < trials; ++i) {
    const auto f = L0Family::make(1 << 16, 4, rng(), rng());
    L0Sketch s(f);
    for (std::uint64_t idx : {5u, 900u, 4242u, 60000u}) s.update(idx, 1);
    if (const auto r = s.recover()) ++hits[r->first];
  }
  int total = 0;
  for (const auto& [idx, c] : hits) total += c;
  CHECK(total >= trials * 99 / 100);
  for (const auto& [idx, c] : hits) CHECK(std::abs(c / double(total) - 0.25) <= 0.0125);
}

TEST_CASE("reservoir marginals") {
  const std::vector<int> two{0, 1};
  const std::vector<int> thirty = [] {
    std::vector<int> v(30);
    std::iota(v.begin(), v.end(), 0);
    return v;
  }();
  CHECK(reservoir_sample<int>(thirty, 30, 1) == thirty);
  CHECK_THROWS(Reservoir<int>(0, 1));

  const int trials = 100000;
  std::vector<int> ones(2), threes(30);
  for (int i = 0; i < trials; ++i) {
    for (int x : reservoir_sample<int>(two, 1, static_cast<std::uint64_t>(i))) ++ones[static_cast<std::size_t>(x)];
    for (int x : reservoir_sample<int>(thirty, 3, static_cast<std::uint64_t>(i) + 7919)) ++threes[static_cast<std::size_t>(x)];
  }
  for (int c : ones) CHECK(std::abs(c / double(trials) - 0.5) <= 0.01);
  for (int c : threes) CHECK(std::abs(c / double(trials) - 0.1) <= 0.01);
}

TEST_CASE("proxy graphs") {
  const auto g = gstar();
  ProxyOptions options;
  CHECK(forest_cap(5, options) == 30000);
  CHECK_THROWS(forest_cap(5, ProxyOptions{0.5}));
  CHECK(same_graph(build_proxy_direct(g, options), g));
  CutOracle o(g);
  std::mt19937_64 rng(4);
  CHECK(same_graph(build_proxy_oracle(o, options, rng), g));
  StreamHarness h(g, 0.5, 4);
  CHECK(same_graph(build_proxy_stream(h, options, 4), g));

  // A tree is captured whole by the first forest.
  const auto tree = load_graph("p 6 5\n0 1 3\n1 2 1\n1 3 9\n3 4 2\n3 5 2\n");
  ProxyOptions one;
  one.epsilon = 0.1;
  one.forest_factor = 0.0099 / std::bit_width(5u);
  CHECK(forest_cap(6, one) == 1);
  CHECK(same_graph(build_proxy_direct(tree, one), tree));
  CutOracle ot(tree);
  CHECK(same_graph(build_proxy_oracle(ot, one, rng), tree));
  StreamHarness ht(tree, 1.0, 9);
  CHECK(same_graph(build_proxy_stream(ht, one, 9), tree));
}

TEST_CASE("property: peeling recovers the graph; capped peeling gives spanning subgraphs") {
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 40; ++trial) {
    const Vertex n = 2 + static_cast<Vertex>(rng() % 40);
    const auto g = testing::random_graph(n, static_cast<int>(rng() % (6 * n)), 10, rng);
    ProxyOptions options;
    CutOracle o(g);
    CHECK(same_graph(build_proxy_oracle(o, options, rng), g));
    CHECK(o.queries() <= static_cast<std::uint64_t>(g.m() + 1) * (4 * log2_ceil(n) + 2) * 2 + 64 * static_cast<std::uint64_t>(n));
    StreamHarness h(g, 0.5, rng());
    CHECK(same_graph(build_proxy_stream(h, options, rng()), g));
    CHECK(h.live_words() == 3 * static_cast<std::uint64_t>(g.m()));

    ProxyOptions capped;
    capped.epsilon = 0.1;
    capped.forest_factor = 0.0199 / static_cast<double>(std::max<std::uint64_t>(1, log2_ceil(n)));  // two forests
    const auto d = build_proxy_direct(g, capped);
    CutOracle oc(g);
    const auto q = build_proxy_oracle(oc, capped, rng);
    StreamHarness hc(g, 0.5, rng());
    const auto s = build_proxy_stream(hc, capped, rng());
    for (const auto* p : {&d, &q, &s}) {
      CHECK(p->connected());
      CHECK(p->m() <= 2 * (n - 1));
      for (const auto& e : p->edges()) {
        const auto id = g.find_edge(e.u, e.v);
        REQUIRE(id);
        CHECK(g.edge(*id).w == e.w);
      }
    }
  }
}
