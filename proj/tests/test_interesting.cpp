#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

#include <bit>

#include "interest_oracle.hpp"
#include "mincut/interesting.hpp"

using namespace mincut;
using testing::gstar;
using testing::gstar_tree;

namespace {

std::size_t boundary_k(Vertex n) { return 4 * static_cast<std::size_t>(std::bit_width(static_cast<unsigned>(n - 1))); }

bool bundle_has(const std::vector<EdgePoint>& bundle, const WeightedGraph& g, Vertex a, Vertex b) {
  const auto id = g.find_edge(a, b);
  return std::any_of(bundle.begin(), bundle.end(), [&](const EdgePoint& p) { return p.id == *id; });
}

}  // namespace

TEST_CASE("weight classes of the reference graph") {
  const auto g = gstar();
  const auto t = gstar_tree(g);
  const WeightClassIndex w(g, t, 1);
  REQUIRE(w.class_count() == 3);
  CHECK(w.class_size(0) == 4);
  CHECK(w.class_size(1) == 1);
  CHECK(w.class_size(2) == 1);

  const auto wide = WeightedGraph::from_edges(3, std::vector<Edge>{{0, 1, 1}, {1, 2, 1u << 20}});
  const auto tw = build_rooted_tree(wide, std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {1, 2}}, 0);
  const WeightClassIndex ww(wide, tw, 1);
  CHECK(ww.class_count() == 21);
  int empty = 0;
  for (int c = 0; c < ww.class_count(); ++c) empty += ww.sampler(c) == nullptr;
  CHECK(empty == 19);
  CHECK(weight_class(1) == 0);
  CHECK(weight_class(4) == 2);
  CHECK(weight_class(7) == 2);
}

TEST_CASE("boundary samples on the reference graph") {
  const auto g = gstar();
  const auto t = gstar_tree(g);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const WeightClassIndex w(g, t, seed);
    const auto at2 = sample_boundary(w, t, 2, 1);
    CHECK(bundle_has(at2, g, 2, 4));  // the only point of class [4,8)
    const auto at1 = sample_boundary(w, t, 1, 1);
    CHECK(bundle_has(at1, g, 2, 4));
    for (const auto& p : at1) {
      const bool in_x = t.is_ancestor(1, t.at_po(p.x));
      const bool in_y = t.is_ancestor(1, t.at_po(p.y));
      CHECK(in_x != in_y);
    }
  }
  const auto leafy = load_graph("p 3 2\n0 1 5\n1 2 5\n");
  const auto tl = build_rooted_tree(leafy, std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {1, 2}}, 0);
  const auto only = sample_boundary(WeightClassIndex(leafy, tl, 3), tl, 2, 4);
  REQUIRE(only.size() == 1);
  CHECK(only[0].id == *leafy.find_edge(1, 2));
}

TEST_CASE("verify_interest on the reference graph") {
  const auto g = gstar();
  const auto t = gstar_tree(g);
  const auto d = decompose(t);
  SequentialProvider provider(g);
  CHECK(verify_interest(provider, t, {2, {4, 1}, InterestKind::kCross}, false));
  CHECK(verify_interest(provider, t, {1, {4, 1}, InterestKind::kCross}, false));
  CHECK(verify_interest(provider, t, {1, {3, 1}, InterestKind::kCross}, false));
  CHECK(verify_interest(provider, t, {1, {2, 0}, InterestKind::kDown}, true));
  CHECK_THROWS(verify_interest(provider, t, {1, {2, 0}, InterestKind::kCross}, false));

  // A partner with no cross weight is never interesting.
  const auto path = load_graph("p 4 3\n0 1 1\n0 2 1\n2 3 1\n");
  const auto tp = build_rooted_tree(path, std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {0, 2}, {2, 3}}, 0);
  SequentialProvider pp(path);
  CHECK_FALSE(verify_interest(pp, tp, {1, {3, 1}, InterestKind::kCross}, false));

  const WeightClassIndex w(g, t, 5);
  const auto [cross, down] = interesting_paths_for_edge(t, d, 2, sample_boundary(w, t, 2, 16), provider);
  CHECK(cross == std::set<int>{1});
  CHECK(down.empty());
}

TEST_CASE("pair accumulator canonicalizes and deduplicates") {
  const auto g = gstar();
  const auto t = gstar_tree(g);
  const auto d = decompose(t);
  PairAccumulator acc;
  acc.accumulate(d, 0, 1, 2, PairKind::kCross);
  acc.accumulate(d, 1, 0, 4, PairKind::kCross);
  acc.accumulate(d, 0, 1, 2, PairKind::kCross);
  acc.accumulate(d, 0, 1, 1, PairKind::kCross);
  acc.accumulate(d, 1, 0, 3, PairKind::kCross);
  CHECK(acc.size() == 1);
  const auto tuples = acc.drain(d);
  REQUIRE(tuples.size() == 1);
  CHECK(tuples[0].p == 0);
  CHECK(tuples[0].q == 1);
  CHECK(tuples[0].marks_p == std::vector<Vertex>{1, 2});
  CHECK(tuples[0].marks_q == std::vector<Vertex>{3, 4});

  PairAccumulator one_sided;
  one_sided.accumulate(d, 0, 1, 2, PairKind::kCross);
  CHECK(one_sided.drain(d).empty());

  PairAccumulator down;
  down.accumulate(d, 1, 0, 3, PairKind::kDown);
  const auto dt = down.drain(d);
  REQUIRE(dt.size() == 1);
  CHECK(dt[0].marks_q == std::vector<Vertex>{1, 2});
}

TEST_CASE("reference graph: every edge verifies against the other path") {
  const auto g = gstar();
  const auto t = gstar_tree(g);
  const auto d = decompose(t);
  SequentialProvider provider(g);
  const WeightClassIndex w(g, t, 9);
  PairAccumulator acc;
  for (Vertex u : t.edge_children()) {
    const auto [cross, down] = interesting_paths_for_edge(t, d, u, sample_boundary(w, t, u, 8), provider);
    for (int q : cross) acc.accumulate(d, d.path_of(u), q, u, PairKind::kCross);
  }
  const auto tuples = acc.drain(d);
  REQUIRE(tuples.size() == 1);
  CHECK(tuples[0].marks_p == std::vector<Vertex>{1, 2});
  CHECK(tuples[0].marks_q == std::vector<Vertex>{3, 4});
}

TEST_CASE("property: interest structure and discovery coverage") {
  std::mt19937_64 rng(606);
  int instances = 0, covered = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const Vertex n = 3 + static_cast<Vertex>(rng() % 10);
    const auto g = testing::random_graph(n, static_cast<int>(rng() % (3 * n)), 10, rng);
    const auto t = build_rooted_tree(g, testing::random_spanning_tree(g, rng), static_cast<Vertex>(rng() % n));
    const auto d = decompose(t);
    const auto table = testing::interest_oracle(g, t);
    SequentialProvider provider(g);
    const WeightClassIndex w(g, t, rng());
    for (Vertex u : t.edge_children()) {
      const auto& cross = table.cross[static_cast<std::size_t>(u)];
      const auto& down = table.down[static_cast<std::size_t>(u)];
      std::set<int> want_cross, want_down;
      for (Vertex v : t.edge_children()) {
        const auto vi = static_cast<std::size_t>(v);
        if (cross[vi]) {
          want_cross.insert(d.path_of(v));
          for (Vertex x : t.edge_children()) {
            if (cross[static_cast<std::size_t>(x)]) CHECK((t.is_ancestor(x, v) || t.is_ancestor(v, x)));
          }
          const Vertex p = t.parent(v);
          if (p != t.root() && !t.is_ancestor(p, u)) CHECK(cross[static_cast<std::size_t>(p)]);
        }
        if (down[vi]) {
          if (d.path_of(v) != d.path_of(u)) want_down.insert(d.path_of(v));
          for (Vertex x : t.edge_children()) {
            if (down[static_cast<std::size_t>(x)]) CHECK((t.is_ancestor(x, v) || t.is_ancestor(v, x)));
          }
          const Vertex p = t.parent(v);
          if (p != u) CHECK(down[static_cast<std::size_t>(p)]);
        }
      }
      want_cross.erase(d.path_of(u));
      const auto [got_cross, got_down] =
          interesting_paths_for_edge(t, d, u, sample_boundary(w, t, u, boundary_k(n)), provider);
      ++instances;
      const bool ok = std::includes(got_cross.begin(), got_cross.end(), want_cross.begin(), want_cross.end()) &&
                      std::includes(got_down.begin(), got_down.end(), want_down.begin(), want_down.end());
      covered += ok;
      CHECK(got_cross.size() <= static_cast<std::size_t>(std::bit_width(static_cast<unsigned>(n))));
    }
  }
  CHECK(covered >= instances * 99 / 100);
}
