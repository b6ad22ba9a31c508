#include "mincut/proxy.hpp"

#include <bit>
#include <cmath>
#include <map>
#include <stdexcept>

#include "dsu.hpp"

namespace mincut {

namespace {

std::uint64_t ceil_log2(std::uint64_t x) { return x <= 1 ? 1 : std::bit_width(x - 1); }

WeightedGraph assemble(Vertex n, const std::vector<Edge>& edges) {
  return WeightedGraph::from_edges(n, edges, WeightedGraph::Connectivity::kAllow);
}

}  // namespace

std::size_t forest_cap(Vertex n, const ProxyOptions& options) {
  if (!(options.epsilon > 0 && options.epsilon <= 0.1)) throw std::invalid_argument("epsilon must lie in (0, 1/10]");
  const double t = options.forest_factor * static_cast<double>(ceil_log2(static_cast<std::uint64_t>(n))) /
                   (options.epsilon * options.epsilon);
  return static_cast<std::size_t>(std::max(1.0, std::ceil(t)));
}

WeightedGraph build_proxy_direct(const WeightedGraph& g, const ProxyOptions& options) {
  const std::size_t cap = forest_cap(g.n(), options);
  std::vector<Edge> kept;
  std::vector<EdgeId> rest(static_cast<std::size_t>(g.m()));
  for (EdgeId i = 0; i < g.m(); ++i) rest[static_cast<std::size_t>(i)] = i;
  for (std::size_t f = 0; f < cap && !rest.empty(); ++f) {
    Dsu dsu(static_cast<std::size_t>(g.n()));
    std::vector<EdgeId> next;
    for (EdgeId id : rest) {
      const auto& e = g.edge(id);
      if (dsu.unite(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v))) {
        kept.push_back(e);
      } else {
        next.push_back(id);
      }
    }
    rest.swap(next);
  }
  return assemble(g.n(), kept);
}

WeightedGraph build_proxy_oracle(CutOracle& o, const ProxyOptions& options, std::mt19937_64& rng) {
  const Vertex n = o.n();
  const auto un = static_cast<std::size_t>(n);
  const std::size_t cap = forest_cap(n, options);
  std::vector<Edge> kept;
  std::vector<char> isolated(un, 0);  // no edges left at this vertex
  for (std::size_t f = 0; f < cap; ++f) {
    Dsu dsu(un);
    std::vector<char> closed(un, 0);
    std::size_t added = 0;
    for (bool progress = true; progress;) {
      progress = false;
      std::map<std::size_t, std::vector<Vertex>> comps;
      for (Vertex v = 0; v < n; ++v) {
        if (!isolated[static_cast<std::size_t>(v)]) comps[dsu.find(static_cast<std::size_t>(v))].push_back(v);
      }
      std::vector<Edge> found;
      for (const auto& [root, members] : comps) {
        if (closed[root]) continue;
        VertexMask side(un, 0);
        for (Vertex v : members) side[static_cast<std::size_t>(v)] = 1;
        const auto e = recover_crossing_edge(o, side, rng, RecoverMode::kAny, kept);
        if (!e) {
          closed[root] = 1;
          if (members.size() == 1) isolated[static_cast<std::size_t>(members[0])] = 1;
          continue;
        }
        found.push_back(*e);
      }
      for (const auto& e : found) {
        if (dsu.unite(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v))) {
          kept.push_back(e);
          ++added;
          progress = true;
        }
      }
    }
    if (added == 0) break;
  }
  return assemble(n, kept);
}

WeightedGraph build_proxy_stream(StreamHarness& h, const ProxyOptions& options, std::uint64_t seed) {
  const Vertex n = h.n();
  const auto un = static_cast<std::size_t>(n);
  const std::size_t cap = forest_cap(n, options);
  const std::size_t rounds = ceil_log2(un) + 1;
  const std::size_t batch = std::max<std::size_t>(1, options.sketch_batch);
  const std::uint64_t universe = static_cast<std::uint64_t>(un) * un;
  std::mt19937_64 rng(seed);
  const std::uint64_t z = rng();

  auto coordinate = [&](Vertex a, Vertex b) {
    return static_cast<std::uint64_t>(std::min(a, b)) * un + static_cast<std::uint64_t>(std::max(a, b));
  };

  std::vector<Edge> kept;
  std::vector<char> isolated(un, 0);
  std::size_t forests = 0;
  bool exhausted = n < 2;
  while (!exhausted && forests < cap) {
    std::vector<Vertex> active;
    std::vector<std::int64_t> pos(un, -1);
    for (Vertex v = 0; v < n; ++v) {
      if (!isolated[static_cast<std::size_t>(v)]) {
        pos[static_cast<std::size_t>(v)] = static_cast<std::int64_t>(active.size());
        active.push_back(v);
      }
    }
    // As many forests per pass as the space budget allows, at least one.
    const std::uint64_t per_forest =
        active.size() * rounds * L0Sketch(L0Family::make(universe, options.sketch_repetitions, 0, z)).words();
    const std::uint64_t room = h.headroom() / std::max<std::uint64_t>(1, per_forest);
    const std::size_t slots = std::max<std::size_t>(1, std::min<std::uint64_t>({batch, cap - forests, room}));
    std::vector<L0Family> families;
    families.reserve(slots * rounds);
    for (std::size_t c = 0; c < slots * rounds; ++c) {
      families.push_back(L0Family::make(universe, options.sketch_repetitions, rng(), z));
    }
    std::vector<std::vector<L0Sketch>> copies(slots * rounds);
    std::uint64_t words = 0;
    for (std::size_t c = 0; c < copies.size(); ++c) {
      copies[c].assign(active.size(), L0Sketch(families[c]));
      for (const auto& s : copies[c]) words += s.words();
    }
    h.track(words);
    const std::size_t kept_before = kept.size();

    h.pass([&](const StreamUpdate& up) {
      const std::uint64_t index = coordinate(up.u, up.v);
      const std::uint64_t zpow = families[0].power(index);
      const auto w = static_cast<std::int64_t>(up.w);
      const std::int64_t delta = up.insert ? w : -w;
      for (const Vertex x : {up.u, up.v}) {
        const auto p = pos[static_cast<std::size_t>(x)];
        if (p < 0) continue;
        const std::int64_t signed_delta = x == std::min(up.u, up.v) ? delta : -delta;
        for (auto& copy : copies) copy[static_cast<std::size_t>(p)].update(index, signed_delta, zpow);
      }
    });

    auto subtract = [&](std::size_t copy, const Edge& e) {
      const std::uint64_t index = coordinate(e.u, e.v);
      const std::uint64_t zpow = families[0].power(index);
      const auto w = static_cast<std::int64_t>(e.w);
      for (const Vertex x : {e.u, e.v}) {
        const auto p = pos[static_cast<std::size_t>(x)];
        if (p >= 0) copies[copy][static_cast<std::size_t>(p)].update(index, x == std::min(e.u, e.v) ? -w : w, zpow);
      }
    };

    // Edges peeled in earlier batches; edges found below are subtracted from
    // the later copies as soon as they are kept.
    for (std::size_t c = 0; c < copies.size(); ++c) {
      for (const auto& e : kept) subtract(c, e);
    }
    for (std::size_t slot = 0; slot < slots; ++slot) {
      bool any = false;
      for (std::size_t i = 0; i < active.size(); ++i) {
        if (copies[slot * rounds][i].empty()) {
          isolated[static_cast<std::size_t>(active[i])] = 1;
        } else {
          any = true;
        }
      }
      if (!any) {
        exhausted = true;
        break;
      }
      ++forests;

      Dsu dsu(un);
      std::vector<char> closed(un, 0);
      for (std::size_t r = 0; r < rounds; ++r) {
        const auto& copy = copies[slot * rounds + r];
        std::map<std::size_t, std::vector<std::size_t>> comps;  // root -> positions in active
        for (std::size_t i = 0; i < active.size(); ++i) {
          if (!isolated[static_cast<std::size_t>(active[i])]) {
            comps[dsu.find(static_cast<std::size_t>(active[i]))].push_back(i);
          }
        }
        std::vector<Edge> found;
        bool open = false;
        for (const auto& [root, members] : comps) {
          if (closed[root]) continue;
          L0Sketch sum = copy[members[0]];
          for (std::size_t k = 1; k < members.size(); ++k) sum.merge(copy[members[k]]);
          if (sum.empty()) {
            closed[root] = 1;
            continue;
          }
          open = true;
          const auto rec = sum.recover();
          if (!rec) continue;
          const auto a = static_cast<Vertex>(rec->first / un);
          const auto b = static_cast<Vertex>(rec->first % un);
          if (a >= b) continue;
          const bool a_in = dsu.find(static_cast<std::size_t>(a)) == root;
          const bool b_in = dsu.find(static_cast<std::size_t>(b)) == root;
          // The sign says which endpoint is inside; anything else is a bad decode.
          if (a_in == b_in || (rec->second > 0) != a_in) continue;
          found.push_back({a, b, static_cast<std::uint64_t>(rec->second > 0 ? rec->second : -rec->second)});
        }
        for (const auto& e : found) {
          if (dsu.unite(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v))) {
            kept.push_back(e);
            for (std::size_t later = (slot + 1) * rounds; later < copies.size(); ++later) subtract(later, e);
          }
        }
        if (!open) break;
      }
    }
    h.release(words);
    h.track(3 * (kept.size() - kept_before));  // peeled edges stay resident
  }
  return assemble(n, kept);
}

}  // namespace mincut
