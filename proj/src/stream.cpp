#include "mincut/stream.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <tuple>
#include <unordered_map>

namespace mincut {

namespace {

constexpr std::uint64_t kPrime = (1ULL << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  std::uint64_t r = static_cast<std::uint64_t>(p & kPrime) + static_cast<std::uint64_t>(p >> 61);
  if (r >= kPrime) r -= kPrime;
  return r;
}

std::uint64_t addmod(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = a + b;
  if (r >= kPrime) r -= kPrime;
  return r;
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, base);
    base = mulmod(base, base);
    e >>= 1;
  }
  return r;
}

std::uint64_t to_field(std::int64_t v) {
  if (v >= 0) return static_cast<std::uint64_t>(v) % kPrime;
  const std::uint64_t m = static_cast<std::uint64_t>(-(v + 1)) % kPrime + 1;
  return m == kPrime ? 0 : kPrime - m;
}

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

StreamHarness::StreamHarness(const WeightedGraph& g, double churn, std::uint64_t seed) : n_(g.n()) {
  if (churn < 0) throw std::invalid_argument("churn rate must be non-negative");
  std::mt19937_64 rng(seed);
  // (key, sequence, update); sorting by key interleaves the updates.
  std::vector<std::tuple<std::uint64_t, std::size_t, StreamUpdate>> events;
  std::uint64_t max_w = 1;
  for (const auto& e : g.edges()) {
    events.emplace_back(rng(), events.size(), StreamUpdate{e.u, e.v, e.w, true});
    max_w = std::max(max_w, e.w);
  }
  const auto pairs = static_cast<std::size_t>(std::llround(churn * static_cast<double>(g.m())));
  for (std::size_t i = 0; i < pairs && n_ >= 2; ++i) {
    StreamUpdate up;
    if (g.m() > 0 && (rng() & 1)) {
      const auto& e = g.edge(static_cast<EdgeId>(rng() % static_cast<std::uint64_t>(g.m())));
      up = {e.u, e.v, e.w, true};
    } else {
      const auto a = static_cast<Vertex>(rng() % static_cast<std::uint64_t>(n_));
      auto b = static_cast<Vertex>(rng() % static_cast<std::uint64_t>(n_ - 1));
      if (b >= a) ++b;
      up = {std::min(a, b), std::max(a, b), 1 + rng() % max_w, true};
    }
    auto k1 = rng(), k2 = rng();
    if (k1 > k2) std::swap(k1, k2);
    events.emplace_back(k1, events.size(), up);
    up.insert = false;
    events.emplace_back(k2, events.size(), up);
  }
  std::sort(events.begin(), events.end(),
            [](const auto& a, const auto& b) { return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b)); });
  updates_.reserve(events.size());
  for (const auto& ev : events) updates_.push_back(std::get<2>(ev));
}

void StreamHarness::track(std::uint64_t words) {
  live_ += words;
  peak_ = std::max(peak_, live_);
  if (budget_ && live_ > budget_) {
    throw BudgetExceeded("stream space budget exceeded: " + std::to_string(live_) + " > " + std::to_string(budget_) +
                         " words");
  }
}

std::uint64_t StreamHarness::headroom() const {
  if (!budget_) return UINT64_MAX;
  return budget_ > live_ ? budget_ - live_ : 0;
}

void StreamHarness::release(std::uint64_t words) { live_ -= std::min(words, live_); }

std::string StreamHarness::dump() const {
  std::ostringstream out;
  for (const auto& u : updates_) out << (u.insert ? '+' : '-') << ' ' << u.u << ' ' << u.v << ' ' << u.w << '\n';
  return out.str();
}

L0Family L0Family::make(std::uint64_t universe, int repetitions, std::uint64_t seed, std::uint64_t z) {
  if (universe == 0 || repetitions < 1) throw std::invalid_argument("sketch needs a universe and a repetition");
  L0Family f;
  f.universe = universe;
  f.levels = static_cast<int>(std::bit_width(universe)) + 1;
  f.repetitions = repetitions;
  f.z = z % kPrime;
  if (f.z < 2) f.z += 2;
  for (int r = 0; r < repetitions; ++r) f.level_seeds.push_back(splitmix(seed + 0x632be59bd9b4e019ULL * static_cast<std::uint64_t>(r + 1)));
  return f;
}

std::uint64_t L0Family::power(std::uint64_t index) const { return powmod(z, index); }

L0Sketch::L0Sketch(const L0Family& family)
    : family_(&family), cells_(static_cast<std::size_t>(family.levels * family.repetitions)) {}

void L0Sketch::update(std::uint64_t index, std::int64_t delta) { update(index, delta, family_->power(index)); }

void L0Sketch::update(std::uint64_t index, std::int64_t delta, std::uint64_t zpow) {
  if (index >= family_->universe) throw std::out_of_range("sketch index outside the universe");
  const std::uint64_t d = to_field(delta);
  const std::uint64_t di = mulmod(d, index % kPrime);
  const std::uint64_t dz = mulmod(d, zpow);
  const int levels = family_->levels;
  for (int r = 0; r < family_->repetitions; ++r) {
    const int depth = std::min(std::countr_zero(splitmix(index ^ family_->level_seeds[static_cast<std::size_t>(r)])), levels - 1);
    Cell* row = cells_.data() + static_cast<std::size_t>(r * levels);
    for (int l = 0; l <= depth; ++l) {
      row[l].sum += delta;
      row[l].index_sum = addmod(row[l].index_sum, di);
      row[l].print = addmod(row[l].print, dz);
    }
  }
}

void L0Sketch::merge(const L0Sketch& other, int sign) {
  if (other.family_ != family_) throw std::invalid_argument("sketches from different families");
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    const auto& o = other.cells_[i];
    auto& c = cells_[i];
    if (sign >= 0) {
      c.sum += o.sum;
      c.index_sum = addmod(c.index_sum, o.index_sum);
      c.print = addmod(c.print, o.print);
    } else {
      c.sum -= o.sum;
      c.index_sum = addmod(c.index_sum, o.index_sum ? kPrime - o.index_sum : 0);
      c.print = addmod(c.print, o.print ? kPrime - o.print : 0);
    }
  }
}

std::optional<std::pair<std::uint64_t, std::int64_t>> L0Sketch::recover() const {
  const int levels = family_->levels;
  for (int r = 0; r < family_->repetitions; ++r) {
    const Cell* row = cells_.data() + static_cast<std::size_t>(r * levels);
    int l = levels - 1;
    while (l >= 0 && row[l].sum == 0 && row[l].index_sum == 0 && row[l].print == 0) --l;
    if (l < 0) return std::nullopt;  // zero vector
    const Cell& c = row[l];
    if (c.sum == 0) continue;
    const std::uint64_t s = to_field(c.sum);
    const std::uint64_t index = mulmod(c.index_sum, powmod(s, kPrime - 2));
    if (index >= family_->universe) continue;
    if (mulmod(s, family_->power(index)) != c.print) continue;
    return std::make_pair(index, c.sum);
  }
  return std::nullopt;
}

bool L0Sketch::empty() const {
  const Cell& c = cells_[0];
  return c.sum == 0 && c.index_sum == 0 && c.print == 0;
}

void StreamProvider::batch_eval(std::span<const CostRequest> requests, std::vector<Weight>& out) {
  if (requests.empty()) return;
  struct Group {
    const RootedSpanTree* tree;
    kernels::RangeCounterBank bank;
  };
  std::vector<Group> groups;
  std::unordered_map<const RootedSpanTree*, std::size_t> group_of;
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  slots.reserve(requests.size());
  for (const auto& r : requests) {
    if (r.kind == CostRequest::Kind::kPairCut) check_pair(*r.tree, r.pair);
    auto [it, fresh] = group_of.try_emplace(r.tree, groups.size());
    if (fresh) groups.push_back({r.tree, {}});
    const auto sets = request_sets(r);
    slots.emplace_back(it->second, groups[it->second].bank.add(sets.a, sets.b, sets.b_is_complement));
  }
  h_.track(requests.size());
  h_.pass([&](const StreamUpdate& up) {
    const std::int64_t delta = up.insert ? static_cast<std::int64_t>(up.w) : -static_cast<std::int64_t>(up.w);
    for (auto& g : groups) kernels::apply_update(g.bank, g.tree->po(up.u), g.tree->po(up.v), delta);
  });
  h_.release(requests.size());
  out.reserve(out.size() + requests.size());
  for (const auto& [g, slot] : slots) out.push_back(groups[g].bank.value(slot));
}

RunStats StreamProvider::stats() const {
  RunStats s;
  s.passes = h_.passes();
  s.tracked_words = h_.tracked_words();
  return s;
}

}  // namespace mincut
