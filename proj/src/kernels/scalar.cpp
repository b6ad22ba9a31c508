#include "mincut/kernels.hpp"

namespace mincut::kernels::scalar {

Weight crossing_weight(const EdgeArrays& edges, std::span<const std::int32_t> side) {
  // m < 2^31 edges of weight <= 2^32 cannot overflow 64 bits.
  std::uint64_t total = 0;
  const std::size_t m = edges.u.size();
  for (std::size_t i = 0; i < m; ++i) {
    const std::uint64_t mask = 0 - static_cast<std::uint64_t>(side[edges.u[i]] ^ side[edges.v[i]]);
    total += edges.w[i] & mask;
  }
  return static_cast<Weight>(total);
}

namespace {

inline bool in_range(std::int32_t x, std::int32_t lo, std::int32_t hi) { return lo <= x && x <= hi; }

}  // namespace

void apply_update(RangeCounterBank::Lanes l, std::int32_t a, std::int32_t b, std::int64_t w) {
  for (std::size_t i = 0; i < l.padded; ++i) {
    const bool a_in_a = in_range(a, l.a_lo1[i], l.a_hi1[i]) || in_range(a, l.a_lo2[i], l.a_hi2[i]);
    const bool b_in_a = in_range(b, l.a_lo1[i], l.a_hi1[i]) || in_range(b, l.a_lo2[i], l.a_hi2[i]);
    bool a_in_b;
    bool b_in_b;
    if (l.b_comp[i] != 0) {
      a_in_b = !a_in_a;
      b_in_b = !b_in_a;
    } else {
      a_in_b = in_range(a, l.b_lo1[i], l.b_hi1[i]) || in_range(a, l.b_lo2[i], l.b_hi2[i]);
      b_in_b = in_range(b, l.b_lo1[i], l.b_hi1[i]) || in_range(b, l.b_lo2[i], l.b_hi2[i]);
    }
    if ((a_in_a && b_in_b) || (b_in_a && a_in_b)) l.acc[i] += w;
  }
}

}  // namespace mincut::kernels::scalar
