#pragma once

// Data-parallel inner loops shared by the exact cut evaluators.
//
// Every kernel has a scalar reference implementation and an AVX2 variant.
// The variant is picked once at startup from CPUID and can be pinned for
// testing; both paths must return bit-identical results.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mincut/weight.hpp"

namespace mincut::kernels {

enum class Isa { kScalar, kAvx2 };

/// Best instruction set supported by the running CPU (and compiled in).
Isa detected_isa();
/// Instruction set currently used by the dispatching entry points.
Isa active_isa();
/// Pins the dispatch target. Requests above detected_isa() are clamped.
void set_active_isa(Isa isa);
const char* isa_name(Isa isa);

/// Structure-of-arrays view over an edge list.
struct EdgeArrays {
  std::span<const std::int32_t> u;
  std::span<const std::int32_t> v;
  std::span<const std::uint64_t> w;
};

/// Total weight of edges whose endpoints carry different `side` labels.
/// `side` holds 0 or 1 per vertex.
Weight crossing_weight(const EdgeArrays& edges, std::span<const std::int32_t> side);

/// A bank of stream counters, one per registered cut request.
///
/// Counter i accumulates the signed weight of every update (a, b, w) with one
/// endpoint in A_i and the other in B_i. A_i is the union of two closed
/// coordinate ranges; B_i is either two more ranges or the complement of A_i.
/// Empty ranges are encoded as lo > hi.
class RangeCounterBank {
 public:
  struct Ranges {
    std::int32_t lo1 = 1, hi1 = 0, lo2 = 1, hi2 = 0;
  };

  /// Registers a counter and returns its slot.
  std::size_t add(Ranges a, Ranges b, bool b_is_complement);
  std::size_t size() const { return count_; }
  void clear();

  std::int64_t value(std::size_t i) const { return acc_[i]; }

  // Raw lanes; padded to a multiple of 8 with never-matching counters.
  struct Lanes {
    const std::int32_t* a_lo1;
    const std::int32_t* a_hi1;
    const std::int32_t* a_lo2;
    const std::int32_t* a_hi2;
    const std::int32_t* b_lo1;
    const std::int32_t* b_hi1;
    const std::int32_t* b_lo2;
    const std::int32_t* b_hi2;
    const std::int32_t* b_comp;
    std::int64_t* acc;
    std::size_t padded;
  };
  Lanes lanes();

 private:
  void pad();

  std::vector<std::int32_t> a_lo1_, a_hi1_, a_lo2_, a_hi2_;
  std::vector<std::int32_t> b_lo1_, b_hi1_, b_lo2_, b_hi2_;
  std::vector<std::int32_t> b_comp_;
  std::vector<std::int64_t> acc_;
  std::size_t count_ = 0;
};

/// Feeds one stream update with endpoint coordinates (a, b) to every counter.
void apply_update(RangeCounterBank& bank, std::int32_t a, std::int32_t b, std::int64_t w);

namespace scalar {
Weight crossing_weight(const EdgeArrays& edges, std::span<const std::int32_t> side);
void apply_update(RangeCounterBank::Lanes lanes, std::int32_t a, std::int32_t b, std::int64_t w);
}  // namespace scalar

namespace avx2 {
Weight crossing_weight(const EdgeArrays& edges, std::span<const std::int32_t> side);
void apply_update(RangeCounterBank::Lanes lanes, std::int32_t a, std::int32_t b, std::int64_t w);
}  // namespace avx2

}  // namespace mincut::kernels
