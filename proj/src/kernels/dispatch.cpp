#include <atomic>

#include "mincut/kernels.hpp"

namespace mincut::kernels {

namespace {

Isa probe_cpu() {
#if defined(MINCUT_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2")) return Isa::kAvx2;
#endif
  return Isa::kScalar;
}

std::atomic<Isa>& active_slot() {
  static std::atomic<Isa> slot{detected_isa()};
  return slot;
}

}  // namespace

Isa detected_isa() {
  static const Isa isa = probe_cpu();
  return isa;
}

Isa active_isa() { return active_slot().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  if (isa == Isa::kAvx2 && detected_isa() != Isa::kAvx2) isa = Isa::kScalar;
  active_slot().store(isa, std::memory_order_relaxed);
}

const char* isa_name(Isa isa) { return isa == Isa::kAvx2 ? "avx2" : "scalar"; }

Weight crossing_weight(const EdgeArrays& edges, std::span<const std::int32_t> side) {
  if (active_isa() == Isa::kAvx2) return avx2::crossing_weight(edges, side);
  return scalar::crossing_weight(edges, side);
}

void apply_update(RangeCounterBank& bank, std::int32_t a, std::int32_t b, std::int64_t w) {
  if (bank.size() == 0) return;
  if (active_isa() == Isa::kAvx2) {
    avx2::apply_update(bank.lanes(), a, b, w);
  } else {
    scalar::apply_update(bank.lanes(), a, b, w);
  }
}

std::size_t RangeCounterBank::add(Ranges a, Ranges b, bool b_is_complement) {
  // Drop padding lanes before appending.
  a_lo1_.resize(count_), a_hi1_.resize(count_), a_lo2_.resize(count_), a_hi2_.resize(count_);
  b_lo1_.resize(count_), b_hi1_.resize(count_), b_lo2_.resize(count_), b_hi2_.resize(count_);
  b_comp_.resize(count_), acc_.resize(count_);
  a_lo1_.push_back(a.lo1), a_hi1_.push_back(a.hi1), a_lo2_.push_back(a.lo2), a_hi2_.push_back(a.hi2);
  b_lo1_.push_back(b.lo1), b_hi1_.push_back(b.hi1), b_lo2_.push_back(b.lo2), b_hi2_.push_back(b.hi2);
  b_comp_.push_back(b_is_complement ? -1 : 0);
  acc_.push_back(0);
  return count_++;
}

void RangeCounterBank::clear() {
  for (auto* v : {&a_lo1_, &a_hi1_, &a_lo2_, &a_hi2_, &b_lo1_, &b_hi1_, &b_lo2_, &b_hi2_, &b_comp_}) v->clear();
  acc_.clear();
  count_ = 0;
}

void RangeCounterBank::pad() {
  const std::size_t padded = (count_ + 7) / 8 * 8;
  // Padding lanes: empty A ranges and explicit (empty) B, so they never match.
  for (auto* v : {&a_lo1_, &a_lo2_, &b_lo1_, &b_lo2_}) v->resize(padded, 1);
  for (auto* v : {&a_hi1_, &a_hi2_, &b_hi1_, &b_hi2_}) v->resize(padded, 0);
  b_comp_.resize(padded, 0);
  acc_.resize(padded, 0);
}

RangeCounterBank::Lanes RangeCounterBank::lanes() {
  if (a_lo1_.size() % 8 != 0 || a_lo1_.size() < count_) pad();
  return {a_lo1_.data(), a_hi1_.data(), a_lo2_.data(), a_hi2_.data(), b_lo1_.data(), b_hi1_.data(),
          b_lo2_.data(), b_hi2_.data(), b_comp_.data(), acc_.data(), a_lo1_.size()};
}

}  // namespace mincut::kernels
