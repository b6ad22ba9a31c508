#pragma once

#include <cstdint>
#include <string>

namespace mincut {

using Vertex = std::int32_t;
using EdgeId = std::int32_t;

// Cut arithmetic is carried in 128-bit integers: input weights are bounded by
// 2^32 and sums over at most 2^31 edges stay far below the representable range.
__extension__ using Weight = __int128;

inline constexpr std::uint64_t kMaxEdgeWeight = std::uint64_t{1} << 32;

inline std::string to_string(Weight w) {
  if (w == 0) return "0";
  const bool negative = w < 0;
  __extension__ unsigned __int128 mag =
      negative ? static_cast<unsigned __int128>(-(w + 1)) + 1 : static_cast<unsigned __int128>(w);
  std::string digits;
  while (mag != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(mag % 10)));
    mag /= 10;
  }
  if (negative) digits.push_back('-');
  return {digits.rbegin(), digits.rend()};
}

}  // namespace mincut
