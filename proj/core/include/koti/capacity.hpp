#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>

#include "koti/errors.hpp"

namespace koti {

// Census counts carry unbounded-magnitude semantics; the fixed-width counter
// below detects overflow and reports it as CapacityExceeded instead of wrapping.
using Count = std::uint64_t;

Count checked_add(Count a, Count b);
Count checked_pow2(std::size_t exponent);

// Hard ceilings on exhaustive scans. A Capacity can lower them, never raise.
inline constexpr std::size_t kDenseEnumCapMax = 4;       // 2^(2^4) dense coevents
inline constexpr std::size_t kClassifyCapMax = 6;        // 4^6 event pairs per coevent
inline constexpr std::size_t kSupportEnumCap = 20;       // 2^20 - 1 supports
inline constexpr std::size_t kPointEnumCap = 20;
inline constexpr std::size_t kDenseViewCap = 26;         // largest materializable 2^n table
inline constexpr std::size_t kLiftAllCap = 2;            // base sizes accepted by lift()
inline constexpr std::size_t kLiftMultiplicativeCap = 4;
inline constexpr std::size_t kLiftHomomorphicCap = 6;    // keeps outcome labels in u64 range
inline constexpr std::size_t kNagarjunaSupportScanCap = 16;

struct Capacity {
  std::size_t dense_enum_cap = kDenseEnumCapMax;
  std::size_t classify_cap = kClassifyCapMax;

  std::size_t dense_cap() const { return std::min(dense_enum_cap, kDenseEnumCapMax); }
  std::size_t classify_limit() const { return std::min(classify_cap, kClassifyCapMax); }

  // Clamp every dense-table cap to `limit` (KOTI_MAX_DENSE_N).
  static Capacity with_dense_limit(std::size_t limit) {
    return Capacity{std::min(kDenseEnumCapMax, limit), std::min(kClassifyCapMax, limit)};
  }
};

} // namespace koti
