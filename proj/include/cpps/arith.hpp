#pragma once

#include <cstdint>

#include "cpps/wide.hpp"

namespace cpps {

// base^k computed by binary exponentiation; throws OverflowError naming base
// and k when the result needs more than 128 bits. k must be >= 1.
[[nodiscard]] Wide checked_pow(std::uint64_t base, unsigned k);

// True iff base^k <= limit, without ever overflowing.
[[nodiscard]] bool pow_at_most(std::uint64_t base, unsigned k, Wide limit) noexcept;

// Largest r with r^k <= x, exact. Valid for 1 <= k <= 127; for k == 1 the
// root must itself fit in 64 bits.
[[nodiscard]] std::uint64_t integer_kth_root(Wide x, unsigned k);

} // namespace cpps
