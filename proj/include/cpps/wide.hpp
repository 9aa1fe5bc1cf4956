#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace cpps {

// All sums live in unsigned 128-bit integers; every operation that can
// overflow goes through the checked helpers below.
using Wide = unsigned __int128;

inline constexpr Wide kWideMax = ~Wide{0};

[[nodiscard]] std::string to_string(Wide value);

// Parses a non-negative decimal integer, or "<digits>e<exp>" meaning
// digits * 10^exp exactly ("1e38", "2e7"). Throws std::invalid_argument on
// malformed text and OverflowError when the value needs more than 128 bits.
[[nodiscard]] Wide parse_wide(std::string_view text);

// 10^exp, throws OverflowError for exp > 38.
[[nodiscard]] Wide pow10_wide(unsigned exp);

// If value is an exact power of ten returns its exponent, else -1.
[[nodiscard]] int decimal_exponent(Wide value);

[[nodiscard]] Wide checked_add(Wide a, Wide b);
[[nodiscard]] Wide checked_mul(Wide a, Wide b);

} // namespace cpps

std::ostream& operator<<(std::ostream& os, cpps::Wide value);
