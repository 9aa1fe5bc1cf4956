#include "cpps/arith.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "cpps/errors.hpp"

namespace cpps {

Wide checked_pow(std::uint64_t base, unsigned k)
{
    if (k == 0) throw DomainError("checked_pow: exponent must be >= 1");
    Wide result = 1;
    Wide b = base;
    unsigned e = k;
    bool square_ok = true; // false once b*b has overflowed
    try {
        for (;;) {
            if (e & 1u) {
                if (!square_ok) throw OverflowError("");
                result = checked_mul(result, b);
            }
            e >>= 1;
            if (e == 0) break;
            if (b != 0 && b > kWideMax / b) {
                square_ok = false;
            } else {
                b *= b;
            }
        }
    } catch (const OverflowError&) {
        throw OverflowError(std::to_string(base) + "^" + std::to_string(k) +
                            " does not fit in 128 bits");
    }
    return result;
}

bool pow_at_most(std::uint64_t base, unsigned k, Wide limit) noexcept
{
    if (base <= 1) return base <= limit;
    Wide acc = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (acc > limit / base) return false;
        acc *= base;
    }
    return acc <= limit;
}

std::uint64_t integer_kth_root(Wide x, unsigned k)
{
    if (k == 0 || k > 127) {
        throw DomainError("integer_kth_root: k must be in [1, 127], got " + std::to_string(k));
    }
    if (k == 1) {
        if (x > std::numeric_limits<std::uint64_t>::max()) {
            throw OverflowError("integer_kth_root: " + to_string(x) + " does not fit in 64 bits");
        }
        return static_cast<std::uint64_t>(x);
    }
    if (x < 2) return static_cast<std::uint64_t>(x);

    // Floating seed, then exact correction in both directions.
    const long double seed = std::pow(static_cast<long double>(x), 1.0L / static_cast<long double>(k));
    std::uint64_t r = seed >= 1.8446744073709551615e19L ? std::numeric_limits<std::uint64_t>::max()
                                                         : static_cast<std::uint64_t>(seed);
    while (r > 0 && !pow_at_most(r, k, x)) --r;
    while (r < std::numeric_limits<std::uint64_t>::max() && pow_at_most(r + 1, k, x)) ++r;
    return r;
}

} // namespace cpps
