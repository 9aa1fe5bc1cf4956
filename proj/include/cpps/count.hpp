#pragma once

#include <cstdint>

#include "cpps/prefix.hpp"
#include "cpps/wide.hpp"

namespace cpps {

struct CountReport {
    Wide x = 0;
    unsigned k = 0;
    std::uint64_t count = 0;          // s_k(x), with multiplicity
    std::uint64_t max_run_length = 0; // largest m with p_1^k + ... + p_m^k <= x
    std::uint64_t prime_count = 0;    // pi(x^(1/k))

    friend bool operator==(const CountReport&, const CountReport&) = default;
};

// Two-pointer count of windows (b, t], 0 <= b < t <= pi, with sum <= x.
// O(pi(x^(1/k))) once the prefix sums exist.
[[nodiscard]] CountReport count_sums(const PowerPrefixSums& ps);

// Largest t with sums[t] <= x.
[[nodiscard]] std::uint64_t max_run_length(const PowerPrefixSums& ps);

} // namespace cpps
