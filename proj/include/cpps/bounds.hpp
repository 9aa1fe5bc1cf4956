#pragma once

#include <cstdint>
#include <optional>

#include "cpps/sieve.hpp"
#include "cpps/wide.hpp"

namespace cpps {

// Main terms of the asymptotic bounds on s_k(x). Logarithms are natural.
//
//   upper(x, k) = c_k * x^(2/(k+1)) / (ln x)^(2k/(k+1))
//   lower(x, k) = ((k+1)^2 / 2) * x^(2/(k+1)) / (ln x)^(2k/(k+1))
//   M(x, k)    ~ (k+1) * x^(1/(k+1)) / (ln x)^(k/(k+1))
//
// with c_k = (k^2 / (k-1)) * (k+1)^(1 - 1/k).
struct BoundEstimate {
    Wide x = 0;
    unsigned k = 0;
    double upper = 0;
    double lower = 0;
    double c_k = 0;
    double m_estimate = 0;
    std::optional<double> tws_upper; // k == 2 only
};

// Throws DomainError for k < 2.
[[nodiscard]] double c_constant(unsigned k);

// The following throw DomainError for x < 2 or k < 2.
[[nodiscard]] double upper_bound(Wide x, unsigned k);
[[nodiscard]] double lower_bound(Wide x, unsigned k);
[[nodiscard]] double m_estimate(Wide x, unsigned k);

// Explicit bound s_2(x) <= 28.4201 x^(2/3) / (ln x)^(4/3) from the earlier
// work on sums of squares of consecutive primes.
[[nodiscard]] double tws_upper_s2(Wide x);

// floor() of the upper/lower main terms, as tabulated. Values within 1e-9
// of an integer are re-evaluated in quad precision before flooring.
[[nodiscard]] std::uint64_t floor_upper_bound(Wide x, unsigned k);
[[nodiscard]] std::uint64_t floor_lower_bound(Wide x, unsigned k);

[[nodiscard]] BoundEstimate estimate_bounds(Wide x, unsigned k);

// Exact pi(floor((floor(x/m))^(1/k))), the bound on s_{k,m}(x) for sums of
// exactly m consecutive k-th powers. Requires m >= 1 and k >= 1.
[[nodiscard]] std::uint64_t per_length_bound(Wide x, unsigned k, std::uint64_t m,
                                             const SieveOptions& options = {});

} // namespace cpps
