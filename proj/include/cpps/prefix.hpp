#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cpps/sieve.hpp"
#include "cpps/wide.hpp"

namespace cpps {

// Primes up to floor(x^(1/k)) and the running sums of their k-th powers:
// sums[0] = 0, sums[i] = sums[i-1] + primes[i-1]^k. Any window of consecutive
// prime powers p_{b+1}^k + ... + p_t^k is sums[t] - sums[b].
class PowerPrefixSums {
public:
    // Throws DomainError for k outside [2, 64] and OverflowError (naming the
    // failing index) when a running sum needs more than 128 bits.
    static PowerPrefixSums build(Wide x, unsigned k, const SieveOptions& options = {});

    [[nodiscard]] Wide x() const noexcept { return x_; }
    [[nodiscard]] unsigned k() const noexcept { return k_; }
    [[nodiscard]] const PrimeList& primes() const noexcept { return primes_; }
    [[nodiscard]] std::span<const Wide> sums() const noexcept { return sums_; }

    // pi(x^(1/k)); sums() has prime_count() + 1 entries.
    [[nodiscard]] std::size_t prime_count() const noexcept { return primes_.size(); }

    [[nodiscard]] Wide window(std::size_t start, std::size_t length) const noexcept
    {
        return sums_[start + length] - sums_[start];
    }

private:
    PowerPrefixSums(Wide x, unsigned k, PrimeList primes, std::vector<Wide> sums)
        : x_(x), k_(k), primes_(std::move(primes)), sums_(std::move(sums)) {}

    Wide x_ = 0;
    unsigned k_ = 0;
    PrimeList primes_;
    std::vector<Wide> sums_;
};

} // namespace cpps
