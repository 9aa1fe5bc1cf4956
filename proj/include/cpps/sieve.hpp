#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace cpps {

struct SieveOptions {
    // Upper limit on the bytes the prime list and sieve buffers may take.
    std::size_t memory_budget = std::size_t{2} << 30;
};

// The primes p <= limit in increasing order. Immutable once built.
class PrimeList {
public:
    PrimeList() = default;
    PrimeList(std::uint64_t limit, std::vector<std::uint64_t> primes)
        : limit_(limit), primes_(std::move(primes)) {}

    [[nodiscard]] std::uint64_t limit() const noexcept { return limit_; }
    [[nodiscard]] std::size_t size() const noexcept { return primes_.size(); }
    [[nodiscard]] bool empty() const noexcept { return primes_.empty(); }
    [[nodiscard]] std::uint64_t operator[](std::size_t i) const noexcept { return primes_[i]; }
    [[nodiscard]] std::span<const std::uint64_t> values() const noexcept { return primes_; }
    [[nodiscard]] auto begin() const noexcept { return primes_.begin(); }
    [[nodiscard]] auto end() const noexcept { return primes_.end(); }

    friend bool operator==(const PrimeList&, const PrimeList&) = default;

private:
    std::uint64_t limit_ = 0;
    std::vector<std::uint64_t> primes_;
};

// Segmented, odd-only, bit-packed sieve of Eratosthenes. Throws
// ResourceError (echoing the limit) when the estimated footprint exceeds
// options.memory_budget.
[[nodiscard]] PrimeList primes_up_to(std::uint64_t limit, const SieveOptions& options = {});

// pi(limit). Counts without materializing the list, so the budget only
// covers the sieve buffers.
[[nodiscard]] std::uint64_t prime_count(std::uint64_t limit, const SieveOptions& options = {});

} // namespace cpps
