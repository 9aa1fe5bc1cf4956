#include "cpps/sieve.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "cpps/errors.hpp"

namespace cpps {

namespace {

// Bits per segment; each bit stands for one odd number.
constexpr std::uint64_t kSegmentBits = std::uint64_t{1} << 21;

std::uint64_t isqrt64(std::uint64_t n)
{
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && r > n / r) --r;
    while ((r + 1) <= n / (r + 1)) ++r;
    return r;
}

// Rosser-Schoenfeld: pi(x) < 1.25506 x / ln x for x > 1.
double prime_count_upper_estimate(std::uint64_t limit)
{
    if (limit < 17) return 7.0;
    const auto x = static_cast<double>(limit);
    return 1.25506 * x / std::log(x);
}

std::vector<std::uint32_t> small_odd_primes(std::uint64_t limit)
{
    std::vector<std::uint32_t> out;
    if (limit < 3) return out;
    std::vector<bool> composite((limit - 1) / 2, false); // index i <-> 2i+3
    for (std::uint64_t i = 0; i < composite.size(); ++i) {
        if (composite[i]) continue;
        const std::uint64_t p = 2 * i + 3;
        out.push_back(static_cast<std::uint32_t>(p));
        for (std::uint64_t j = (p * p - 3) / 2; j < composite.size(); j += p) composite[j] = true;
    }
    return out;
}

void check_budget(std::uint64_t limit, double bytes, std::size_t budget)
{
    if (bytes > static_cast<double>(budget)) {
        throw ResourceError("sieving primes up to " + std::to_string(limit) + " needs about " +
                            std::to_string(static_cast<unsigned long long>(bytes)) +
                            " bytes, over the memory budget of " + std::to_string(budget));
    }
}

// Calls emit(p) for every prime p <= limit in increasing order.
template <typename Emit>
void sieve_segments(std::uint64_t limit, Emit&& emit)
{
    if (limit < 2) return;
    emit(std::uint64_t{2});
    if (limit < 3) return;

    const auto base = small_odd_primes(isqrt64(limit));
    std::vector<std::uint64_t> words(kSegmentBits / 64);

    // Segment covers odd numbers lo, lo+2, ..., lo + 2*(kSegmentBits-1).
    for (std::uint64_t lo = 3; lo <= limit;) {
        const std::uint64_t span = std::min(kSegmentBits, (limit - lo) / 2 + 1);
        std::fill(words.begin(), words.end(), ~std::uint64_t{0});
        const std::uint64_t hi = lo + 2 * (span - 1); // last odd in segment

        for (const std::uint64_t p : base) {
            const std::uint64_t sq = p * p;
            if (sq > hi) break;
            std::uint64_t start;
            if (sq >= lo) {
                start = sq;
            } else {
                start = (lo + p - 1) / p * p;
                if (start % 2 == 0) start += p;
            }
            for (std::uint64_t j = (start - lo) / 2; j < span; j += p) {
                words[j >> 6] &= ~(std::uint64_t{1} << (j & 63));
            }
        }

        for (std::uint64_t w = 0; w * 64 < span; ++w) {
            std::uint64_t bits = words[w];
            if ((w + 1) * 64 > span) bits &= (std::uint64_t{1} << (span - w * 64)) - 1;
            while (bits != 0) {
                const auto b = static_cast<std::uint64_t>(std::countr_zero(bits));
                emit(lo + 2 * (w * 64 + b));
                bits &= bits - 1;
            }
        }

        if (hi >= limit - 1) break;
        lo = hi + 2;
    }
}

double sieve_buffer_bytes(std::uint64_t limit)
{
    return static_cast<double>(kSegmentBits / 8) + static_cast<double>(isqrt64(limit)) / 2.0 +
           4.0 * prime_count_upper_estimate(isqrt64(limit));
}

} // namespace

PrimeList primes_up_to(std::uint64_t limit, const SieveOptions& options)
{
    const double estimate = prime_count_upper_estimate(limit);
    check_budget(limit, 8.0 * estimate + sieve_buffer_bytes(limit), options.memory_budget);

    std::vector<std::uint64_t> primes;
    primes.reserve(static_cast<std::size_t>(estimate));
    sieve_segments(limit, [&](std::uint64_t p) { primes.push_back(p); });
    primes.shrink_to_fit();
    return PrimeList(limit, std::move(primes));
}

std::uint64_t prime_count(std::uint64_t limit, const SieveOptions& options)
{
    check_budget(limit, sieve_buffer_bytes(limit), options.memory_budget);
    std::uint64_t n = 0;
    sieve_segments(limit, [&](std::uint64_t) { ++n; });
    return n;
}

} // namespace cpps
