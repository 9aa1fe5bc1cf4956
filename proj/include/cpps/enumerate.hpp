#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>

#include "cpps/prefix.hpp"
#include "cpps/wide.hpp"

namespace cpps {

// One witness that n = p_{start+1}^k + ... + p_{start+length}^k (primes
// 1-indexed), with start_prime = p_{start+1}.
struct Representation {
    Wide n = 0;
    unsigned k = 0;
    std::size_t start_index = 0;
    std::size_t length = 0;
    std::uint64_t start_prime = 0;

    friend bool operator==(const Representation&, const Representation&) = default;
};

// Receives each representation; returning false stops the enumeration.
using RepresentationSink = std::function<bool(const Representation&)>;

struct EnumerateOptions {
    unsigned workers = 1;
    // Approximate number of representations buffered per work chunk in
    // concurrent mode.
    std::size_t chunk_target = std::size_t{1} << 16;
};

// Double loop over start index b (outer) and end index t (inner), breaking
// the inner loop at the first window sum above x. Visits start indices in
// [first, last). Returns false if the sink stopped early.
template <typename Sink>
bool for_each_sum(const PowerPrefixSums& ps, Sink&& sink, std::size_t first, std::size_t last)
{
    const auto f = ps.sums();
    const Wide x = ps.x();
    const std::size_t count = ps.prime_count();
    for (std::size_t b = first; b < last; ++b) {
        for (std::size_t t = b + 1; t <= count; ++t) {
            const Wide n = f[t] - f[b];
            if (n > x) break;
            if (!sink(Representation{n, ps.k(), b, t - b, ps.primes()[b]})) return false;
        }
    }
    return true;
}

template <typename Sink>
bool for_each_sum(const PowerPrefixSums& ps, Sink&& sink)
{
    return for_each_sum(ps, std::forward<Sink>(sink), 0, ps.prime_count());
}

// Streams every representation of every n <= x in (start_index, length)
// order. With options.workers > 1, contiguous start-index chunks are
// enumerated concurrently and emitted in chunk order, so the sink sees the
// same sequence either way. Returns false if the sink stopped early.
bool enumerate_sums(const PowerPrefixSums& ps, const RepresentationSink& sink,
                    const EnumerateOptions& options = {});

// s_{k,m}(x) for every length m that occurs.
[[nodiscard]] std::map<std::size_t, std::uint64_t> length_histogram(const PowerPrefixSums& ps);

// p_{start+1}^k + ... + p_{start+length}^k summed term by term with checked
// arithmetic.
[[nodiscard]] Wide direct_power_sum(const PrimeList& primes, std::size_t start_index,
                                    std::size_t length, unsigned k);

} // namespace cpps
