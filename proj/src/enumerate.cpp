#include "cpps/enumerate.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>
#include <vector>

#include "cpps/arith.hpp"
#include "cpps/errors.hpp"

namespace cpps {

namespace {

struct Chunk {
    std::size_t first;
    std::size_t last;
};

// Splits [0, pi) into contiguous start-index ranges holding roughly
// `target` representations each.
std::vector<Chunk> plan_chunks(const PowerPrefixSums& ps, std::size_t target)
{
    const auto f = ps.sums();
    const std::size_t count = ps.prime_count();
    std::vector<Chunk> chunks;
    std::size_t t = 0;
    std::size_t first = 0;
    std::size_t load = 0;
    for (std::size_t b = 0; b < count; ++b) {
        t = std::max(t, b);
        while (t < count && f[t + 1] - f[b] <= ps.x()) ++t;
        load += t - b + 1;
        if (load >= target) {
            chunks.push_back({first, b + 1});
            first = b + 1;
            load = 0;
        }
    }
    if (first < count) chunks.push_back({first, count});
    return chunks;
}

} // namespace

bool enumerate_sums(const PowerPrefixSums& ps, const RepresentationSink& sink,
                    const EnumerateOptions& options)
{
    if (options.workers <= 1) return for_each_sum(ps, sink);

    const auto chunks = plan_chunks(ps, std::max<std::size_t>(options.chunk_target, 1));
    const std::size_t workers = options.workers;
    std::vector<std::vector<Representation>> buffers(workers);

    for (std::size_t wave = 0; wave < chunks.size(); wave += workers) {
        const std::size_t n = std::min(workers, chunks.size() - wave);
        {
            std::vector<std::jthread> threads;
            threads.reserve(n);
            for (std::size_t i = 0; i < n; ++i) {
                threads.emplace_back([&, i] {
                    auto& out = buffers[i];
                    out.clear();
                    const Chunk c = chunks[wave + i];
                    for_each_sum(
                        ps, [&](const Representation& r) { out.push_back(r); return true; },
                        c.first, c.last);
                });
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            for (const auto& r : buffers[i]) {
                if (!sink(r)) return false;
            }
        }
    }
    return true;
}

std::map<std::size_t, std::uint64_t> length_histogram(const PowerPrefixSums& ps)
{
    // Start index b contributes one window of every length 1..runs(b), so
    // accumulate a difference array over lengths.
    const auto f = ps.sums();
    const std::size_t count = ps.prime_count();
    std::vector<std::uint64_t> starts_with_run(count + 2, 0);
    std::size_t t = 0;
    for (std::size_t b = 0; b < count; ++b) {
        t = std::max(t, b);
        while (t < count && f[t + 1] - f[b] <= ps.x()) ++t;
        ++starts_with_run[t - b];
    }

    std::map<std::size_t, std::uint64_t> histogram;
    std::uint64_t at_least = 0;
    for (std::size_t m = count; m >= 1; --m) {
        at_least += starts_with_run[m];
        if (at_least != 0) histogram.emplace(m, at_least);
    }
    return histogram;
}

Wide direct_power_sum(const PrimeList& primes, std::size_t start_index, std::size_t length,
                      unsigned k)
{
    if (start_index + length > primes.size()) {
        throw std::out_of_range("window [" + std::to_string(start_index) + ", " +
                                std::to_string(start_index + length) + ") exceeds " +
                                std::to_string(primes.size()) + " primes");
    }
    Wide total = 0;
    for (std::size_t i = start_index; i < start_index + length; ++i) {
        total = checked_add(total, checked_pow(primes[i], k));
    }
    return total;
}

} // namespace cpps
