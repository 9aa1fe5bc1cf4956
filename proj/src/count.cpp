#include "cpps/count.hpp"

namespace cpps {

std::uint64_t max_run_length(const PowerPrefixSums& ps)
{
    const auto f = ps.sums();
    const std::size_t pi = ps.prime_count();
    std::size_t t = 0;
    while (t < pi && f[t + 1] <= ps.x()) ++t;
    return t;
}

CountReport count_sums(const PowerPrefixSums& ps)
{
    const auto f = ps.sums();
    const Wide x = ps.x();
    const std::size_t pi = ps.prime_count();

    const std::uint64_t longest = max_run_length(ps);
    std::size_t t = longest;
    std::uint64_t count = 0;
    for (std::size_t b = 0; b < pi; ++b) {
        // t may lag behind b once single prime powers exceed x; the window
        // (b, t] is then empty.
        if (t < b) t = b;
        while (t < pi && f[t + 1] - f[b] <= x) ++t;
        count += t - b;
    }
    return CountReport{x, ps.k(), count, longest, pi};
}

} // namespace cpps
