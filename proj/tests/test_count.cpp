#include <doctest.h>

#include <random>

#include "cpps/arith.hpp"
#include "cpps/count.hpp"
#include "cpps/enumerate.hpp"
#include "oracle.hpp"

using namespace cpps;

namespace {

CountReport count_of(Wide x, unsigned k) { return count_sums(PowerPrefixSums::build(x, k)); }

std::uint64_t stream_length(const PowerPrefixSums& ps)
{
    std::uint64_t n = 0;
    for_each_sum(ps, [&](const Representation&) { ++n; return true; });
    return n;
}

} // namespace

TEST_CASE("tabulated counts")
{
    CHECK(count_of(1000, 2).count == 37);
    CHECK(count_of(1000, 3).count == 10);
    CHECK(count_of(1'000'000, 3).count == 186);
    CHECK(count_of(pow10_wide(20), 20).count == 10);
    CHECK(count_of(3, 2).count == 0);
}

TEST_CASE("count report fields")
{
    const auto r = count_of(1000, 3);
    CHECK(r.x == 1000);
    CHECK(r.k == 3);
    CHECK(r.max_run_length == 4);
    CHECK(r.prime_count == 4);

    CHECK(max_run_length(PowerPrefixSums::build(1000, 3)) == 4);
    CHECK(max_run_length(PowerPrefixSums::build(3, 2)) == 0);
    CHECK(max_run_length(PowerPrefixSums::build(100, 2)) == 4);
    CHECK(count_of(3, 2) == CountReport{3, 2, 0, 0, 0});
}

TEST_CASE("counter equals enumerator and brute force for every x <= 1e4, k in 2..5")
{
    for (unsigned k = 2; k <= 5; ++k) {
        std::uint64_t previous = 0;
        for (Wide x = 0; x <= 10'000; ++x) {
            const auto ps = PowerPrefixSums::build(x, k);
            const auto report = count_sums(ps);
            REQUIRE(report.count == stream_length(ps));
            REQUIRE(report.count >= previous);
            REQUIRE(report.count >= report.prime_count);
            REQUIRE(report.count >= report.max_run_length * (report.max_run_length - (report.max_run_length > 0)) / 2);
            previous = report.count;
        }
    }
    // The quadratic oracle is slower; sample it densely enough to cross
    // every change point for small x and sparsely above.
    for (unsigned k = 2; k <= 5; ++k) {
        for (Wide x = 0; x <= 10'000; x += (x < 1000 ? 1 : 37)) {
            REQUIRE(count_of(x, k).count == oracle::brute_force_count(x, k, oracle::covering_limit(x, k)));
        }
    }
}

TEST_CASE("per-start window counts match a direct scan")
{
    // Every start index b contributes exactly #{t : f[t] - f[b] <= x}.
    std::mt19937_64 rng(17);
    for (int i = 0; i < 40; ++i) {
        const unsigned k = 2 + rng() % 4;
        const Wide x = rng() % 100'000'000ull;
        const auto ps = PowerPrefixSums::build(x, k);
        const auto f = ps.sums();
        std::uint64_t direct = 0;
        for (std::size_t b = 0; b < ps.prime_count(); ++b) {
            for (std::size_t t = b + 1; t <= ps.prime_count(); ++t) {
                if (f[t] - f[b] <= x) ++direct;
            }
        }
        CHECK(count_sums(ps).count == direct);
    }
}

TEST_CASE("max run length is exact")
{
    std::mt19937_64 rng(23);
    for (int i = 0; i < 200; ++i) {
        const unsigned k = 2 + rng() % 19;
        // Keep x^(1/k) below 2^12 and the prefix sums inside 128 bits.
        const unsigned bits = std::min(120u, 12 * k);
        Wide x = (static_cast<Wide>(rng()) << 64) | rng();
        x &= (Wide{1} << (1 + rng() % bits)) - 1;
        const auto ps = PowerPrefixSums::build(x, k);
        const auto m = max_run_length(ps);
        const auto f = ps.sums();
        CHECK(f[m] <= x);
        if (m < ps.prime_count()) CHECK(f[m + 1] > x);
    }
}

TEST_CASE("random larger inputs: counter equals stream length")
{
    std::mt19937_64 rng(29);
    for (int i = 0; i < 100; ++i) {
        const unsigned k = 2 + rng() % 19;
        const Wide x = rng() % 10'000'000'001ull;
        const auto ps = PowerPrefixSums::build(x, k);
        CHECK(count_sums(ps).count == stream_length(ps));
    }
}
