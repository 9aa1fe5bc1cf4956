#include <doctest.h>

#include <cmath>

#include "cpps/bounds.hpp"
#include "cpps/count.hpp"
#include "cpps/errors.hpp"
#include "cpps/prefix.hpp"

using namespace cpps;

TEST_CASE("c_k")
{
    CHECK(c_constant(2) == doctest::Approx(4.0 * std::sqrt(3.0)).epsilon(1e-14));
    // Printed to two decimals (within 0.01 of the exact value).
    CHECK(std::fabs(c_constant(2) - 6.92) < 0.01);
    CHECK(std::fabs(c_constant(10) - 96.16) < 0.01);
    CHECK(std::fabs(c_constant(20) - 379.68) < 0.01);
    CHECK(c_constant(20) == doctest::Approx(379.677376835).epsilon(1e-11));
    // (9/2) * 4^(2/3)
    CHECK(c_constant(3) == doctest::Approx(4.5 * std::cbrt(16.0)).epsilon(1e-14));
    CHECK_THROWS_AS((void)c_constant(1), DomainError);
    CHECK_THROWS_AS((void)c_constant(0), DomainError);
}

TEST_CASE("floored bound columns")
{
    CHECK(floor_upper_bound(1000, 2) == 52);
    CHECK(floor_lower_bound(1000, 2) == 34);
    CHECK(floor_upper_bound(pow10_wide(38), 20) == 315);
    CHECK(floor_lower_bound(pow10_wide(38), 20) == 183);
    CHECK(floor_upper_bound(pow10_wide(15), 2) == 615948906);
    CHECK(floor_lower_bound(pow10_wide(15), 2) == 400070550);
}

TEST_CASE("formula identities")
{
    for (unsigned k = 2; k <= 30; ++k) {
        for (const Wide x : {Wide{2}, Wide{3}, Wide{1000}, Wide{123456789}, pow10_wide(25), kWideMax}) {
            const double ratio = upper_bound(x, k) / lower_bound(x, k);
            CHECK(ratio == doctest::Approx(2 * c_constant(k) / ((k + 1.0) * (k + 1.0))).epsilon(1e-12));
            const double m = m_estimate(x, k);
            CHECK(lower_bound(x, k) == doctest::Approx(m * m / 2).epsilon(1e-12));
        }
    }
    for (const Wide x : {Wide{10}, pow10_wide(3), pow10_wide(15), pow10_wide(38)}) {
        CHECK(tws_upper_s2(x) / upper_bound(x, 2) == doctest::Approx(28.4201 / (4 * std::sqrt(3.0))).epsilon(1e-12));
    }
    CHECK(28.4201 / c_constant(2) == doctest::Approx(4.102).epsilon(1e-3));
}

TEST_CASE("high-precision reference values")
{
    // mpmath, 50 digits.
    CHECK(m_estimate(1'000'000, 2) == doctest::Approx(52.104667478820716).epsilon(1e-13));
    CHECK(tws_upper_s2(1000) == doctest::Approx(216.02781706015157).epsilon(1e-13));
    CHECK(tws_upper_s2(pow10_wide(15)) > upper_bound(pow10_wide(15), 2));
}

TEST_CASE("m_estimate is the right order of magnitude")
{
    const auto exact = max_run_length(PowerPrefixSums::build(1'000'000, 2));
    const double ratio = m_estimate(1'000'000, 2) / static_cast<double>(exact);
    CHECK(ratio >= 0.5);
    CHECK(ratio <= 2.0);
}

TEST_CASE("domain errors")
{
    CHECK_THROWS_AS((void)upper_bound(1, 2), DomainError);
    CHECK_THROWS_AS((void)lower_bound(0, 2), DomainError);
    CHECK_THROWS_AS((void)m_estimate(1, 3), DomainError);
    CHECK_THROWS_AS((void)tws_upper_s2(1), DomainError);
    CHECK_THROWS_AS((void)upper_bound(100, 1), DomainError);
    CHECK_THROWS_AS((void)per_length_bound(100, 2, 0), DomainError);
}

TEST_CASE("per_length_bound")
{
    CHECK(per_length_bound(1000, 3, 1) == 4);
    CHECK(per_length_bound(1000, 3, 4) == 3);
    CHECK(per_length_bound(1000, 3, 126) == 0); // 1000/126 = 7 < 2^3
    CHECK(per_length_bound(pow10_wide(20), 5, 1) == 1229); // pi(10^4)
}

TEST_CASE("estimate_bounds bundles every term")
{
    const auto e2 = estimate_bounds(pow10_wide(6), 2);
    CHECK(e2.tws_upper.has_value());
    CHECK(e2.c_k == c_constant(2));
    CHECK(e2.upper == upper_bound(pow10_wide(6), 2));
    CHECK_FALSE(estimate_bounds(pow10_wide(6), 3).tws_upper.has_value());
}
