#include "cpps/bounds.hpp"

#include <cmath>
#include <string>

#include <quadmath.h>

#include "cpps/arith.hpp"
#include "cpps/errors.hpp"

namespace cpps {

namespace {

void require_k(unsigned k)
{
    if (k < 2) throw DomainError("k must be >= 2, got " + std::to_string(k));
}

void require_x(Wide x)
{
    if (x < 2) throw DomainError("x must be >= 2, got " + to_string(x));
}

// Powers of ten go through their exponent so that 10^38 loses nothing in
// the conversion to floating point.
long double log_of(Wide x)
{
    const int e = decimal_exponent(x);
    if (e >= 0) return static_cast<long double>(e) * 2.302585092994045684017991454684364208L;
    return std::log(static_cast<long double>(x));
}

__float128 log_of_quad(Wide x)
{
    const int e = decimal_exponent(x);
    if (e >= 0) return static_cast<__float128>(e) * M_LN10q;
    return logq(static_cast<__float128>(x));
}

long double c_constant_ld(unsigned k)
{
    const long double kk = k;
    return kk * kk / (kk - 1) * std::pow(kk + 1, 1 - 1 / kk);
}

__float128 c_constant_quad(unsigned k)
{
    const __float128 kk = k;
    return kk * kk / (kk - 1) * powq(kk + 1, 1 - 1 / kk);
}

// x^(2/(k+1)) / (ln x)^(2k/(k+1))
long double shape_ld(Wide x, unsigned k)
{
    const long double lx = log_of(x);
    const long double kk = k;
    return std::exp(2 / (kk + 1) * lx - 2 * kk / (kk + 1) * std::log(lx));
}

__float128 shape_quad(Wide x, unsigned k)
{
    const __float128 lx = log_of_quad(x);
    const __float128 kk = k;
    return expq(2 / (kk + 1) * lx - 2 * kk / (kk + 1) * logq(lx));
}

long double lower_coefficient(unsigned k)
{
    const long double k1 = static_cast<long double>(k) + 1;
    return k1 * k1 / 2;
}

std::uint64_t floor_with_refinement(long double value, __float128 (*refine)(Wide, unsigned),
                                    Wide x, unsigned k)
{
    const long double nearest = std::round(value);
    if (std::fabs(value - nearest) < 1e-9L) {
        return static_cast<std::uint64_t>(floorq(refine(x, k)));
    }
    return static_cast<std::uint64_t>(std::floor(value));
}

__float128 upper_quad(Wide x, unsigned k) { return c_constant_quad(k) * shape_quad(x, k); }

__float128 lower_quad(Wide x, unsigned k)
{
    const __float128 k1 = static_cast<__float128>(k) + 1;
    return k1 * k1 / 2 * shape_quad(x, k);
}

} // namespace

double c_constant(unsigned k)
{
    require_k(k);
    return static_cast<double>(c_constant_ld(k));
}

double upper_bound(Wide x, unsigned k)
{
    require_k(k);
    require_x(x);
    return static_cast<double>(c_constant_ld(k) * shape_ld(x, k));
}

double lower_bound(Wide x, unsigned k)
{
    require_k(k);
    require_x(x);
    return static_cast<double>(lower_coefficient(k) * shape_ld(x, k));
}

double m_estimate(Wide x, unsigned k)
{
    require_k(k);
    require_x(x);
    const long double lx = log_of(x);
    const long double kk = k;
    return static_cast<double>((kk + 1) * std::exp(lx / (kk + 1) - kk / (kk + 1) * std::log(lx)));
}

double tws_upper_s2(Wide x)
{
    require_x(x);
    return static_cast<double>(28.4201L * shape_ld(x, 2));
}

std::uint64_t floor_upper_bound(Wide x, unsigned k)
{
    require_k(k);
    require_x(x);
    return floor_with_refinement(c_constant_ld(k) * shape_ld(x, k), upper_quad, x, k);
}

std::uint64_t floor_lower_bound(Wide x, unsigned k)
{
    require_k(k);
    require_x(x);
    return floor_with_refinement(lower_coefficient(k) * shape_ld(x, k), lower_quad, x, k);
}

BoundEstimate estimate_bounds(Wide x, unsigned k)
{
    BoundEstimate e;
    e.x = x;
    e.k = k;
    e.upper = upper_bound(x, k);
    e.lower = lower_bound(x, k);
    e.c_k = c_constant(k);
    e.m_estimate = m_estimate(x, k);
    if (k == 2) e.tws_upper = tws_upper_s2(x);
    return e;
}

std::uint64_t per_length_bound(Wide x, unsigned k, std::uint64_t m, const SieveOptions& options)
{
    if (m == 0) throw DomainError("per_length_bound: run length m must be >= 1");
    return prime_count(integer_kth_root(x / m, k), options);
}

} // namespace cpps
