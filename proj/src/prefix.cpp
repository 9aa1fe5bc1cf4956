#include "cpps/prefix.hpp"

#include <string>

#include "cpps/arith.hpp"
#include "cpps/errors.hpp"

namespace cpps {

PowerPrefixSums PowerPrefixSums::build(Wide x, unsigned k, const SieveOptions& options)
{
    if (k < 2 || k > 64) {
        throw DomainError("exponent k must be in [2, 64], got " + std::to_string(k));
    }
    PrimeList primes = primes_up_to(integer_kth_root(x, k), options);

    std::vector<Wide> sums;
    sums.reserve(primes.size() + 1);
    sums.push_back(0);
    for (std::size_t i = 0; i < primes.size(); ++i) {
        const Wide power = checked_pow(primes[i], k);
        if (sums.back() > kWideMax - power) {
            throw OverflowError("prefix sum f[" + std::to_string(i + 1) + "] of " +
                                std::to_string(primes[i]) + "^" + std::to_string(k) +
                                " exceeds 128 bits for x = " + to_string(x) + "; reduce x");
        }
        sums.push_back(sums.back() + power);
    }
    return PowerPrefixSums(x, k, std::move(primes), std::move(sums));
}

} // namespace cpps
