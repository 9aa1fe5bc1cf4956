#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cpps/enumerate.hpp"
#include "cpps/sieve.hpp"
#include "cpps/spill.hpp"
#include "cpps/wide.hpp"

namespace cpps {

// An integer n together with every representation found for it, sorted by
// (k, start_prime).
struct DuplicateGroup {
    Wide n = 0;
    std::vector<Representation> members;

    friend bool operator==(const DuplicateGroup&, const DuplicateGroup&) = default;
};

struct DuplicateOptions {
    SortOptions sort;
    SieveOptions sieve;
    unsigned workers = 1;
};

struct DuplicateScan {
    std::vector<DuplicateGroup> groups; // sorted by n
    std::uint64_t representations = 0;  // s_k(x)
    std::uint64_t distinct = 0;         // |S_k(x)|
};

// Enumerates S_k(x), sorts the (n, start, length) records and keeps every n
// that occurs more than once.
[[nodiscard]] DuplicateScan scan_duplicates(Wide x, unsigned k, const DuplicateOptions& options = {});

[[nodiscard]] std::vector<DuplicateGroup> find_duplicates(Wide x, unsigned k,
                                                          const DuplicateOptions& options = {});

// Every n <= x representable under at least two distinct exponents from
// `exponents`, with all of its representations. Needs two or more distinct
// exponents (DomainError otherwise).
[[nodiscard]] std::vector<DuplicateGroup>
find_cross_power_duplicates(Wide x, std::span<const unsigned> exponents,
                            const DuplicateOptions& options = {});

// "p^k+q^k+..." for a representation, recomputing nothing.
[[nodiscard]] std::string expanded_sum(const PrimeList& primes, const Representation& r);

} // namespace cpps
