#include "cpps/duplicates.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <string>

#include "cpps/errors.hpp"
#include "cpps/prefix.hpp"

namespace cpps {

namespace {

SortedRecords sorted_representations(const PowerPrefixSums& ps, const DuplicateOptions& options)
{
    RecordSorter sorter(options.sort);
    const auto k = static_cast<std::uint8_t>(ps.k());
    enumerate_sums(
        ps,
        [&](const Representation& r) {
            sorter.add(SpillRecord{r.n, r.start_index, r.length, k});
            return true;
        },
        EnumerateOptions{.workers = options.workers});
    return std::move(sorter).finish();
}

Representation to_representation(const PowerPrefixSums& ps, const SpillRecord& r)
{
    return Representation{r.n, ps.k(), static_cast<std::size_t>(r.start_index),
                          static_cast<std::size_t>(r.length), ps.primes()[r.start_index]};
}

void sort_members(std::vector<Representation>& members)
{
    std::sort(members.begin(), members.end(), [](const auto& a, const auto& b) {
        if (a.k != b.k) return a.k < b.k;
        return a.start_prime < b.start_prime;
    });
}

} // namespace

DuplicateScan scan_duplicates(Wide x, unsigned k, const DuplicateOptions& options)
{
    const auto ps = PowerPrefixSums::build(x, k, options.sieve);
    SortedRecords records = sorted_representations(ps, options);

    DuplicateScan scan;
    std::vector<SpillRecord> run;
    auto flush = [&] {
        if (run.size() >= 2) {
            DuplicateGroup g{run.front().n, {}};
            for (const auto& r : run) g.members.push_back(to_representation(ps, r));
            sort_members(g.members);
            scan.groups.push_back(std::move(g));
        }
        run.clear();
    };

    SpillRecord r;
    while (records.next(r)) {
        ++scan.representations;
        if (!run.empty() && run.front().n != r.n) flush();
        if (run.empty()) ++scan.distinct;
        run.push_back(r);
    }
    flush();
    return scan;
}

std::vector<DuplicateGroup> find_duplicates(Wide x, unsigned k, const DuplicateOptions& options)
{
    return scan_duplicates(x, k, options).groups;
}

std::vector<DuplicateGroup> find_cross_power_duplicates(Wide x, std::span<const unsigned> exponents,
                                                        const DuplicateOptions& options)
{
    const std::set<unsigned> distinct(exponents.begin(), exponents.end());
    if (distinct.size() < 2) {
        throw DomainError("cross-power search needs at least two distinct exponents");
    }

    std::vector<PowerPrefixSums> sums;
    std::vector<SortedRecords> streams;
    for (const unsigned k : distinct) {
        sums.push_back(PowerPrefixSums::build(x, k, options.sieve));
        streams.push_back(sorted_representations(sums.back(), options));
    }

    // k-way merge of the per-exponent sorted streams.
    struct Head {
        SpillRecord record;
        std::size_t stream;
    };
    auto after = [](const Head& a, const Head& b) { return record_less(b.record, a.record); };
    std::priority_queue<Head, std::vector<Head>, decltype(after)> heads(after);
    for (std::size_t i = 0; i < streams.size(); ++i) {
        SpillRecord r;
        if (streams[i].next(r)) heads.push({r, i});
    }

    std::vector<DuplicateGroup> groups;
    std::vector<Head> run;
    auto flush = [&] {
        const bool mixed = std::any_of(run.begin(), run.end(), [&](const Head& h) {
            return h.record.k != run.front().record.k;
        });
        if (mixed) {
            DuplicateGroup g{run.front().record.n, {}};
            for (const auto& h : run) g.members.push_back(to_representation(sums[h.stream], h.record));
            sort_members(g.members);
            groups.push_back(std::move(g));
        }
        run.clear();
    };

    while (!heads.empty()) {
        const Head top = heads.top();
        heads.pop();
        if (!run.empty() && run.front().record.n != top.record.n) flush();
        run.push_back(top);
        SpillRecord next;
        if (streams[top.stream].next(next)) heads.push({next, top.stream});
    }
    if (!run.empty()) flush();
    return groups;
}

std::string expanded_sum(const PrimeList& primes, const Representation& r)
{
    std::string out;
    const std::string power = "^" + std::to_string(r.k);
    for (std::size_t i = r.start_index; i < r.start_index + r.length; ++i) {
        if (!out.empty()) out += '+';
        out += std::to_string(primes[i]);
        out += power;
    }
    return out;
}

} // namespace cpps
