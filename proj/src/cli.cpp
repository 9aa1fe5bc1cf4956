#include "cpps/cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "cpps/arith.hpp"
#include "cpps/bounds.hpp"
#include "cpps/count.hpp"
#include "cpps/duplicates.hpp"
#include "cpps/enumerate.hpp"
#include "cpps/errors.hpp"
#include "cpps/prefix.hpp"

namespace cpps::cli {

namespace {

std::string real(double v)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

// Writes delimited rows in the configured format.
class RowWriter {
public:
    RowWriter(std::ostream& os, Format format) : os_(os), sep_(format == Format::csv ? ',' : '\t'), csv_(format == Format::csv) {}

    void header(std::initializer_list<std::string_view> names)
    {
        if (csv_) row(names);
    }

    template <typename Range>
    void row(const Range& fields)
    {
        bool first = true;
        for (const auto& f : fields) {
            if (!first) os_ << sep_;
            os_ << f;
            first = false;
        }
        os_ << '\n';
    }

    void row(std::initializer_list<std::string> fields) { row<std::initializer_list<std::string>>(fields); }

private:
    std::ostream& os_;
    char sep_;
    bool csv_;
};

std::vector<Wide> decades(Wide from, Wide to)
{
    std::vector<Wide> xs;
    for (Wide x = from; x <= to;) {
        xs.push_back(x);
        if (x > kWideMax / 10) break;
        x *= 10;
    }
    return xs;
}

DuplicateOptions duplicate_options(const RunConfig& c)
{
    DuplicateOptions o;
    o.workers = c.workers;
    o.sort.spill_dir = c.spill_dir;
    return o;
}

void write_groups(const std::vector<DuplicateGroup>& groups, const PrimeList& primes, RowWriter& w)
{
    w.header({"n", "k", "start_prime", "length", "sum"});
    for (const auto& g : groups) {
        for (const auto& m : g.members) {
            w.row({to_string(g.n), std::to_string(m.k), std::to_string(m.start_prime),
                   std::to_string(m.length), expanded_sum(primes, m)});
        }
    }
}

void run_enumerate(const RunConfig& c, std::ostream& os)
{
    RowWriter w(os, c.format);
    w.header({"n", "start_prime"});
    const auto ps = PowerPrefixSums::build(*c.x, c.k);
    const char sep = c.format == Format::csv ? ',' : '\t';
    enumerate_sums(
        ps,
        [&](const Representation& r) {
            os << to_string(r.n) << sep << r.start_prime << '\n';
            return static_cast<bool>(os);
        },
        EnumerateOptions{.workers = c.workers});
}

void run_count(const RunConfig& c, std::ostream& os)
{
    RowWriter w(os, c.format);
    const auto ps = PowerPrefixSums::build(*c.x, c.k);
    const CountReport r = count_sums(ps);
    if (c.distinct) {
        w.header({"x", "k", "count", "max_run_length", "prime_count", "distinct"});
        const auto scan = scan_duplicates(*c.x, c.k, duplicate_options(c));
        w.row({to_string(r.x), std::to_string(r.k), std::to_string(r.count),
               std::to_string(r.max_run_length), std::to_string(r.prime_count),
               std::to_string(scan.distinct)});
    } else {
        w.header({"x", "k", "count", "max_run_length", "prime_count"});
        w.row({to_string(r.x), std::to_string(r.k), std::to_string(r.count),
               std::to_string(r.max_run_length), std::to_string(r.prime_count)});
    }
}

void run_table(const RunConfig& c, std::ostream& os)
{
    RowWriter w(os, c.format);
    w.header({"x", "count", "upper", "lower"});
    for (const Wide x : decades(*c.from, *c.to)) {
        const auto report = count_sums(PowerPrefixSums::build(x, c.k));
        w.row({to_string(x), std::to_string(report.count), std::to_string(floor_upper_bound(x, c.k)),
               std::to_string(floor_lower_bound(x, c.k))});
        os.flush();
    }
}

void run_bounds(const RunConfig& c, std::ostream& os)
{
    RowWriter w(os, c.format);
    w.header({"x", "k", "c_k", "upper", "lower", "m_estimate", "tws_upper"});
    const auto xs = c.x ? std::vector<Wide>{*c.x} : decades(*c.from, *c.to);
    for (const Wide x : xs) {
        const BoundEstimate e = estimate_bounds(x, c.k);
        w.row({to_string(x), std::to_string(c.k), real(e.c_k), real(e.upper), real(e.lower),
               real(e.m_estimate), e.tws_upper ? real(*e.tws_upper) : std::string()});
    }
}

void run_duplicates(const RunConfig& c, std::ostream& os)
{
    RowWriter w(os, c.format);
    const auto groups = find_duplicates(*c.x, c.k, duplicate_options(c));
    write_groups(groups, primes_up_to(integer_kth_root(*c.x, c.k)), w);
}

void run_cross(const RunConfig& c, std::ostream& os)
{
    RowWriter w(os, c.format);
    const auto groups = find_cross_power_duplicates(*c.x, c.exponents, duplicate_options(c));
    const unsigned smallest = *std::min_element(c.exponents.begin(), c.exponents.end());
    write_groups(groups, primes_up_to(integer_kth_root(*c.x, smallest)), w);
}

void require_k(unsigned k)
{
    if (k < 2 || k > 64) throw UsageError("--k must be in [2, 64], got " + std::to_string(k));
}

Wide parse_x(const std::string& flag, const std::string& text)
{
    try {
        return parse_wide(text);
    } catch (const std::exception& e) {
        throw UsageError(flag + ": " + e.what());
    }
}

} // namespace

void validate(const RunConfig& c)
{
    if (c.workers == 0) throw UsageError("--workers must be >= 1");
    if (c.distinct && c.command != Command::count) throw UsageError("--distinct only applies to count");

    switch (c.command) {
    case Command::enumerate:
    case Command::count:
    case Command::duplicates:
        require_k(c.k);
        if (!c.x) throw UsageError("--x is required");
        break;
    case Command::table:
        require_k(c.k);
        if (!c.from || !c.to) throw UsageError("table needs --from and --to");
        if (*c.from > *c.to) throw UsageError("--from must not exceed --to");
        if (*c.from < 2) throw UsageError("bounds are defined for x >= 2");
        break;
    case Command::bounds:
        require_k(c.k);
        if (c.x.has_value() == (c.from.has_value() || c.to.has_value())) {
            throw UsageError("bounds needs either --x or --from/--to");
        }
        if (c.x && *c.x < 2) throw UsageError("bounds are defined for x >= 2");
        if (!c.x) {
            if (!c.from || !c.to) throw UsageError("bounds needs both --from and --to");
            if (*c.from < 2) throw UsageError("bounds are defined for x >= 2");
            if (*c.from > *c.to) throw UsageError("--from must not exceed --to");
        }
        break;
    case Command::cross: {
        if (!c.x) throw UsageError("--x is required");
        for (const unsigned k : c.exponents) require_k(k);
        const std::set<unsigned> distinct(c.exponents.begin(), c.exponents.end());
        if (distinct.size() < 2) throw UsageError("--ks needs at least two distinct exponents");
        break;
    }
    }
}

int run(const RunConfig& c, std::ostream& out, std::ostream& err)
{
    try {
        validate(c);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }

    std::ofstream file;
    if (c.out) {
        file.open(*c.out, std::ios::trunc);
        if (!file) {
            err << "error: cannot open " << c.out->string() << " for writing\n";
            return kExitCompute;
        }
    }
    std::ostream& os = c.out ? static_cast<std::ostream&>(file) : out;

    try {
        switch (c.command) {
        case Command::enumerate: run_enumerate(c, os); break;
        case Command::count: run_count(c, os); break;
        case Command::table: run_table(c, os); break;
        case Command::bounds: run_bounds(c, os); break;
        case Command::duplicates: run_duplicates(c, os); break;
        case Command::cross: run_cross(c, os); break;
        }
    } catch (const OverflowError& e) {
        os.flush();
        err << "overflow: " << e.what() << '\n';
        return kExitCompute;
    } catch (const ResourceError& e) {
        os.flush();
        err << "resource limit: " << e.what() << '\n';
        return kExitCompute;
    } catch (const std::exception& e) {
        os.flush();
        err << "error: " << e.what() << '\n';
        return kExitCompute;
    }
    os.flush();
    if (!os) {
        err << "error: failed writing output\n";
        return kExitCompute;
    }
    return kExitOk;
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Sums of k-th powers of consecutive primes"};
    app.require_subcommand(1);

    RunConfig config;
    std::string x_text, from_text, to_text, format_text = "tsv", out_text, spill_text;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format_text, "Output format")->check(CLI::IsMember({"tsv", "csv"}));
        sub->add_option("--out", out_text, "Write output to PATH instead of stdout");
    };
    auto add_k = [&](CLI::App* sub) { sub->add_option("--k", config.k, "Exponent k >= 2")->required(); };
    auto add_x = [&](CLI::App* sub) {
        return sub->add_option("--x", x_text, "Inclusive bound x (decimal or 1eN)");
    };
    auto add_range = [&](CLI::App* sub) {
        sub->add_option("--from", from_text, "First x of the decade range");
        sub->add_option("--to", to_text, "Last x of the decade range");
    };

    auto* enumerate = app.add_subcommand("enumerate", "List every (n, start prime) pair with n <= x");
    add_k(enumerate);
    add_x(enumerate)->required();
    enumerate->add_option("--workers", config.workers, "Concurrent enumeration workers");
    add_common(enumerate);

    auto* count = app.add_subcommand("count", "Count s_k(x) with multiplicity");
    add_k(count);
    add_x(count)->required();
    count->add_flag("--distinct", config.distinct, "Also report |S_k(x)| (runs the duplicate search)");
    count->add_option("--workers", config.workers, "Workers for the --distinct search");
    count->add_option("--spill-dir", spill_text, "Directory for sort spill files");
    add_common(count);

    auto* table = app.add_subcommand("table", "Counts and floored bounds for x = from, 10*from, ..., to");
    add_k(table);
    add_range(table);
    table->get_option("--from")->required();
    table->get_option("--to")->required();
    add_common(table);

    auto* bounds = app.add_subcommand("bounds", "Bound main terms and constants");
    add_k(bounds);
    add_x(bounds);
    add_range(bounds);
    add_common(bounds);

    auto* duplicates = app.add_subcommand("duplicates", "Integers with several representations for one k");
    add_k(duplicates);
    add_x(duplicates)->required();
    duplicates->add_option("--workers", config.workers, "Concurrent enumeration workers");
    duplicates->add_option("--spill-dir", spill_text, "Directory for sort spill files");
    add_common(duplicates);

    auto* cross = app.add_subcommand("cross", "Integers representable under several exponents");
    cross->add_option("--ks", config.exponents, "Comma-separated exponents")->delimiter(',')->required();
    add_x(cross)->required();
    cross->add_option("--workers", config.workers, "Concurrent enumeration workers");
    cross->add_option("--spill-dir", spill_text, "Directory for sort spill files");
    add_common(cross);

    try {
        app.parse(argc, argv);
        const std::pair<CLI::App*, Command> commands[] = {
            {enumerate, Command::enumerate}, {count, Command::count}, {table, Command::table},
            {bounds, Command::bounds}, {duplicates, Command::duplicates}, {cross, Command::cross}};
        for (const auto& [sub, command] : commands) {
            if (sub->parsed()) config.command = command;
        }
        if (!x_text.empty()) config.x = parse_x("--x", x_text);
        if (!from_text.empty()) config.from = parse_x("--from", from_text);
        if (!to_text.empty()) config.to = parse_x("--to", to_text);
        config.format = format_text == "csv" ? Format::csv : Format::tsv;
        if (!out_text.empty()) config.out = out_text;
        config.spill_dir = spill_text;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }
    return run(config, out, err);
}

} // namespace cpps::cli
