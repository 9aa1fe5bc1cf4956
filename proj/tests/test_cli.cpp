#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cpps/bounds.hpp"
#include "cpps/cli.hpp"
#include "cpps/count.hpp"
#include "cpps/prefix.hpp"

using namespace cpps;

namespace {

struct Outcome {
    int status;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args)
{
    args.insert(args.begin(), "cpps");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int status = cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
    return {status, out.str(), err.str()};
}

std::vector<std::vector<std::string>> rows(const std::string& text, char sep)
{
    std::vector<std::vector<std::string>> out;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        std::vector<std::string> fields;
        std::istringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, sep)) fields.push_back(cell);
        out.push_back(fields);
    }
    return out;
}

} // namespace

TEST_CASE("count")
{
    const auto r = invoke({"count", "--k", "3", "--x", "1e3"});
    CHECK(r.status == 0);
    CHECK(r.out == "1000\t3\t10\t4\t4\n");

    const auto csv = invoke({"count", "--k", "3", "--x", "1000", "--format", "csv"});
    CHECK(csv.out == "x,k,count,max_run_length,prime_count\n1000,3,10,4,4\n");
}

TEST_CASE("count --distinct subtracts the duplicate surplus")
{
    const auto r = invoke({"count", "--k", "2", "--x", "2e7", "--distinct"});
    CHECK(r.status == 0);
    const auto fields = rows(r.out, '\t');
    REQUIRE(fields.size() == 1);
    REQUIRE(fields[0].size() == 6);
    CHECK(std::stoull(fields[0][5]) + 2 == std::stoull(fields[0][2]));
}

TEST_CASE("enumerate")
{
    const auto r = invoke({"enumerate", "--k", "3", "--x", "1000"});
    CHECK(r.status == 0);
    CHECK(r.out == "8\t2\n35\t2\n160\t2\n503\t2\n27\t3\n152\t3\n495\t3\n125\t5\n468\t5\n343\t7\n");

    const auto empty = invoke({"enumerate", "--k", "2", "--x", "0"});
    CHECK(empty.status == 0);
    CHECK(empty.out.empty());

    const auto csv = invoke({"enumerate", "--k", "2", "--x", "10", "--format", "csv"});
    CHECK(csv.out == "n,start_prime\n4,2\n9,3\n");
}

TEST_CASE("enumerate output is independent of worker count")
{
    const auto one = invoke({"enumerate", "--k", "2", "--x", "1e8"});
    const auto four = invoke({"enumerate", "--k", "2", "--x", "1e8", "--workers", "4"});
    CHECK(one.status == 0);
    CHECK(one.out == four.out);
    CHECK(rows(one.out, '\t').size() == 31372);
}

TEST_CASE("table for twentieth powers reproduces counts and bound columns")
{
    const auto r = invoke({"table", "--k", "20", "--from", "1e20", "--to", "1e38"});
    CHECK(r.status == 0);
    const auto table = rows(r.out, '\t');
    REQUIRE(table.size() == 19);
    CHECK(table.front() == std::vector<std::string>{"100000000000000000000", "10", "20", "12"});
    CHECK(table.back()[1] == "232");
    CHECK(table.back()[2] == "315");
    CHECK(table.back()[3] == "183");

    // Re-check each row against the library directly.
    for (const auto& row : table) {
        const Wide x = parse_wide(row[0]);
        CHECK(std::stoull(row[1]) == count_sums(PowerPrefixSums::build(x, 20)).count);
        CHECK(std::stoull(row[2]) == floor_upper_bound(x, 20));
        CHECK(std::stoull(row[3]) == floor_lower_bound(x, 20));
    }

    const auto csv = invoke({"table", "--k", "2", "--from", "1e3", "--to", "1e4", "--format", "csv"});
    CHECK(csv.out == "x,count,upper,lower\n1000,37,52,34\n10000,132,166,108\n");
}

TEST_CASE("table stops with exit 2 where prefix sums overflow")
{
    const auto r = invoke({"table", "--k", "10", "--from", "1e36", "--to", "1e38"});
    CHECK(r.status == 2);
    CHECK(rows(r.out, '\t').size() == 1);
    CHECK(r.err.find("overflow") != std::string::npos);
}

TEST_CASE("bounds")
{
    const auto r = invoke({"bounds", "--k", "2", "--x", "1e6", "--format", "csv"});
    CHECK(r.status == 0);
    const auto table = rows(r.out, ',');
    REQUIRE(table.size() == 2);
    CHECK(table[0] == std::vector<std::string>{"x", "k", "c_k", "upper", "lower", "m_estimate", "tws_upper"});
    CHECK(std::stod(table[1][2]) == c_constant(2));
    CHECK(std::stod(table[1][5]) == m_estimate(1'000'000, 2));
    CHECK(std::stod(table[1][6]) == tws_upper_s2(1'000'000));

    const auto k3 = invoke({"bounds", "--k", "3", "--from", "1e3", "--to", "1e5"});
    const auto k3rows = rows(k3.out, '\t');
    REQUIRE(k3rows.size() == 3);
    CHECK(k3rows[0].size() == 6); // empty trailing tws column
}

TEST_CASE("duplicates and cross print expanded sums")
{
    const auto d = invoke({"duplicates", "--k", "2", "--x", "16500000"});
    CHECK(d.status == 0);
    const auto drows = rows(d.out, '\t');
    REQUIRE(drows.size() == 2);
    CHECK(drows[0][0] == "14720439");
    CHECK(drows[0][2] == "131");
    CHECK(drows[1][2] == "941");
    CHECK(drows[1][4].rfind("941^2+947^2+953^2", 0) == 0);
    CHECK(drows[1][4].size() > 20);

    const auto c = invoke({"cross", "--ks", "2,3", "--x", "1e5"});
    CHECK(c.status == 0);
    CHECK(c.out ==
          "23939\t2\t23\t11\t23^2+29^2+31^2+37^2+41^2+43^2+47^2+53^2+59^2+61^2+67^2\n"
          "23939\t3\t17\t3\t17^3+19^3+23^3\n");
}

TEST_CASE("--out writes to a file")
{
    const auto path = std::filesystem::temp_directory_path() / "cpps-cli-out.tsv";
    const auto r = invoke({"count", "--k", "3", "--x", "1000", "--out", path.string()});
    CHECK(r.status == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::string line;
    std::getline(in, line);
    CHECK(line == "1000\t3\t10\t4\t4");
    std::filesystem::remove(path);
}

TEST_CASE("usage errors exit 1 before computing")
{
    CHECK(invoke({}).status == 1);
    CHECK(invoke({"count", "--k", "1", "--x", "100"}).status == 1);
    CHECK(invoke({"count", "--k", "2"}).status == 1);
    CHECK(invoke({"count", "--k", "2", "--x", "1e39"}).status == 1);
    CHECK(invoke({"count", "--k", "2", "--x", "12abc"}).status == 1);
    CHECK(invoke({"table", "--k", "2", "--from", "1e5", "--to", "1e3"}).status == 1);
    CHECK(invoke({"bounds", "--k", "2", "--x", "1"}).status == 1);
    CHECK(invoke({"bounds", "--k", "2"}).status == 1);
    CHECK(invoke({"cross", "--ks", "2", "--x", "100"}).status == 1);
    CHECK(invoke({"cross", "--ks", "2,2", "--x", "100"}).status == 1);
    CHECK(invoke({"count", "--k", "2", "--x", "100", "--format", "xml"}).status == 1);
    CHECK(invoke({"enumerate", "--k", "2", "--x", "100", "--workers", "0"}).status == 1);
    const auto help = invoke({"--help"});
    CHECK(help.status == 0);
}

TEST_CASE("resource errors exit 2")
{
    const auto r = invoke({"count", "--k", "2", "--x", "1e30"});
    CHECK(r.status == 2);
    CHECK(r.err.find("resource") != std::string::npos);
}
