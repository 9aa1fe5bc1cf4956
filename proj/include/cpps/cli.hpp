#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cpps/wide.hpp"

namespace cpps::cli {

enum class Command { enumerate, count, table, bounds, duplicates, cross };
enum class Format { tsv, csv };

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitCompute = 2;

class UsageError : public std::invalid_argument {
public:
    explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

struct RunConfig {
    Command command = Command::count;
    unsigned k = 0;
    std::vector<unsigned> exponents; // cross only
    std::optional<Wide> x;
    std::optional<Wide> from;
    std::optional<Wide> to;
    Format format = Format::tsv;
    std::optional<std::filesystem::path> out;
    unsigned workers = 1;
    bool distinct = false;
    std::filesystem::path spill_dir;
};

// Throws UsageError for combinations that cannot run.
void validate(const RunConfig& config);

// Runs a validated config, writing results to `out` (or config.out) and
// diagnostics to `err`. Returns the process exit status.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv and runs. Exit 0 on success, 1 on usage errors, 2 on
// overflow/resource errors.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace cpps::cli
