#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <vector>

#include "cpps/wide.hpp"

namespace cpps {

// One (n, start_index, length, k) record as sorted by the duplicate search.
struct SpillRecord {
    Wide n = 0;
    std::uint64_t start_index = 0;
    std::uint64_t length = 0;
    std::uint8_t k = 0;

    friend bool operator==(const SpillRecord&, const SpillRecord&) = default;
};

// Sort order: n, then k, then start index.
[[nodiscard]] bool record_less(const SpillRecord& a, const SpillRecord& b) noexcept;

// On-disk run format: fixed 40-byte little-endian records.
//   bytes  0..15  n (low 64 bits first)
//   bytes 16..23  start_index
//   bytes 24..31  length
//   byte  32      k
//   bytes 33..39  zero padding
inline constexpr std::size_t kSpillRecordBytes = 40;
using SpillBytes = std::array<unsigned char, kSpillRecordBytes>;

[[nodiscard]] SpillBytes encode_record(const SpillRecord& record) noexcept;
[[nodiscard]] SpillRecord decode_record(const SpillBytes& bytes) noexcept;

namespace detail {

// In-memory form, 32 bytes instead of the 40-byte run record.
struct PackedRecord {
    std::uint64_t lo;
    std::uint64_t hi;
    std::uint32_t start_index;
    std::uint32_t length;
    std::uint8_t k;
};

} // namespace detail

struct SortOptions {
    // Records held in memory before a sorted run is spilled to disk.
    std::size_t in_memory_cap = 100'000'000;
    // Directory for run files; empty means the system temp directory.
    std::filesystem::path spill_dir;
};

// Forward cursor over records in record_less order. Owns any run files and
// removes them when destroyed.
class SortedRecords {
public:
    SortedRecords();
    SortedRecords(SortedRecords&&) noexcept;
    SortedRecords& operator=(SortedRecords&&) noexcept;
    ~SortedRecords();

    // Writes the next record into out; false at end of stream.
    bool next(SpillRecord& out);

    [[nodiscard]] std::size_t run_files() const noexcept;

private:
    friend class RecordSorter;
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

// External merge sort: buffers up to in_memory_cap records, spilling each
// full buffer as a sorted run file, and merges the runs on finish().
class RecordSorter {
public:
    explicit RecordSorter(SortOptions options = {});
    RecordSorter(RecordSorter&&) noexcept;
    RecordSorter& operator=(RecordSorter&&) noexcept;
    ~RecordSorter();

    void add(const SpillRecord& record);
    [[nodiscard]] std::uint64_t size() const noexcept { return added_; }

    // Consumes the sorter.
    [[nodiscard]] SortedRecords finish() &&;

private:
    void spill();

    SortOptions options_;
    std::vector<detail::PackedRecord> buffer_;
    std::vector<std::filesystem::path> runs_;
    std::uint64_t added_ = 0;
};

} // namespace cpps
