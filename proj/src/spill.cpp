#include "cpps/spill.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <limits>
#include <queue>
#include <random>
#include <string>

#include "cpps/errors.hpp"

namespace cpps {

namespace fs = std::filesystem;

bool record_less(const SpillRecord& a, const SpillRecord& b) noexcept
{
    if (a.n != b.n) return a.n < b.n;
    if (a.k != b.k) return a.k < b.k;
    return a.start_index < b.start_index;
}

namespace {

void put_u64(unsigned char* out, std::uint64_t v) noexcept
{
    for (int i = 0; i < 8; ++i) out[i] = static_cast<unsigned char>(v >> (8 * i));
}

std::uint64_t get_u64(const unsigned char* in) noexcept
{
    std::uint64_t v = 0;
    for (int i = 7; i >= 0; --i) v = (v << 8) | in[i];
    return v;
}

fs::path unique_run_path(const fs::path& dir)
{
    static std::atomic<std::uint64_t> counter{0};
    static const std::uint64_t salt = std::random_device{}();
    return dir / ("cpps-run-" + std::to_string(salt) + "-" + std::to_string(counter++) + ".bin");
}

SpillRecord unpack(const detail::PackedRecord& p) noexcept
{
    return SpillRecord{(static_cast<Wide>(p.hi) << 64) | p.lo, p.start_index, p.length, p.k};
}

bool packed_less(const detail::PackedRecord& a, const detail::PackedRecord& b) noexcept
{
    if (a.hi != b.hi) return a.hi < b.hi;
    if (a.lo != b.lo) return a.lo < b.lo;
    if (a.k != b.k) return a.k < b.k;
    return a.start_index < b.start_index;
}

class RunReader {
public:
    explicit RunReader(const fs::path& path) : in_(path, std::ios::binary)
    {
        if (!in_) throw ResourceError("cannot open spill run " + path.string());
    }

    bool next(SpillRecord& out)
    {
        SpillBytes bytes;
        if (!in_.read(reinterpret_cast<char*>(bytes.data()), bytes.size())) return false;
        out = decode_record(bytes);
        return true;
    }

private:
    std::ifstream in_;
};

} // namespace

SpillBytes encode_record(const SpillRecord& r) noexcept
{
    SpillBytes b{};
    put_u64(b.data(), static_cast<std::uint64_t>(r.n));
    put_u64(b.data() + 8, static_cast<std::uint64_t>(r.n >> 64));
    put_u64(b.data() + 16, r.start_index);
    put_u64(b.data() + 24, r.length);
    b[32] = r.k;
    return b;
}

SpillRecord decode_record(const SpillBytes& b) noexcept
{
    SpillRecord r;
    r.n = (static_cast<Wide>(get_u64(b.data() + 8)) << 64) | get_u64(b.data());
    r.start_index = get_u64(b.data() + 16);
    r.length = get_u64(b.data() + 24);
    r.k = b[32];
    return r;
}

struct SortedRecords::Impl {
    // Exactly one of the two sources is used.
    std::vector<detail::PackedRecord> memory;
    std::size_t position = 0;

    struct Head {
        SpillRecord record;
        std::size_t run;
    };
    struct HeadAfter {
        bool operator()(const Head& a, const Head& b) const noexcept
        {
            return record_less(b.record, a.record);
        }
    };
    std::vector<fs::path> paths;
    std::vector<RunReader> readers;
    std::priority_queue<Head, std::vector<Head>, HeadAfter> heads;

    ~Impl()
    {
        readers.clear();
        std::error_code ec;
        for (const auto& p : paths) fs::remove(p, ec);
    }
};

SortedRecords::SortedRecords() : impl_(std::make_unique<Impl>()) {}
SortedRecords::SortedRecords(SortedRecords&&) noexcept = default;
SortedRecords& SortedRecords::operator=(SortedRecords&&) noexcept = default;
SortedRecords::~SortedRecords() = default;

bool SortedRecords::next(SpillRecord& out)
{
    auto& s = *impl_;
    if (s.paths.empty()) {
        if (s.position == s.memory.size()) return false;
        out = unpack(s.memory[s.position++]);
        return true;
    }
    if (s.heads.empty()) return false;
    const Impl::Head top = s.heads.top();
    s.heads.pop();
    out = top.record;
    SpillRecord following;
    if (s.readers[top.run].next(following)) s.heads.push({following, top.run});
    return true;
}

std::size_t SortedRecords::run_files() const noexcept { return impl_->paths.size(); }

RecordSorter::RecordSorter(SortOptions options) : options_(std::move(options))
{
    if (options_.in_memory_cap == 0) options_.in_memory_cap = 1;
    if (options_.spill_dir.empty()) options_.spill_dir = fs::temp_directory_path();
}

RecordSorter::RecordSorter(RecordSorter&&) noexcept = default;
RecordSorter& RecordSorter::operator=(RecordSorter&&) noexcept = default;

RecordSorter::~RecordSorter()
{
    std::error_code ec;
    for (const auto& p : runs_) fs::remove(p, ec);
}

void RecordSorter::add(const SpillRecord& r)
{
    constexpr auto kMax32 = std::numeric_limits<std::uint32_t>::max();
    if (r.start_index > kMax32 || r.length > kMax32) {
        throw OverflowError("record start index or length exceeds 32 bits");
    }
    buffer_.push_back(detail::PackedRecord{static_cast<std::uint64_t>(r.n), static_cast<std::uint64_t>(r.n >> 64),
                             static_cast<std::uint32_t>(r.start_index),
                             static_cast<std::uint32_t>(r.length), r.k});
    ++added_;
    if (buffer_.size() >= options_.in_memory_cap) spill();
}

void RecordSorter::spill()
{
    if (buffer_.empty()) return;
    std::sort(buffer_.begin(), buffer_.end(), packed_less);
    const fs::path path = unique_run_path(options_.spill_dir);
    {
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out) throw ResourceError("cannot create spill run " + path.string());
        runs_.push_back(path);
        for (const auto& p : buffer_) {
            const SpillBytes bytes = encode_record(unpack(p));
            out.write(reinterpret_cast<const char*>(bytes.data()), bytes.size());
        }
        if (!out) throw ResourceError("failed writing spill run " + path.string());
    }
    buffer_.clear();
}

SortedRecords RecordSorter::finish() &&
{
    SortedRecords result;
    auto& s = *result.impl_;
    if (runs_.empty()) {
        std::sort(buffer_.begin(), buffer_.end(), packed_less);
        s.memory = std::move(buffer_);
        buffer_ = {};
        return result;
    }

    spill();
    buffer_ = {};
    s.paths = std::move(runs_);
    runs_.clear();
    s.readers.reserve(s.paths.size());
    for (std::size_t i = 0; i < s.paths.size(); ++i) {
        s.readers.emplace_back(s.paths[i]);
        SpillRecord first;
        if (s.readers[i].next(first)) s.heads.push({first, i});
    }
    return result;
}

} // namespace cpps
