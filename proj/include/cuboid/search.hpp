#pragma once

// Bounded-height sweep over rational parameter pairs (b, c).

#include "cuboid/verify.hpp"

#include <array>
#include <atomic>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cuboid {

/// Every p/q in lowest terms with |p| <= H and 1 <= q <= H, ordered by q
/// ascending and then p ascending (0 appears once, as 0/1).
std::vector<Rational> enumerate_rationals(int height);

enum class SignFilter : std::uint8_t { Any, Positive, Negative };

const char* to_string(SignFilter s);
SignFilter sign_filter_from_string(std::string_view s);

struct SweepPlan {
    int height = 1;
    SignFilter b_sign = SignFilter::Any;
    SignFilter c_sign = SignFilter::Any;
    std::uint32_t shard_count = 1;
    std::uint32_t shard_index = 0;
    /// Persist every record; by default DEGENERATE and CUBIC_*_FAIL are counted only.
    bool full_records = false;
    DivisorBudget budget;

    /// Throws std::invalid_argument on H < 1 or shard_index >= shard_count.
    void validate() const;
    /// Canonical one-line description; the digest is computed over it.
    std::string describe() const;
    /// 16 hex digits, FNV-1a over describe().
    std::string digest() const;
};

/// The (b, c) grid of a plan, before sharding. Pair g is
/// (b_values[g / c_values.size()], c_values[g % c_values.size()]).
struct SweepGrid {
    std::vector<Rational> b_values;
    std::vector<Rational> c_values;

    explicit SweepGrid(const SweepPlan& plan);
    std::uint64_t total() const { return std::uint64_t(b_values.size()) * c_values.size(); }
    ParamPair pair(std::uint64_t global_index) const;
};

/// Number of grid pairs a shard owns (global index = shard_index + k * shard_count).
std::uint64_t shard_size(const SweepPlan& plan, const SweepGrid& grid);

bool persisted(const SweepPlan& plan, Outcome o);

using OutcomeCounts = std::array<std::uint64_t, kOutcomeCount>;

struct Checkpoint {
    static constexpr int kVersion = 1;

    std::string plan_digest;
    std::string plan_text;
    std::uint64_t next_index = 0;    // shard-local index of the next pair to evaluate
    std::uint64_t record_bytes = 0;  // durable length of the record file
    OutcomeCounts counts{};

    friend bool operator==(const Checkpoint&, const Checkpoint&) = default;
};

class SweepIoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Atomic write (temp file + rename). Throws SweepIoError.
void write_checkpoint(const std::filesystem::path& path, const Checkpoint& cp);
/// Throws SweepIoError on I/O failure or a malformed/unsupported file.
Checkpoint read_checkpoint(const std::filesystem::path& path);

/// Single-writer consumer of records in enumeration order.
class RecordSink {
public:
    virtual ~RecordSink() = default;
    virtual void consume(const SearchRecord& rec) = 0;
    /// Flushes and returns the durable byte position for checkpoints.
    virtual std::uint64_t sync() = 0;
};

/// One JSON object per line. Opening with resume_offset truncates the file
/// to that length and appends; otherwise the file is replaced.
class FileRecordSink final : public RecordSink {
public:
    explicit FileRecordSink(const std::filesystem::path& path,
                            std::optional<std::uint64_t> resume_offset = std::nullopt);
    void consume(const SearchRecord& rec) override;
    std::uint64_t sync() override;

private:
    std::filesystem::path path_;
    std::ofstream out_;
    std::uint64_t offset_ = 0;
};

/// Discards records; used for count-only runs.
class NullRecordSink final : public RecordSink {
public:
    void consume(const SearchRecord&) override {}
    std::uint64_t sync() override { return 0; }
};

struct SweepOptions {
    unsigned workers = 1;
    std::optional<std::filesystem::path> checkpoint_path;
    std::uint64_t checkpoint_every = 100'000;
    /// Continue from this state; its digest must match the plan.
    std::optional<Checkpoint> resume_from;
    /// Stop (with a checkpoint) after this many pairs in this run.
    std::optional<std::uint64_t> stop_after;
    /// Polled between pairs; set from a signal handler to interrupt.
    const std::atomic<bool>* stop_flag = nullptr;
    /// Pairs per work unit handed to a worker.
    std::uint32_t chunk_size = 512;
};

struct SweepSummary {
    OutcomeCounts counts{};          // cumulative, including resumed state
    std::uint64_t evaluated_this_run = 0;
    std::uint64_t completed = 0;     // shard-local pairs done in total
    std::uint64_t shard_total = 0;
    double wall_seconds = 0.0;
    bool interrupted = false;

    std::uint64_t total() const;
    bool finished() const { return completed == shard_total; }
};

/// Evaluates every pair of the shard exactly once, emitting records in
/// enumeration order regardless of the worker count. Throws SweepIoError
/// (the last checkpoint on disk stays resumable) and std::invalid_argument.
SweepSummary run_sweep(const SweepPlan& plan, const SweepOptions& options, RecordSink& sink);

}  // namespace cuboid
