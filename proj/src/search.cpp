#include "cuboid/search.hpp"

#include "cuboid/record_io.hpp"

#include <chrono>
#include <condition_variable>
#include <cstdio>
#include <exception>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

namespace cuboid {

std::vector<Rational> enumerate_rationals(int height) {
    if (height < 1) throw std::invalid_argument("height must be >= 1");
    std::vector<Rational> out;
    for (int q = 1; q <= height; ++q) {
        for (int p = -height; p <= height; ++p) {
            if (p == 0 && q != 1) continue;
            if (std::gcd(p, q) != 1) continue;
            out.emplace_back(p, q);
        }
    }
    return out;
}

const char* to_string(SignFilter s) {
    switch (s) {
        case SignFilter::Any: return "any";
        case SignFilter::Positive: return "positive";
        case SignFilter::Negative: return "negative";
    }
    return "?";
}

SignFilter sign_filter_from_string(std::string_view s) {
    for (SignFilter f : {SignFilter::Any, SignFilter::Positive, SignFilter::Negative}) {
        if (s == to_string(f)) return f;
    }
    throw std::invalid_argument("sign filter must be any, positive or negative");
}

void SweepPlan::validate() const {
    if (height < 1) throw std::invalid_argument("height must be >= 1");
    if (shard_count < 1) throw std::invalid_argument("shard count must be >= 1");
    if (shard_index >= shard_count) throw std::invalid_argument("shard index must be < shard count");
}

std::string SweepPlan::describe() const {
    std::ostringstream os;
    os << "height=" << height << ";b_sign=" << to_string(b_sign) << ";c_sign=" << to_string(c_sign)
       << ";shards=" << shard_count << ";shard_index=" << shard_index
       << ";full_records=" << (full_records ? 1 : 0) << ";max_trials=" << budget.max_trials
       << ";max_divisors=" << budget.max_divisors;
    return os.str();
}

std::string SweepPlan::digest() const {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char ch : describe()) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace {

bool keep(SignFilter f, const Rational& r) {
    switch (f) {
        case SignFilter::Any: return true;
        case SignFilter::Positive: return r > 0;
        case SignFilter::Negative: return r < 0;
    }
    return true;
}

std::vector<Rational> filtered(const std::vector<Rational>& all, SignFilter f) {
    std::vector<Rational> out;
    for (const Rational& r : all) {
        if (keep(f, r)) out.push_back(r);
    }
    return out;
}

}  // namespace

SweepGrid::SweepGrid(const SweepPlan& plan) {
    const auto all = enumerate_rationals(plan.height);
    b_values = filtered(all, plan.b_sign);
    c_values = filtered(all, plan.c_sign);
}

ParamPair SweepGrid::pair(std::uint64_t g) const {
    return {b_values[g / c_values.size()], c_values[g % c_values.size()]};
}

std::uint64_t shard_size(const SweepPlan& plan, const SweepGrid& grid) {
    const std::uint64_t total = grid.total();
    if (plan.shard_index >= total) return 0;
    return (total - plan.shard_index + plan.shard_count - 1) / plan.shard_count;
}

bool persisted(const SweepPlan& plan, Outcome o) {
    if (plan.full_records) return true;
    return o != Outcome::Degenerate && o != Outcome::CubicXFail && o != Outcome::CubicDFail;
}

std::uint64_t SweepSummary::total() const {
    return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

// --- checkpoint file ------------------------------------------------------

void write_checkpoint(const std::filesystem::path& path, const Checkpoint& cp) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw SweepIoError("cannot write checkpoint " + tmp.string());
        out << "cuboid-sweep-checkpoint " << Checkpoint::kVersion << '\n'
            << "plan " << cp.plan_digest << '\n'
            << "plan_text " << cp.plan_text << '\n'
            << "next_index " << cp.next_index << '\n'
            << "record_bytes " << cp.record_bytes << '\n';
        for (int i = 0; i < kOutcomeCount; ++i) {
            out << "count " << to_string(static_cast<Outcome>(i)) << ' ' << cp.counts[i] << '\n';
        }
        out.flush();
        if (!out) throw SweepIoError("failed writing checkpoint " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw SweepIoError("cannot move checkpoint into place: " + ec.message());
}

Checkpoint read_checkpoint(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SweepIoError("cannot open checkpoint " + path.string());

    auto bad = [&](const std::string& why) {
        return SweepIoError("malformed checkpoint " + path.string() + ": " + why);
    };

    std::string magic;
    int version = 0;
    if (!(in >> magic >> version) || magic != "cuboid-sweep-checkpoint") throw bad("header");
    if (version != Checkpoint::kVersion) throw bad("unsupported version " + std::to_string(version));

    Checkpoint cp;
    std::string key;
    bool have_plan = false, have_next = false, have_bytes = false;
    while (in >> key) {
        if (key == "plan") {
            in >> cp.plan_digest;
            have_plan = true;
        } else if (key == "plan_text") {
            in >> cp.plan_text;
        } else if (key == "next_index") {
            in >> cp.next_index;
            have_next = true;
        } else if (key == "record_bytes") {
            in >> cp.record_bytes;
            have_bytes = true;
        } else if (key == "count") {
            std::string name;
            std::uint64_t n = 0;
            in >> name >> n;
            const auto o = outcome_from_string(name);
            if (!o) throw bad("unknown outcome " + name);
            cp.counts[static_cast<int>(*o)] = n;
        } else {
            throw bad("unknown key " + key);
        }
        if (!in) throw bad("value for " + key);
    }
    if (!have_plan || !have_next || !have_bytes) throw bad("missing fields");
    return cp;
}

// --- record file ----------------------------------------------------------

FileRecordSink::FileRecordSink(const std::filesystem::path& path,
                               std::optional<std::uint64_t> resume_offset)
    : path_(path) {
    if (resume_offset) {
        std::error_code ec;
        const auto size = std::filesystem::exists(path, ec) ? std::filesystem::file_size(path, ec) : 0;
        if (ec || size < *resume_offset) {
            throw SweepIoError("record file " + path.string() + " is shorter than the checkpoint");
        }
        std::filesystem::resize_file(path, *resume_offset, ec);
        if (ec) throw SweepIoError("cannot truncate " + path.string() + ": " + ec.message());
        out_.open(path, std::ios::binary | std::ios::app);
        offset_ = *resume_offset;
    } else {
        out_.open(path, std::ios::binary | std::ios::trunc);
    }
    if (!out_) throw SweepIoError("cannot open record file " + path.string());
}

void FileRecordSink::consume(const SearchRecord& rec) {
    const std::string line = format_record_line(rec);
    out_ << line << '\n';
    if (!out_) throw SweepIoError("write failed on " + path_.string());
    offset_ += line.size() + 1;
}

std::uint64_t FileRecordSink::sync() {
    out_.flush();
    if (!out_) throw SweepIoError("flush failed on " + path_.string());
    return offset_;
}

// --- sweep ----------------------------------------------------------------

namespace {

// Shared state between workers and the single writer. Chunk k covers
// shard-local indices [begin + k*size, begin + (k+1)*size) clipped to end.
struct WorkQueue {
    std::mutex mu;
    std::condition_variable ready_cv;
    std::condition_variable space_cv;
    std::map<std::uint64_t, std::vector<SearchRecord>> ready;
    std::uint64_t written = 0;  // chunks consumed by the writer
    std::atomic<std::uint64_t> next{0};
    std::atomic<bool> abort{false};
    std::exception_ptr error;

    void stop() {
        abort = true;
        std::lock_guard lock(mu);
        ready_cv.notify_all();
        space_cv.notify_all();
    }
};

// Sets abort before the worker threads (declared earlier) are joined.
struct StopOnExit {
    WorkQueue& q;
    ~StopOnExit() { q.stop(); }
};

}  // namespace

SweepSummary run_sweep(const SweepPlan& plan, const SweepOptions& options, RecordSink& sink) {
    plan.validate();
    if (options.workers == 0) throw std::invalid_argument("workers must be >= 1");
    if (options.chunk_size == 0) throw std::invalid_argument("chunk size must be >= 1");

    const auto t0 = std::chrono::steady_clock::now();
    const SweepGrid grid(plan);
    const std::uint64_t n = shard_size(plan, grid);

    Checkpoint state;
    state.plan_digest = plan.digest();
    state.plan_text = plan.describe();
    if (options.resume_from) {
        if (options.resume_from->plan_digest != state.plan_digest) {
            throw std::invalid_argument("checkpoint belongs to a different plan");
        }
        if (options.resume_from->next_index > n) {
            throw std::invalid_argument("checkpoint index beyond the shard");
        }
        state = *options.resume_from;
    }

    const std::uint64_t begin = state.next_index;
    std::uint64_t end = n;
    if (options.stop_after) end = std::min(n, begin + *options.stop_after);
    const std::uint64_t chunk = options.chunk_size;
    const std::uint64_t chunks = (end - begin + chunk - 1) / chunk;
    const std::uint64_t window = 4ull * options.workers + 4;

    PipelineOptions pipeline;
    pipeline.budget = plan.budget;

    WorkQueue q;
    auto worker = [&] {
        try {
            for (;;) {
                const std::uint64_t k = q.next++;
                if (k >= chunks || q.abort) return;
                {
                    std::unique_lock lock(q.mu);
                    q.space_cv.wait(lock, [&] { return q.abort || k < q.written + window; });
                    if (q.abort) return;
                }
                const std::uint64_t lo = begin + k * chunk;
                const std::uint64_t hi = std::min(end, lo + chunk);
                std::vector<SearchRecord> out;
                out.reserve(hi - lo);
                for (std::uint64_t j = lo; j < hi; ++j) {
                    const std::uint64_t g = plan.shard_index + j * plan.shard_count;
                    out.push_back(evaluate_pair(grid.pair(g), pipeline));
                }
                std::lock_guard lock(q.mu);
                q.ready.emplace(k, std::move(out));
                q.ready_cv.notify_all();
            }
        } catch (...) {
            std::lock_guard lock(q.mu);
            if (!q.error) q.error = std::current_exception();
            q.abort = true;
            q.ready_cv.notify_all();
            q.space_cv.notify_all();
        }
    };

    SweepSummary summary;
    summary.shard_total = n;

    std::uint64_t since_checkpoint = 0;
    auto checkpoint = [&] {
        if (!options.checkpoint_path) return;
        state.record_bytes = sink.sync();
        write_checkpoint(*options.checkpoint_path, state);
        since_checkpoint = 0;
    };

    {
        std::vector<std::jthread> threads;
        StopOnExit guard{q};
        const unsigned spawn = static_cast<unsigned>(std::min<std::uint64_t>(options.workers, chunks));
        for (unsigned i = 0; i < spawn; ++i) threads.emplace_back(worker);

        for (std::uint64_t k = 0; k < chunks && !summary.interrupted; ++k) {
            std::vector<SearchRecord> batch;
            {
                std::unique_lock lock(q.mu);
                q.ready_cv.wait(lock, [&] { return q.error || q.ready.count(k) > 0; });
                if (q.error) std::rethrow_exception(q.error);
                auto node = q.ready.extract(k);
                batch = std::move(node.mapped());
            }
            for (const SearchRecord& rec : batch) {
                if (options.stop_flag && options.stop_flag->load()) {
                    summary.interrupted = true;
                    break;
                }
                if (persisted(plan, rec.outcome)) sink.consume(rec);
                ++state.counts[static_cast<int>(rec.outcome)];
                ++state.next_index;
                ++summary.evaluated_this_run;
                if (++since_checkpoint >= options.checkpoint_every) checkpoint();
            }
            std::lock_guard lock(q.mu);
            q.written = k + 1;
            q.space_cv.notify_all();
        }
    }

    if (state.next_index < n) summary.interrupted = true;
    checkpoint();
    sink.sync();

    summary.counts = state.counts;
    summary.completed = state.next_index;
    summary.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return summary;
}

}  // namespace cuboid
