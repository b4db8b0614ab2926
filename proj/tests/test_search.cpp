#include "cuboid/record_io.hpp"
#include "cuboid/search.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace cuboid;
namespace fs = std::filesystem;

namespace {

class VectorSink final : public RecordSink {
public:
    std::vector<SearchRecord> records;
    void consume(const SearchRecord& r) override { records.push_back(r); }
    std::uint64_t sync() override { return records.size(); }
};

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "cuboid_test_search";
    fs::create_directories(dir);
    const fs::path p = dir / name;
    fs::remove(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

SweepPlan small_plan(int h) {
    SweepPlan plan;
    plan.height = h;
    plan.full_records = true;
    return plan;
}

}  // namespace

TEST_CASE("rational enumeration order") {
    const auto h1 = enumerate_rationals(1);
    CHECK(h1 == std::vector<Rational>{-1, 0, 1});
    const auto h2 = enumerate_rationals(2);
    CHECK(h2 == std::vector<Rational>{-2, -1, 0, 1, 2, Rational(-1, 2), Rational(1, 2)});
    for (int h : {1, 2, 5, 10, 17}) CHECK(enumerate_rationals(h).size() == oracle::rational_count(h));
    for (const auto& r : enumerate_rationals(10)) CHECK(is_canonical(r));
}

TEST_CASE("sign filters and grid") {
    SweepPlan plan = small_plan(3);
    plan.b_sign = SignFilter::Positive;
    plan.c_sign = SignFilter::Negative;
    const SweepGrid g(plan);
    for (const auto& b : g.b_values) CHECK(b > 0);
    for (const auto& c : g.c_values) CHECK(c < 0);
    CHECK(g.pair(1).b == g.b_values[0]);
    CHECK(g.pair(1).c == g.c_values[1]);
    CHECK(sign_filter_from_string(to_string(SignFilter::Negative)) == SignFilter::Negative);
}

TEST_CASE("plan validation and digest") {
    SweepPlan plan = small_plan(4);
    CHECK_NOTHROW(plan.validate());
    const std::string d = plan.digest();
    CHECK(d.size() == 16);
    plan.shard_count = 3;
    CHECK(plan.digest() != d);
    plan.shard_index = 3;
    CHECK_THROWS_AS(plan.validate(), std::invalid_argument);
    SweepPlan bad = small_plan(0);
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("sweep is deterministic across worker counts") {
    const SweepPlan plan = small_plan(4);
    VectorSink one, many;
    SweepOptions o1;
    o1.workers = 1;
    SweepOptions o8;
    o8.workers = 8;
    o8.chunk_size = 7;
    const auto s1 = run_sweep(plan, o1, one);
    const auto s8 = run_sweep(plan, o8, many);
    CHECK(s1.finished());
    CHECK(s1.counts == s8.counts);
    CHECK(one.records == many.records);
    const SweepGrid g(plan);
    REQUIRE(one.records.size() == g.total());
    for (std::uint64_t i = 0; i < g.total(); ++i) {
        CHECK(one.records[i].param.b == g.pair(i).b);
        CHECK(one.records[i].param.c == g.pair(i).c);
    }
}

TEST_CASE("shards partition the grid") {
    const SweepPlan whole = small_plan(3);
    VectorSink all;
    run_sweep(whole, {}, all);
    std::vector<SearchRecord> merged(all.records.size());
    std::size_t seen = 0;
    for (std::uint32_t i = 0; i < 3; ++i) {
        SweepPlan p = whole;
        p.shard_count = 3;
        p.shard_index = i;
        VectorSink part;
        const auto s = run_sweep(p, {}, part);
        CHECK(s.shard_total == shard_size(p, SweepGrid(p)));
        for (std::size_t k = 0; k < part.records.size(); ++k) merged[i + 3 * k] = part.records[k];
        seen += part.records.size();
    }
    CHECK(seen == all.records.size());
    CHECK(merged == all.records);
}

TEST_CASE("count-only outcomes are not persisted by default") {
    SweepPlan plan = small_plan(3);
    plan.full_records = false;
    VectorSink sink;
    const auto s = run_sweep(plan, {}, sink);
    for (const auto& r : sink.records) CHECK(persisted(plan, r.outcome));
    CHECK(s.total() == SweepGrid(plan).total());
}

TEST_CASE("checkpoint round trip") {
    Checkpoint cp;
    cp.plan_digest = small_plan(5).digest();
    cp.plan_text = small_plan(5).describe();
    cp.next_index = 1234;
    cp.record_bytes = 98765;
    cp.counts = {1, 2, 3, 4, 5, 6, 7};
    const fs::path p = scratch("cp.txt");
    write_checkpoint(p, cp);
    CHECK(read_checkpoint(p) == cp);
    std::ofstream(p) << "garbage\n";
    CHECK_THROWS_AS(read_checkpoint(p), SweepIoError);
    CHECK_THROWS_AS(read_checkpoint(scratch("missing.txt")), SweepIoError);
}

TEST_CASE("interrupted sweep resumes to an identical record file") {
    const SweepPlan plan = small_plan(4);
    const fs::path ref = scratch("ref.jsonl");
    {
        FileRecordSink sink(ref);
        run_sweep(plan, {}, sink);
    }

    const fs::path out = scratch("resumed.jsonl");
    const fs::path cpp = scratch("resumed.cp");
    SweepOptions first;
    first.checkpoint_path = cpp;
    first.stop_after = 100;
    first.chunk_size = 16;
    first.workers = 3;
    {
        FileRecordSink sink(out);
        const auto s = run_sweep(plan, first, sink);
        CHECK(s.interrupted);
        CHECK_FALSE(s.finished());
    }
    // Simulate a crash that left records past the checkpoint.
    std::ofstream(out, std::ios::app) << "{\"partial\":\n";

    const Checkpoint cp = read_checkpoint(cpp);
    SweepOptions second;
    second.checkpoint_path = cpp;
    second.resume_from = cp;
    {
        FileRecordSink sink(out, cp.record_bytes);
        const auto s = run_sweep(plan, second, sink);
        CHECK(s.finished());
        CHECK(s.evaluated_this_run == s.shard_total - cp.next_index);
    }
    CHECK(slurp(out) == slurp(ref));
}

TEST_CASE("resume with a different plan is rejected") {
    Checkpoint cp;
    cp.plan_digest = small_plan(3).digest();
    SweepOptions o;
    o.resume_from = cp;
    NullRecordSink sink;
    CHECK_THROWS_AS(run_sweep(small_plan(4), o, sink), std::invalid_argument);
}

TEST_CASE("record JSON round trip") {
    const SweepPlan plan = small_plan(3);
    VectorSink sink;
    run_sweep(plan, {}, sink);
    for (const auto& r : sink.records) {
        const std::string line = format_record_line(r);
        CHECK(line.find('\n') == std::string::npos);
        CHECK(record_from_json(nlohmann::json::parse(line)) == r);
    }
}
