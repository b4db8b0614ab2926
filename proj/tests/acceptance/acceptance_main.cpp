// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "cuboid/cli.hpp"
#include "cuboid/cubic_roots.hpp"
#include "cuboid/multisym.hpp"
#include "cuboid/param_map.hpp"
#include "cuboid/record_io.hpp"
#include "cuboid/search.hpp"
#include "cuboid/verify.hpp"

#include "oracles.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

using namespace cuboid;
namespace fs = std::filesystem;

namespace {

struct Verdict {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

struct Config {
    fs::path work_dir;
    int sweep_height = 50;
    double sweep_budget_seconds = 3600.0;
    unsigned workers = 0;
    bool resume = false;
};

bool all_zero(const auto& arr) {
    return std::all_of(arr.begin(), arr.end(), [](const Rational& r) { return r == 0; });
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::vector<std::string> sorted_lines(const std::vector<fs::path>& files) {
    std::vector<std::string> lines;
    for (const auto& f : files) {
        std::ifstream in(f);
        for (std::string line; std::getline(in, line);) lines.push_back(line);
    }
    std::sort(lines.begin(), lines.end());
    return lines;
}

Verdict parametrization_identity() {
    Verdict v;
    std::mt19937_64 rng(101);
    int tested = 0;
    int skipped = 0;
    while (tested < 1000) {
        const ParamPair p{oracle::random_rational(rng, 30, 30), oracle::random_rational(rng, 30, 30)};
        if (!degeneracy_flags(p).empty()) {
            ++skipped;
            continue;
        }
        ++tested;
        const EVector e = evaluate_param_map(p);
        if (curve_residual(e.e11, e.e01, e.e10) != 0) {
            v.fail("curve residual nonzero at (" + to_string(p.b) + ", " + to_string(p.c) + ")");
        }
        const auto r = eform_residuals(e, Rational(1));
        if (!std::all_of(r.begin(), r.begin() + 8, [](const Rational& x) { return x == 0; })) {
            v.fail("E-form residual nonzero at (" + to_string(p.b) + ", " + to_string(p.c) + ")");
        }
    }
    if (v.pass) {
        v.detail = std::to_string(tested) + " pairs, curve and 8 E-forms exactly zero (" +
                   std::to_string(skipped) + " degenerate draws skipped)";
    }
    return v;
}

Verdict phi_commutation() {
    Verdict v;
    std::mt19937_64 rng(202);
    const int n = 1000;
    for (int i = 0; i < n; ++i) {
        CuboidCandidate t;
        for (auto& x : t.x) x = oracle::random_rational(rng, 30, 30);
        for (auto& d : t.d) d = oracle::random_rational(rng, 30, 30);
        t.L = oracle::random_rational(rng, 30, 30);
        const auto via_e = eform_residuals(elementary_values(t), t.L);
        const auto direct = factor_residuals(t);
        if (!std::equal(direct.begin(), direct.end(), via_e.begin())) {
            v.fail("mismatch on tuple " + std::to_string(i));
        }
    }
    if (v.pass) v.detail = std::to_string(n) + " tuples, 8 components equal exactly";
    return v;
}

Verdict cubic_completeness() {
    Verdict v;
    std::mt19937_64 rng(303);
    const int split = 1000;
    for (int i = 0; i < split; ++i) {
        std::vector<Rational> r;
        for (int k = 0; k < 3; ++k) r.push_back(oracle::random_rational(rng, 60, 30));
        std::sort(r.begin(), r.end());
        const MonicCubic q{-(r[0] + r[1] + r[2]), r[0] * r[1] + r[1] * r[2] + r[2] * r[0],
                           -(r[0] * r[1] * r[2])};
        const RootClassification rc = rational_roots(q);
        if (rc.roots != r || !rc.all_rational()) v.fail("root multiset not recovered for cubic " + std::to_string(i));
    }

    std::uniform_int_distribution<long> coef(-300, 300);
    std::uniform_int_distribution<long> constant(-10000, 10000);
    std::uniform_int_distribution<long> small(-21, 21);
    const int integer = 400;
    int with_roots = 0;
    for (int i = 0; i < integer; ++i) {
        long a2, a1, a0;
        if (i % 2 == 0) {
            // Built from an integer root so that the oracle has something to find.
            long r, s, t;
            do {
                r = small(rng), s = small(rng), t = small(rng);
            } while (std::labs(r * s * t) > 10000);
            a2 = -(r + s + t);
            a1 = r * s + s * t + t * r + (i % 4 == 0 ? 0 : 1);
            a0 = -(r * s * t);
        } else {
            a2 = coef(rng), a1 = coef(rng), a0 = constant(rng);
        }
        const auto brute = oracle::brute_integer_roots(a2, a1, a0);
        const RootClassification rc = rational_roots({Rational(a2), Rational(a1), Rational(a0)});
        std::vector<Rational> expect(brute.begin(), brute.end());
        if (rc.roots != expect) v.fail("oracle mismatch for integer cubic " + std::to_string(i));
        if (!brute.empty()) ++with_roots;
    }
    if (v.pass) {
        v.detail = std::to_string(split) + " split cubics recovered; " + std::to_string(integer) +
                   " integer cubics match the divisor-search oracle (" + std::to_string(with_roots) +
                   " with roots)";
    }
    return v;
}

Verdict no_go_regressions() {
    Verdict v;
    const NoGoReport rep = check_one_parameter_cases(20);
    if (rep.samples != oracle::rational_count(20)) v.fail("sample size mismatch");
    if (rep.checks == 0) v.fail("no checks ran");
    for (const auto& f : rep.failures) {
        v.fail(std::string(to_string(f.family)) + " at c = " + to_string(f.c) + ": " + f.reason);
    }
    if (v.pass) {
        v.detail = std::to_string(rep.samples) + " values of c, " + std::to_string(rep.checks) +
                   " family checks, " + std::to_string(rep.skipped) + " degenerate skipped";
    }
    return v;
}

Verdict sweep_determinism(const Config& cfg) {
    Verdict v;
    const fs::path dir = cfg.work_dir / "determinism";
    fs::remove_all(dir);
    fs::create_directories(dir);

    SweepPlan plan;
    plan.height = 5;
    plan.full_records = true;

    auto sweep_to = [&](const SweepPlan& p, unsigned workers, const fs::path& file) {
        SweepOptions o;
        o.workers = workers;
        o.chunk_size = 13;
        FileRecordSink sink(file);
        return run_sweep(p, o, sink);
    };

    const auto s1 = sweep_to(plan, 1, dir / "w1.jsonl");
    sweep_to(plan, 8, dir / "w8.jsonl");
    if (slurp(dir / "w1.jsonl") != slurp(dir / "w8.jsonl")) v.fail("1-worker and 8-worker files differ");

    std::vector<fs::path> shards;
    for (std::uint32_t i = 0; i < 4; ++i) {
        SweepPlan p = plan;
        p.shard_count = 4;
        p.shard_index = i;
        shards.push_back(dir / ("shard" + std::to_string(i) + ".jsonl"));
        sweep_to(p, 2, shards.back());
    }
    const auto whole = sorted_lines({dir / "w1.jsonl"});
    if (sorted_lines(shards) != whole) v.fail("4-way shard union differs from the unsharded run");

    const std::uint64_t expected = oracle::rational_count(5) * oracle::rational_count(5);
    if (whole.size() != expected || s1.total() != expected) {
        v.fail("record count " + std::to_string(whole.size()) + " != grid count " + std::to_string(expected));
    }
    if (v.pass) {
        v.detail = std::to_string(whole.size()) + " records, byte-identical across workers, shard union equal";
    }
    return v;
}

Verdict desk_scale_search(const Config& cfg) {
    Verdict v;
    fs::create_directories(cfg.work_dir);
    const fs::path out = cfg.work_dir / ("sweep_h" + std::to_string(cfg.sweep_height) + ".jsonl");
    const fs::path ckpt = out.string() + ".ckpt";

    SweepPlan plan;
    plan.height = cfg.sweep_height;
    SweepOptions o;
    o.workers = cfg.workers != 0 ? cfg.workers : std::max(1u, std::thread::hardware_concurrency());
    o.checkpoint_path = ckpt;

    // With --resume, an interrupted run from an earlier invocation is picked up;
    // otherwise the sweep starts from scratch so the reported time is real.
    std::optional<std::uint64_t> offset;
    if (cfg.resume && fs::exists(ckpt)) {
        try {
            const Checkpoint cp = read_checkpoint(ckpt);
            if (cp.plan_digest == plan.digest()) {
                offset = cp.record_bytes;
                o.resume_from = cp;
            }
        } catch (const SweepIoError&) {
        }
    }

    SweepSummary s;
    {
        FileRecordSink sink(out, offset);
        s = run_sweep(plan, o, sink);
    }
    if (!s.finished()) v.fail("sweep did not complete");

    const auto counts = s.counts;
    std::ostringstream breakdown;
    for (int i = 0; i < kOutcomeCount; ++i) {
        breakdown << (i ? ", " : "") << to_string(static_cast<Outcome>(i)) << '=' << counts[i];
    }

    // Hits are audited and reported as findings; only an unverifiable hit is a failure.
    std::size_t hits = 0;
    std::ifstream in(out);
    for (std::string line; std::getline(in, line);) {
        const SearchRecord r = record_from_json(nlohmann::json::parse(line));
        if (r.outcome != Outcome::PerfectCuboid) continue;
        ++hits;
        std::vector<std::string> vals;
        for (const auto& x : r.candidate->x) vals.push_back(to_string(x));
        for (const auto& d : r.candidate->d) vals.push_back(to_string(d));
        vals.push_back(to_string(r.candidate->L));
        std::ostringstream audit, err;
        const int code = cli::cmd_verify_tuple(vals, audit, err);
        std::cout << "FINDING: PERFECT_CUBOID at (" << to_string(r.param.b) << ", "
                  << to_string(r.param.c) << "), verify-tuple exit " << code << '\n';
        if (code != 0) v.fail("a PERFECT_CUBOID record failed independent verification");
    }

    const double seconds = s.wall_seconds;
    std::ostringstream d;
    d << "H=" << cfg.sweep_height << ", " << s.total() << " pairs, " << hits << " PERFECT_CUBOID, "
      << std::fixed << std::setprecision(1) << seconds << " s this run on " << o.workers
      << " worker(s) [" << breakdown.str() << "]";
    if (o.resume_from) d << " (resumed at index " << o.resume_from->next_index << ")";
    if (v.pass && seconds > cfg.sweep_budget_seconds) v.fail("exceeded the time budget: " + d.str());
    if (v.pass) v.detail = d.str();
    return v;
}

Verdict euler_brick_control() {
    Verdict v;
    const CuboidCandidate brick{{Rational(44), Rational(117), Rational(240)},
                                {Rational(267), Rational(244), Rational(125)},
                                Rational(271)};
    const auto r = cuboid_residuals(brick);
    if (r[0] == 0) v.fail("space-diagonal residual vanished");
    if (r[1] != 0 || r[2] != 0 || r[3] != 0) v.fail("a face residual is nonzero");
    std::ostringstream out, err;
    const int code = cli::cmd_verify_tuple({"44", "117", "240", "267", "244", "125", "271"}, out, err);
    if (code == 0) v.fail("verify-tuple accepted the Euler brick");
    if (v.pass) {
        v.detail = "face residuals 0, space-diagonal residual " + to_string(r[0]) +
                   ", verify-tuple exit " + std::to_string(code);
    }
    return v;
}

}  // namespace

int main(int argc, char** argv) {
    Config cfg;
    cfg.work_dir = fs::temp_directory_path() / "cuboid_acceptance";
    CLI::App app{"Acceptance suite"};
    std::string work_dir = cfg.work_dir.string();
    app.add_option("--work-dir", work_dir, "scratch directory for sweep output");
    app.add_option("--sweep-height", cfg.sweep_height, "height of the desk-scale sweep");
    app.add_option("--sweep-budget", cfg.sweep_budget_seconds, "wall-clock budget in seconds");
    app.add_option("--workers", cfg.workers, "sweep workers (default: hardware concurrency)");
    app.add_flag("--resume", cfg.resume, "continue an interrupted desk-scale sweep");
    CLI11_PARSE(app, argc, argv);
    cfg.work_dir = work_dir;

    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
        {"parametrization identity", parametrization_identity},
        {"phi-commutation", phi_commutation},
        {"cubic solver completeness", cubic_completeness},
        {"one-parameter no-go regressions", no_go_regressions},
        {"sweep determinism and coverage", [&] { return sweep_determinism(cfg); }},
        {"desk-scale search", [&] { return desk_scale_search(cfg); }},
        {"Euler-brick negative control", euler_brick_control},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = criteria[i].second();
        } catch (const std::exception& e) {
            v.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (!v.pass) ++failures;
        std::cout << (v.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << " (" << criteria[i].first
                  << "): " << v.detail << " [" << std::fixed << std::setprecision(2) << secs << " s]"
                  << std::endl;
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criterion(s) failed")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
