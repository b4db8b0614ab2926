#include "cuboid/cli.hpp"

#include "cuboid/multisym.hpp"
#include "cuboid/record_io.hpp"
#include "cuboid/search.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <thread>

namespace cuboid::cli {

namespace {

template <std::size_t N>
bool all_zero(const std::array<Rational, N>& values) {
    return std::all_of(values.begin(), values.end(), [](const Rational& r) { return r == 0; });
}

template <std::size_t N>
void print_residuals(std::ostream& out, const char* title, const std::array<Rational, N>& r) {
    out << title << ":";
    for (const Rational& v : r) out << ' ' << to_string(v);
    out << (all_zero(r) ? "  [all zero]" : "") << '\n';
}

void print_evector(std::ostream& out, const EVector& e) {
    const auto comps = components(e);
    for (std::size_t i = 0; i < comps.size(); ++i) {
        out << "  " << kEVectorNames[i] << " = " << to_string(*comps[i]) << '\n';
    }
}

void print_cubic(std::ostream& out, const char* name, char var, const MonicCubic& q,
                 const DivisorBudget& budget) {
    out << name << ": " << var << "^3 + (" << to_string(q.a2) << ")" << var << "^2 + ("
        << to_string(q.a1) << ")" << var << " + (" << to_string(q.a0) << ")\n";
    out << "  discriminant = " << to_string(discriminant(q))
        << (may_split_over_rationals(q) ? "  (rational square)" : "  (not a rational square)") << '\n';
    try {
        const RootClassification rc = rational_roots(q, budget);
        out << "  rational roots:";
        if (rc.roots.empty()) out << " none";
        for (const Rational& r : rc.roots) out << ' ' << to_string(r);
        out << "\n  status = " << to_string(rc.status) << '\n';
    } catch (const DivisorOverflow& e) {
        out << "  rational roots: unresolved (" << e.what() << ")\n";
    }
}

}  // namespace

int cmd_eval(const std::string& b_text, const std::string& c_text, std::uint64_t max_trials,
             std::ostream& out, std::ostream& err) {
    ParamPair p;
    try {
        p = {parse_rational(b_text), parse_rational(c_text)};
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    PipelineOptions options;
    options.budget.max_trials = max_trials;

    out << "pair: b = " << to_string(p.b) << ", c = " << to_string(p.c) << '\n';
    const DegeneracySet flags = degeneracy_flags(p);
    out << "degeneracy: " << (flags.empty() ? "none" : flags.label()) << '\n';

    if (flags.empty()) {
        const EVector e = evaluate_param_map(p);
        out << "evector (composition path, L = 1):\n";
        print_evector(out, e);
        try {
            const EVector closed = evaluate_closed_forms(p);
            const auto a = components(e);
            const auto b = components(closed);
            std::string mismatches;
            for (std::size_t i = 0; i < a.size(); ++i) {
                if (*a[i] != *b[i]) mismatches += std::string(" ") + kEVectorNames[i];
            }
            out << "closed forms: " << (mismatches.empty() ? "agree" : "MISMATCH on" + mismatches)
                << '\n';
        } catch (const DegenerateParameter& d) {
            out << "closed forms: undefined (" << d.flags().label() << ")\n";
        }
        out << "curve residual: " << to_string(curve_residual(e.e11, e.e01, e.e10)) << '\n';
        print_residuals(out, "e-form residuals", eform_residuals(e, Rational(1)));
        print_cubic(out, "x-cubic", 'x', edge_cubic(e), options.budget);
        print_cubic(out, "d-cubic", 'd', diagonal_cubic(e), options.budget);
    }

    const SearchRecord rec = evaluate_pair(p, options);
    if (rec.x_roots && rec.d_roots && rec.x_roots->size() == 3 && rec.d_roots->size() == 3 &&
        rec.outcome != Outcome::NonpositiveRoots) {
        const EVector e = evaluate_param_map(p);
        const std::span<const Rational, 3> xs(rec.x_roots->data(), 3);
        const std::span<const Rational, 3> ds(rec.d_roots->data(), 3);
        const PairingResult pr = find_pairing(xs, ds, e);
        out << "pairing: "
            << (pr.satisfied ? "satisfied by permutation " + std::to_string(pr.permutation)
                             : std::string("no assignment satisfies the auxiliary equations"))
            << '\n';
    }

    out << "outcome: " << to_string(rec.outcome);
    if (rec.outcome == Outcome::Degenerate) out << '(' << to_string(rec.degeneracy.primary()) << ')';
    out << '\n';
    if (rec.outcome == Outcome::PerfectCuboid) {
        out << "FINDING: candidate passed exact verification; audit with verify-tuple\n";
    }
    out << "record: " << format_record_line(rec) << '\n';
    return rec.outcome == Outcome::Unresolved ? kUnresolved : kOk;
}

int cmd_verify_tuple(const std::vector<std::string>& values, std::ostream& out, std::ostream& err) {
    if (values.size() != 7) {
        err << "error: verify-tuple takes x1 x2 x3 d1 d2 d3 L\n";
        return kUsage;
    }
    CuboidCandidate t;
    try {
        for (int i = 0; i < 3; ++i) {
            t.x[i] = parse_rational(values[i]);
            t.d[i] = parse_rational(values[3 + i]);
        }
        t.L = parse_rational(values[6]);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    out << "tuple: x = (" << to_string(t.x[0]) << ", " << to_string(t.x[1]) << ", "
        << to_string(t.x[2]) << "), d = (" << to_string(t.d[0]) << ", " << to_string(t.d[1])
        << ", " << to_string(t.d[2]) << "), L = " << to_string(t.L) << '\n';

    const auto cub = cuboid_residuals(t);
    print_residuals(out, "cuboid residuals", cub);
    print_residuals(out, "factor residuals", factor_residuals(t));
    const EVector e = elementary_values(t);
    out << "evector:\n";
    print_evector(out, e);
    print_residuals(out, "e-form residuals", eform_residuals(e, t.L));

    const bool nonpositive =
        t.L <= 0 || std::any_of(t.x.begin(), t.x.end(), [](const Rational& r) { return r <= 0; }) ||
        std::any_of(t.d.begin(), t.d.end(), [](const Rational& r) { return r <= 0; });
    if (nonpositive) out << "warning: degenerate tuple (some component is not positive)\n";

    const bool solves = all_zero(cub);
    out << "verdict: " << (solves ? "solves the cuboid equations" : "not a cuboid solution") << '\n';
    return solves ? kOk : kCheckFailed;
}

int cmd_nogo_report(int height, std::ostream& out) {
    const NoGoReport report = check_one_parameter_cases(height);
    out << "one-parameter families, c = p/q with |p|, q <= " << height << '\n'
        << "  samples: " << report.samples << '\n'
        << "  checks:  " << report.checks << '\n'
        << "  skipped: " << report.skipped << '\n';
    for (const NoGoFailure& f : report.failures) {
        out << "  FAIL " << to_string(f.family) << " at c = " << to_string(f.c) << ": " << f.reason
            << '\n';
    }
    out << (report.passed() ? "PASS" : "FAIL") << '\n';
    return report.passed() ? kOk : kCheckFailed;
}

namespace {

struct SweepArgs {
    int height = 0;
    unsigned workers = 0;
    std::string output;
    std::string checkpoint;
    bool resume = false;
    bool all_records = false;
    std::string shard = "0/1";
    std::string b_sign = "any";
    std::string c_sign = "any";
    std::uint64_t checkpoint_every = 100'000;
    std::uint64_t max_trials = DivisorBudget{}.max_trials;
    std::optional<std::uint64_t> stop_after;
};

int cmd_sweep(const SweepArgs& a, std::ostream& out, std::ostream& err,
              const std::atomic<bool>* stop_flag) {
    SweepPlan plan;
    try {
        plan.height = a.height;
        plan.b_sign = sign_filter_from_string(a.b_sign);
        plan.c_sign = sign_filter_from_string(a.c_sign);
        const auto slash = a.shard.find('/');
        if (slash == std::string::npos) throw std::invalid_argument("shard must be INDEX/COUNT");
        plan.shard_index = static_cast<std::uint32_t>(std::stoul(a.shard.substr(0, slash)));
        plan.shard_count = static_cast<std::uint32_t>(std::stoul(a.shard.substr(slash + 1)));
        plan.full_records = a.all_records;
        plan.budget.max_trials = a.max_trials;
        plan.validate();
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    SweepOptions options;
    options.workers = a.workers != 0 ? a.workers : std::max(1u, std::thread::hardware_concurrency());
    options.checkpoint_path = a.checkpoint.empty() ? a.output + ".ckpt" : a.checkpoint;
    options.checkpoint_every = std::max<std::uint64_t>(1, a.checkpoint_every);
    options.stop_after = a.stop_after;
    options.stop_flag = stop_flag;

    try {
        std::optional<std::uint64_t> offset;
        if (a.resume && std::filesystem::exists(*options.checkpoint_path)) {
            Checkpoint cp = read_checkpoint(*options.checkpoint_path);
            if (cp.plan_digest != plan.digest()) {
                err << "error: checkpoint " << options.checkpoint_path->string()
                    << " was written for a different plan (" << cp.plan_text << ")\n";
                return kUsage;
            }
            offset = cp.record_bytes;
            options.resume_from = std::move(cp);
            out << "resuming at index " << options.resume_from->next_index << '\n';
        }
        FileRecordSink sink(a.output, offset);
        const SweepSummary s = run_sweep(plan, options, sink);

        out << "plan: " << plan.describe() << '\n'
            << "digest: " << plan.digest() << '\n'
            << "workers: " << options.workers << '\n';
        for (int i = 0; i < kOutcomeCount; ++i) {
            out << "  " << std::left << std::setw(18) << to_string(static_cast<Outcome>(i))
                << s.counts[i] << '\n';
        }
        out << "total pairs: " << s.total() << " of " << s.shard_total << '\n'
            << "evaluated this run: " << s.evaluated_this_run << '\n'
            << "wall seconds: " << std::fixed << std::setprecision(2) << s.wall_seconds << '\n'
            << "status: " << (s.finished() ? "complete" : "interrupted (resume with --resume)") << '\n';
        const auto hits = s.counts[static_cast<int>(Outcome::PerfectCuboid)];
        if (hits > 0) {
            out << "FINDING: " << hits << " PERFECT_CUBOID record(s); audit each with verify-tuple\n";
        }
    } catch (const SweepIoError& e) {
        err << "I/O error: " << e.what() << '\n';
        return kIoError;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "I/O error: " << e.what() << '\n';
        return kIoError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::atomic<bool>* stop_flag) {
    CLI::App app{"Exact search for perfect cuboids through the two-parameter E-vector family"};
    app.require_subcommand(1);

    std::string eval_b, eval_c;
    std::uint64_t eval_trials = DivisorBudget{}.max_trials;
    auto* eval = app.add_subcommand("eval", "Trace the pipeline for one pair (b, c)");
    eval->add_option("b", eval_b, "rational p/q or integer")->required();
    eval->add_option("c", eval_c, "rational p/q or integer")->required();
    eval->add_option("--max-trials", eval_trials, "trial-division budget");

    std::vector<std::string> tuple;
    auto* verify = app.add_subcommand("verify-tuple", "Check x1 x2 x3 d1 d2 d3 L against every equation system");
    verify->add_option("values", tuple, "x1 x2 x3 d1 d2 d3 L")->required()->expected(7);

    int nogo_height = 20;
    auto* nogo = app.add_subcommand("nogo-report", "Check the one-parameter families on a rational sample");
    nogo->add_option("--height", nogo_height, "sample c = p/q with |p|, q <= height")
        ->check(CLI::PositiveNumber);

    SweepArgs sa;
    auto* sweep = app.add_subcommand("sweep", "Sweep all pairs of height <= H");
    sweep->add_option("--height,-H", sa.height, "height bound H")->required()->check(CLI::PositiveNumber);
    sweep->add_option("--workers,-j", sa.workers, "worker threads (default: hardware concurrency)");
    sweep->add_option("--output,-o", sa.output, "record file (JSON lines)")->required();
    sweep->add_option("--checkpoint", sa.checkpoint, "checkpoint file (default: OUTPUT.ckpt)");
    sweep->add_flag("--resume", sa.resume, "continue from the checkpoint if present");
    sweep->add_flag("--all-records", sa.all_records, "also persist DEGENERATE and CUBIC_*_FAIL records");
    sweep->add_option("--shard", sa.shard, "INDEX/COUNT");
    sweep->add_option("--b-sign", sa.b_sign, "any|positive|negative");
    sweep->add_option("--c-sign", sa.c_sign, "any|positive|negative");
    sweep->add_option("--checkpoint-every", sa.checkpoint_every, "pairs between checkpoints");
    sweep->add_option("--max-trials", sa.max_trials, "trial-division budget per constant term");
    sweep->add_option("--stop-after", sa.stop_after, "evaluate at most N pairs, then checkpoint and stop");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << app.help();
        return kUsage;
    }

    if (*eval) return cmd_eval(eval_b, eval_c, eval_trials, out, err);
    if (*verify) return cmd_verify_tuple(tuple, out, err);
    if (*nogo) return cmd_nogo_report(nogo_height, out);
    return cmd_sweep(sa, out, err, stop_flag);
}

}  // namespace cuboid::cli
