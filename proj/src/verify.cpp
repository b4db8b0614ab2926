#include "cuboid/verify.hpp"

#include "cuboid/multisym.hpp"
#include "cuboid/search.hpp"

#include <algorithm>

namespace cuboid {

const char* to_string(Outcome o) {
    switch (o) {
        case Outcome::Degenerate: return "DEGENERATE";
        case Outcome::CubicXFail: return "CUBIC_X_FAIL";
        case Outcome::CubicDFail: return "CUBIC_D_FAIL";
        case Outcome::NonpositiveRoots: return "NONPOSITIVE_ROOTS";
        case Outcome::PairingFail: return "PAIRING_FAIL";
        case Outcome::Unresolved: return "UNRESOLVED";
        case Outcome::PerfectCuboid: return "PERFECT_CUBOID";
    }
    return "?";
}

std::optional<Outcome> outcome_from_string(std::string_view s) {
    for (int i = 0; i < kOutcomeCount; ++i) {
        const auto o = static_cast<Outcome>(i);
        if (s == to_string(o)) return o;
    }
    return std::nullopt;
}

const std::array<std::array<int, 3>, 6>& d_permutations() {
    static const std::array<std::array<int, 3>, 6> perms = {{
        {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
    }};
    return perms;
}

MonicCubic edge_cubic(const EVector& e) { return {-e.e10, e.e20, -e.e30}; }

MonicCubic diagonal_cubic(const EVector& e) { return {-e.e01, e.e02, -e.e03}; }

namespace {

// Auxiliary equations for one assignment d_perm of diagonals to edges.
bool assignment_matches(std::span<const Rational, 3> x, const std::array<Rational, 3>& d,
                        const EVector& targets) {
    const auto& [d1, d2, d3] = d;
    if (x[0] * x[1] * d3 + x[1] * x[2] * d1 + x[2] * x[0] * d2 != targets.e21) return false;
    if (x[0] * (d2 + d3) + x[1] * (d1 + d3) + x[2] * (d1 + d2) != targets.e11) return false;
    return x[0] * d2 * d3 + x[1] * d3 * d1 + x[2] * d1 * d2 == targets.e12;
}

std::array<Rational, 3> apply(std::span<const Rational, 3> d, const std::array<int, 3>& perm) {
    return {d[perm[0]], d[perm[1]], d[perm[2]]};
}

}  // namespace

PairingResult find_pairing(std::span<const Rational, 3> x_roots,
                           std::span<const Rational, 3> d_roots, const EVector& targets) {
    PairingResult result;
    std::copy(x_roots.begin(), x_roots.end(), result.x_roots.begin());
    std::copy(d_roots.begin(), d_roots.end(), result.d_roots.begin());
    const auto& perms = d_permutations();
    for (std::size_t k = 0; k < perms.size(); ++k) {
        if (assignment_matches(x_roots, apply(d_roots, perms[k]), targets)) {
            result.permutation = static_cast<int>(k);
            result.satisfied = true;
            break;
        }
    }
    return result;
}

namespace {

// Rationality stage for one cubic. Returns nullopt when the cubic cannot
// have three rational roots; throws DivisorOverflow.
std::optional<RootClassification> solve_stage(const MonicCubic& q, const PipelineOptions& options) {
    if (!may_split_over_rationals(q)) return std::nullopt;
    RootClassification roots = rational_roots(q, options.budget);
    if (!roots.all_rational()) return std::nullopt;
    return roots;
}

bool has_repeats(const std::vector<Rational>& sorted_roots) {
    return std::adjacent_find(sorted_roots.begin(), sorted_roots.end()) != sorted_roots.end();
}

}  // namespace

SearchRecord evaluate_pair(const ParamPair& p, const PipelineOptions& options) {
    SearchRecord rec;
    rec.param = p;

    const DegeneracySet flags = degeneracy_flags(p);
    if (!flags.empty()) {
        rec.outcome = Outcome::Degenerate;
        rec.degeneracy = flags;
        return rec;
    }

    const EVector e = evaluate_param_map(p);

    std::optional<RootClassification> xs;
    std::optional<RootClassification> ds;
    try {
        xs = solve_stage(edge_cubic(e), options);
        if (!xs) {
            rec.outcome = Outcome::CubicXFail;
            return rec;
        }
        rec.x_roots = xs->roots;
        ds = solve_stage(diagonal_cubic(e), options);
        if (!ds) {
            rec.outcome = Outcome::CubicDFail;
            return rec;
        }
        rec.d_roots = ds->roots;
    } catch (const DivisorOverflow& err) {
        rec.outcome = Outcome::Unresolved;
        rec.note = err.what();
        return rec;
    }

    if (xs->status != RootStatus::AllRationalPositive ||
        ds->status != RootStatus::AllRationalPositive) {
        rec.outcome = Outcome::NonpositiveRoots;
        return rec;
    }

    const std::span<const Rational, 3> x_span(xs->roots.data(), 3);
    const std::span<const Rational, 3> d_span(ds->roots.data(), 3);

    // Every satisfied assignment goes through the exact cuboid check; the
    // first one that passes wins.
    bool mismatch = false;
    const auto& perms = d_permutations();
    for (std::size_t k = 0; k < perms.size(); ++k) {
        std::array<Rational, 3> d = apply(d_span, perms[k]);
        if (!assignment_matches(x_span, d, e)) continue;
        CuboidCandidate cand{{xs->roots[0], xs->roots[1], xs->roots[2]}, std::move(d), Rational(1)};
        const auto res = cuboid_residuals(cand);
        if (!std::all_of(res.begin(), res.end(), [](const Rational& r) { return r == 0; })) {
            mismatch = true;
            continue;
        }
        rec.outcome = Outcome::PerfectCuboid;
        rec.permutation = static_cast<int>(k);
        rec.candidate = std::move(cand);
        if (has_repeats(xs->roots) || has_repeats(ds->roots)) rec.note = "repeated_roots";
        return rec;
    }

    rec.outcome = Outcome::PairingFail;
    if (mismatch) rec.note = "verification_mismatch";
    return rec;
}

}  // namespace cuboid

namespace cuboid {

const char* to_string(OneParamCase k) {
    switch (k) {
        case OneParamCase::EqualPlus: return "E01=c,E10=c-1";
        case OneParamCase::EqualMinus: return "E01=c,E10=-c-1";
        case OneParamCase::OppositePlus: return "E01=-c,E10=c-1";
        case OneParamCase::OppositeMinus: return "E01=-c,E10=-c-1";
    }
    return "?";
}

std::array<Rational, 3> one_param_core(OneParamCase k, const Rational& c) {
    switch (k) {
        case OneParamCase::EqualPlus: return {c, c, c - 1};
        case OneParamCase::EqualMinus: return {c, c, -c - 1};
        case OneParamCase::OppositePlus: return {c, -c, c - 1};
        case OneParamCase::OppositeMinus: return {c, -c, -c - 1};
    }
    throw std::invalid_argument("unknown one-parameter family");
}

EVector one_param_expected(OneParamCase k, const Rational& c) {
    const Rational c2 = c * c;
    EVector e;
    const auto core = one_param_core(k, c);
    e.e11 = core[0];
    e.e01 = core[1];
    e.e10 = core[2];
    e.e02 = (c2 - 2) / 2;
    e.e12 = 1;
    e.e30 = 0;
    switch (k) {
        case OneParamCase::EqualPlus:
            e.e20 = (c2 - 2 * c) / 2;
            e.e21 = (c2 - 2 * c) / 2;
            e.e03 = (c2 - 2 * c) / 2;
            return e;
        case OneParamCase::EqualMinus:
            e.e20 = (c2 + 2 * c) / 2;
            e.e21 = -(c2 + 2 * c) / 2;
            e.e03 = -(c2 + 2 * c) / 2;
            return e;
        default:
            throw std::invalid_argument("no closed form for the opposite-sign families");
    }
}

NoGoReport check_one_parameter_cases(std::span<const Rational> c_values) {
    constexpr std::array<OneParamCase, 4> families = {
        OneParamCase::EqualPlus, OneParamCase::EqualMinus, OneParamCase::OppositePlus,
        OneParamCase::OppositeMinus};

    NoGoReport report;
    for (const Rational& c : c_values) {
        ++report.samples;
        for (OneParamCase k : families) {
            auto fail = [&](std::string reason) {
                report.failures.push_back({k, c, std::move(reason)});
            };
            const auto [e11, e01, e10] = one_param_core(k, c);
            if (curve_residual(e11, e01, e10) != 0) {
                fail("core values off the quartic curve");
                continue;
            }
            EVector e;
            try {
                e = complete_evector(e11, e01, e10);
            } catch (const DegenerateParameter&) {
                ++report.skipped;
                continue;
            }
            ++report.checks;

            const auto res = eform_residuals(e, Rational(1));
            for (std::size_t i = 0; i < res.size(); ++i) {
                if (res[i] != 0) fail("E-form residual " + std::to_string(i) + " = " + to_string(res[i]));
            }

            if (k == OneParamCase::EqualPlus || k == OneParamCase::EqualMinus) {
                if (e.e30 != 0) fail("e30 = " + to_string(e.e30) + ", expected 0");
                const EVector want = one_param_expected(k, c);
                const auto got_c = components(e);
                const auto want_c = components(want);
                for (std::size_t i = 0; i < got_c.size(); ++i) {
                    if (*got_c[i] != *want_c[i]) {
                        fail(std::string(kEVectorNames[i]) + " = " + to_string(*got_c[i]) +
                             ", closed form gives " + to_string(*want_c[i]));
                    }
                }
            } else {
                const Rational prod = e.e11 * e.e01;
                if (prod > 0) fail("e11 * e01 = " + to_string(prod) + " > 0");
                if ((prod == 0) != (c == 0)) fail("e11 * e01 vanishes away from c = 0");
            }
        }
    }
    return report;
}

NoGoReport check_one_parameter_cases(int height) {
    const std::vector<Rational> sample = enumerate_rationals(height);
    return check_one_parameter_cases(std::span<const Rational>(sample));
}

}  // namespace cuboid
