#pragma once

#include "cuboid/cubic_roots.hpp"
#include "cuboid/param_map.hpp"
#include "cuboid/types.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cuboid {

enum class Outcome : std::uint8_t {
    Degenerate,
    CubicXFail,
    CubicDFail,
    NonpositiveRoots,
    PairingFail,
    Unresolved,
    PerfectCuboid,
};

inline constexpr int kOutcomeCount = 7;

const char* to_string(Outcome o);
std::optional<Outcome> outcome_from_string(std::string_view s);

/// The six assignments of d-roots to the fixed x-root order, in
/// lexicographic order of the index triple; index 0 is the identity.
const std::array<std::array<int, 3>, 6>& d_permutations();

struct PairingResult {
    std::array<Rational, 3> x_roots;
    std::array<Rational, 3> d_roots;  // before permutation
    int permutation = 0;              // index into d_permutations()
    bool satisfied = false;
};

struct SearchRecord {
    ParamPair param;
    Outcome outcome = Outcome::Degenerate;
    DegeneracySet degeneracy;                 // set when outcome == Degenerate
    std::optional<std::vector<Rational>> x_roots;  // when the x-cubic was solved
    std::optional<std::vector<Rational>> d_roots;  // when the d-cubic was solved
    std::optional<int> permutation;           // when a pairing was satisfied
    std::optional<CuboidCandidate> candidate; // when outcome == PerfectCuboid
    std::string note;                         // free-form diagnostics

    friend bool operator==(const SearchRecord&, const SearchRecord&) = default;
};

struct PipelineOptions {
    DivisorBudget budget;
};

/// x^3 - E10 x^2 + E20 x - E30
MonicCubic edge_cubic(const EVector& e);
/// d^3 - E01 d^2 + E02 d - E03
MonicCubic diagonal_cubic(const EVector& e);

/// Tries all six d-root assignments against targets (E21, E11, E12).
/// x_roots are used in the given order.
PairingResult find_pairing(std::span<const Rational, 3> x_roots,
                           std::span<const Rational, 3> d_roots, const EVector& targets);

/// Full classification of one parameter pair. Classification order is
/// DEGENERATE, x-cubic, d-cubic, positivity, pairing, final verification.
SearchRecord evaluate_pair(const ParamPair& p, const PipelineOptions& options = {});

// --- one-parameter families ------------------------------------------------

enum class OneParamCase : std::uint8_t {
    EqualPlus,    // E11 = c, E01 = c, E10 = c - 1
    EqualMinus,   // E11 = c, E01 = c, E10 = -c - 1
    OppositePlus, // E11 = c, E01 = -c, E10 = c - 1
    OppositeMinus // E11 = c, E01 = -c, E10 = -c - 1
};

const char* to_string(OneParamCase k);

/// (E11, E01, E10) for the given family at parameter c.
std::array<Rational, 3> one_param_core(OneParamCase k, const Rational& c);

/// Closed-form E20, E02, E21, E12, E30, E03 for the two equal-sign families,
/// as functions of c; used to check the derived values symbol for symbol.
EVector one_param_expected(OneParamCase k, const Rational& c);

struct NoGoFailure {
    OneParamCase family;
    Rational c;
    std::string reason;
};

struct NoGoReport {
    std::size_t samples = 0;   // c values tried
    std::size_t checks = 0;    // (family, c) evaluations
    std::size_t skipped = 0;   // degenerate (family, c) combinations
    std::vector<NoGoFailure> failures;

    bool passed() const { return failures.empty(); }
};

/// For every c in the sample and every family: the core satisfies the
/// quartic curve; the derived vector satisfies all E-form equations; for
/// the equal-sign families E30 = 0 and all six derived values match the
/// closed forms; for the opposite-sign families E11 * E01 <= 0 with
/// equality exactly at c = 0.
NoGoReport check_one_parameter_cases(std::span<const Rational> c_values);

/// Default sample: every c = p/q with |p|, q <= height.
NoGoReport check_one_parameter_cases(int height = 20);

}  // namespace cuboid
