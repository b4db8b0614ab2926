#pragma once

#include "cuboid/rational.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace cuboid {

/// t^3 + a2 t^2 + a1 t + a0
struct MonicCubic {
    Rational a2, a1, a0;

    Rational operator()(const Rational& t) const { return ((t + a2) * t + a1) * t + a0; }

    friend bool operator==(const MonicCubic&, const MonicCubic&) = default;
};

enum class RootStatus : std::uint8_t {
    AllRationalPositive,
    AllRationalNonpositive,  // three rational roots, at least one <= 0
    PartialRational,
    NoRational,
};

const char* to_string(RootStatus s);

struct RootClassification {
    RootStatus status = RootStatus::NoRational;
    std::vector<Rational> roots;  // ascending, with multiplicity

    bool all_rational() const {
        return status == RootStatus::AllRationalPositive ||
               status == RootStatus::AllRationalNonpositive;
    }
};

/// Raised when divisor enumeration would exceed the trial-division budget.
class DivisorOverflow : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct DivisorBudget {
    std::uint64_t max_trials = 1'000'000;
    std::uint64_t max_divisors = 1'000'000;
};

/// All positive divisors of n (n >= 1) in increasing order.
std::vector<Integer> divisors_of(const Integer& n, const DivisorBudget& budget = {});

/// Exact rational roots via the rational root theorem on the scaled integer
/// cubic u^3 + m a2 u^2 + m^2 a1 u + m^3 a0, t = u / m, m = lcm of the
/// coefficient denominators. Throws DivisorOverflow.
RootClassification rational_roots(const MonicCubic& q, const DivisorBudget& budget = {});

/// Discriminant of q (for three real roots r_i it is prod_{i<j} (r_i - r_j)^2).
Rational discriminant(const MonicCubic& q);

/// Necessary condition for three rational roots: the discriminant is the
/// square of a rational. Cheap and exact; a false answer is final.
bool may_split_over_rationals(const MonicCubic& q);

}  // namespace cuboid
