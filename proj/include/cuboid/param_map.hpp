#pragma once

// Two-parameter family of rational solutions of
//   (2 E11)^2 + (E01^2 + 1 - E10^2)^2 = 8 E01^2
// propagated to all nine elementary multisymmetric values at L = 1.

#include "cuboid/types.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cuboid {

/// Vanishing denominators of the parameter map.
///   D1 = b^2c^2 + 2b^2 - 3b^2c + c - bc^2 + 2b   (shared denominator of E11, E01, E10)
///   D2 = bc - 1 - b
///   D3 = bc - c - 2b
///   D4 = b^2c^4 - 6b^2c^3 + 13b^2c^2 - 12b^2c + 4b^2 + c^2
///   EAxis: E01^2 + E10^2 = 0 (only evaluated when D1 != 0)
/// Note D1 = D2 * D3, so D2 or D3 vanishing always drags D1 along.
enum class Degeneracy : std::uint8_t { D1, D2, D3, D4, EAxis };

const char* to_string(Degeneracy d);

class DegeneracySet {
public:
    void insert(Degeneracy d) { bits_ |= bit(d); }
    bool contains(Degeneracy d) const { return (bits_ & bit(d)) != 0; }
    bool empty() const { return bits_ == 0; }

    /// Most specific cause, in the order D2, D3, D1, D4, EAxis.
    Degeneracy primary() const;
    std::vector<Degeneracy> members() const;
    /// "D1,D2" style label in enum order; empty string for the empty set.
    std::string label() const;

    friend bool operator==(DegeneracySet, DegeneracySet) = default;

private:
    static std::uint8_t bit(Degeneracy d) { return std::uint8_t(1u << static_cast<unsigned>(d)); }
    std::uint8_t bits_ = 0;
};

class DegenerateParameter : public std::domain_error {
public:
    explicit DegenerateParameter(DegeneracySet flags);
    Degeneracy flag() const { return flags_.primary(); }
    DegeneracySet flags() const { return flags_; }

private:
    DegeneracySet flags_;
};

DegeneracySet degeneracy_flags(const ParamPair& p);

/// Generic composition path: E11, E01, E10 from the rational parametrization,
/// then the remaining six values from complete_evector. Authoritative.
/// Throws DegenerateParameter when D1 or EAxis vanishes.
EVector evaluate_param_map(const ParamPair& p);

/// Fully expanded (b, c) closed forms. Cross-check only.
/// Throws DegenerateParameter when any of D1..D4 vanishes.
EVector evaluate_closed_forms(const ParamPair& p);

/// Given (E11, E01, E10) on the quartic curve, derives E20, E02, E21, E12,
/// E30, E03 at L = 1. Throws DegenerateParameter(EAxis) when E01 = E10 = 0.
EVector complete_evector(const Rational& e11, const Rational& e01, const Rational& e10);

/// Left-hand side of (2 E11)^2 + (E01^2 + 1 - E10^2)^2 - 8 E01^2 at L = 1.
Rational curve_residual(const Rational& e11, const Rational& e01, const Rational& e10);

}  // namespace cuboid
