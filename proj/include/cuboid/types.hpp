#pragma once

#include "cuboid/rational.hpp"

#include <array>

namespace cuboid {

/// Rational parameters (b, c) of the two-parameter solution family.
struct ParamPair {
    Rational b;
    Rational c;

    friend bool operator==(const ParamPair&, const ParamPair&) = default;
};

/// Values of the nine elementary multisymmetric polynomials. Field names
/// follow the [i,j] bidegree: i in the edges x, j in the face diagonals d.
struct EVector {
    Rational e10, e20, e30;
    Rational e01, e02, e03;
    Rational e21, e11, e12;

    friend bool operator==(const EVector&, const EVector&) = default;
};

inline constexpr std::array<const char*, 9> kEVectorNames = {
    "e10", "e20", "e30", "e01", "e02", "e03", "e21", "e11", "e12"};

/// Component view in kEVectorNames order.
inline std::array<const Rational*, 9> components(const EVector& e) {
    return {&e.e10, &e.e20, &e.e30, &e.e01, &e.e02, &e.e03, &e.e21, &e.e11, &e.e12};
}

/// Edges x, face diagonals d (d[i] opposite edge x[i]) and space diagonal L.
struct CuboidCandidate {
    std::array<Rational, 3> x;
    std::array<Rational, 3> d;
    Rational L;

    friend bool operator==(const CuboidCandidate&, const CuboidCandidate&) = default;
};

}  // namespace cuboid
