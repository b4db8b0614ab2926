#pragma once

// Direct evaluation of the elementary multisymmetric polynomials and of the
// cuboid equation systems on explicit tuples. Everything here is a fixed
// polynomial written out monomial by monomial.

#include "cuboid/types.hpp"

#include <array>

namespace cuboid {

/// The substitution map from tuples to elementary multisymmetric values.
EVector elementary_values(const CuboidCandidate& t);

/// x1^2+x2^2+x3^2-L^2, x2^2+x3^2-d1^2, x3^2+x1^2-d2^2, x1^2+x2^2-d3^2
std::array<Rational, 4> cuboid_residuals(const CuboidCandidate& t);

/// The eight S3-symmetrized factor equations, in order: the space-diagonal
/// equation, then sum_i w_i * f_i for weights w = 1, d, x, x d, x^2, d^2,
/// x^2 d^2, where f_i is the i-th face residual.
std::array<Rational, 8> factor_residuals(const CuboidCandidate& t);

/// The eight factor equations rewritten in the nine E-variables and L,
/// normalized so that component k equals factor_residuals()[k] on elementary
/// values, followed by the reduced quartic (2E11)^2 + (E01^2+L^2-E10^2)^2 - 8E01^2L^2.
std::array<Rational, 9> eform_residuals(const EVector& e, const Rational& L);

/// Applies a permutation of slot indices simultaneously to edges and
/// diagonals: result.x[i] = t.x[perm[i]], result.d[i] = t.d[perm[i]].
CuboidCandidate permuted(const CuboidCandidate& t, const std::array<int, 3>& perm);

}  // namespace cuboid
