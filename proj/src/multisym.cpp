#include "cuboid/multisym.hpp"

namespace cuboid {

EVector elementary_values(const CuboidCandidate& t) {
    const auto& [x1, x2, x3] = t.x;
    const auto& [d1, d2, d3] = t.d;
    EVector e;
    e.e10 = x1 + x2 + x3;
    e.e20 = x1 * x2 + x2 * x3 + x3 * x1;
    e.e30 = x1 * x2 * x3;
    e.e01 = d1 + d2 + d3;
    e.e02 = d1 * d2 + d2 * d3 + d3 * d1;
    e.e03 = d1 * d2 * d3;
    e.e21 = x1 * x2 * d3 + x2 * x3 * d1 + x3 * x1 * d2;
    e.e11 = x1 * d2 + d1 * x2 + x2 * d3 + d2 * x3 + x3 * d1 + d3 * x1;
    e.e12 = x1 * d2 * d3 + x2 * d3 * d1 + x3 * d1 * d2;
    return e;
}

namespace {

std::array<Rational, 3> face_residuals(const CuboidCandidate& t) {
    const auto& [x1, x2, x3] = t.x;
    const auto& [d1, d2, d3] = t.d;
    return {x2 * x2 + x3 * x3 - d1 * d1, x3 * x3 + x1 * x1 - d2 * d2, x1 * x1 + x2 * x2 - d3 * d3};
}

}  // namespace

std::array<Rational, 4> cuboid_residuals(const CuboidCandidate& t) {
    const auto& [x1, x2, x3] = t.x;
    const auto f = face_residuals(t);
    return {x1 * x1 + x2 * x2 + x3 * x3 - t.L * t.L, f[0], f[1], f[2]};
}

std::array<Rational, 8> factor_residuals(const CuboidCandidate& t) {
    const auto& x = t.x;
    const auto& d = t.d;
    const auto f = face_residuals(t);

    std::array<Rational, 8> r;
    r[0] = x[0] * x[0] + x[1] * x[1] + x[2] * x[2] - t.L * t.L;
    for (int i = 0; i < 3; ++i) {
        const Rational xx = x[i] * x[i];
        const Rational dd = d[i] * d[i];
        r[1] += f[i];
        r[2] += d[i] * f[i];
        r[3] += x[i] * f[i];
        r[4] += x[i] * d[i] * f[i];
        r[5] += xx * f[i];
        r[6] += dd * f[i];
        r[7] += xx * dd * f[i];
    }
    return r;
}

std::array<Rational, 9> eform_residuals(const EVector& e, const Rational& L) {
    const Rational& E10 = e.e10;
    const Rational& E20 = e.e20;
    const Rational& E30 = e.e30;
    const Rational& E01 = e.e01;
    const Rational& E02 = e.e02;
    const Rational& E03 = e.e03;
    const Rational& E21 = e.e21;
    const Rational& E11 = e.e11;
    const Rational& E12 = e.e12;

    const Rational L2 = L * L;
    const Rational E01_2 = E01 * E01;
    const Rational E01_3 = E01_2 * E01;
    const Rational E01_4 = E01_2 * E01_2;
    const Rational E10_2 = E10 * E10;
    const Rational E11_2 = E11 * E11;
    const Rational E20_2 = E20 * E20;
    const Rational E02_2 = E02 * E02;

    std::array<Rational, 9> r;
    r[0] = E10_2 - 2 * E20 - L2;
    r[1] = 2 * E02 - 4 * E20 - E01_2 + 2 * E10_2;
    r[2] = E10 * E11 - 3 * E03 - E21 + 3 * E01 * E02 - E20 * E01 - E01_3;
    r[3] = E01 * E11 - E12 - 3 * E30 + E10 * E02 + E20 * E10 - E01_2 * E10;
    r[4] = -E10 * E21 - E01 * E12 - E01 * E30 - E01_3 * E10 + E01_2 * E11 - E02 * E11 +
           E11 * E20 - E10 * E03 + 2 * E10 * E01 * E02;
    r[5] = 4 * E01 * E10 * E11 - 3 * E01_2 * E10_2 + 2 * E10_2 * E02 + 2 * E20 * E01_2 -
           2 * E10 * E12 - 2 * E02 * E20 - 2 * E01 * E21 - E11_2 - 12 * E10 * E30 + 6 * E20_2;
    r[6] = 4 * E01 * E10 * E11 - 4 * E10_2 * E02 - 4 * E20 * E01_2 - 2 * E10 * E12 +
           10 * E02 * E20 - 2 * E01 * E21 - E11_2 - 12 * E01 * E03 - 3 * E01_4 - 6 * E02_2 +
           12 * E01_2 * E02;

    Rational big;
    big += 9 * E01 * E03 * E20;
    big -= 7 * E01_2 * E02 * E20;
    big += 2 * E02 * E10 * E12;
    big -= 2 * E01_2 * E10 * E12;
    big += 3 * E03 * E10 * E11;
    big += 4 * E01_3 * E10 * E11;
    big -= 7 * E01 * E02 * E10 * E11;
    big -= 6 * E01 * E03 * E10_2;
    big += 8 * E01_2 * E02 * E10_2;
    big += 3 * E01 * E11 * E30;
    big -= 2 * E01 * E20 * E21;
    big += E10 * E12 * E20;
    big -= E02 * E10_2 * E20;
    big += E01 * E10 * E11 * E20;
    big += 9 * E02 * E10 * E30;
    big -= 2 * E02 * E20_2;
    big += 2 * E01_2 * E20_2;
    big -= E11_2 * E20;
    big -= 3 * E12 * E30;
    big += E02 * E11_2;
    big -= E01_2 * E11_2;
    big -= 2 * E02_2 * E10_2;
    big += 2 * E01_4 * E20;
    big += 2 * E02_2 * E20;
    big -= 3 * E03 * E21;
    big -= 2 * E01_3 * E21;
    big += 5 * E01 * E02 * E21;
    big -= 6 * E01_2 * E10 * E30;
    big -= 3 * E01_4 * E10_2;
    r[7] = big;

    // The last three forms as usually written carry a factor 3; dividing it
    // out makes each one the exact preimage of its factor polynomial.
    for (int i = 5; i <= 7; ++i) r[i] /= 3;

    const Rational t = E01_2 + L2 - E10_2;
    r[8] = 4 * E11_2 + t * t - 8 * E01_2 * L2;
    return r;
}

CuboidCandidate permuted(const CuboidCandidate& t, const std::array<int, 3>& perm) {
    CuboidCandidate out;
    for (int i = 0; i < 3; ++i) {
        out.x[i] = t.x[perm[i]];
        out.d[i] = t.d[perm[i]];
    }
    out.L = t.L;
    return out;
}

}  // namespace cuboid
