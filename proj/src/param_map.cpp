#include "cuboid/param_map.hpp"

#include <array>

namespace cuboid {

const char* to_string(Degeneracy d) {
    switch (d) {
        case Degeneracy::D1: return "D1";
        case Degeneracy::D2: return "D2";
        case Degeneracy::D3: return "D3";
        case Degeneracy::D4: return "D4";
        case Degeneracy::EAxis: return "E-AXIS";
    }
    return "?";
}

Degeneracy DegeneracySet::primary() const {
    for (Degeneracy d : {Degeneracy::D2, Degeneracy::D3, Degeneracy::D1, Degeneracy::D4,
                         Degeneracy::EAxis}) {
        if (contains(d)) return d;
    }
    throw std::logic_error("primary() on an empty degeneracy set");
}

std::vector<Degeneracy> DegeneracySet::members() const {
    std::vector<Degeneracy> out;
    for (Degeneracy d : {Degeneracy::D1, Degeneracy::D2, Degeneracy::D3, Degeneracy::D4,
                         Degeneracy::EAxis}) {
        if (contains(d)) out.push_back(d);
    }
    return out;
}

std::string DegeneracySet::label() const {
    std::string out;
    for (Degeneracy d : members()) {
        if (!out.empty()) out += ',';
        out += to_string(d);
    }
    return out;
}

DegenerateParameter::DegenerateParameter(DegeneracySet flags)
    : std::domain_error(std::string("degenerate parameter: ") + to_string(flags.primary())),
      flags_(flags) {}

namespace {

// Powers b^0..b^6 and c^0..c^8, enough for every closed form.
struct Powers {
    std::array<Rational, 7> b;
    std::array<Rational, 9> c;

    explicit Powers(const ParamPair& p) {
        b[0] = 1;
        c[0] = 1;
        for (std::size_t i = 1; i < b.size(); ++i) b[i] = b[i - 1] * p.b;
        for (std::size_t i = 1; i < c.size(); ++i) c[i] = c[i - 1] * p.c;
    }

    // coef * b^i * c^j
    Rational operator()(long coef, int i, int j) const { return coef * b[i] * c[j]; }
};

struct Denominators {
    Rational d1, d2, d3, d4;
};

Denominators denominators(const ParamPair& p) {
    const Rational& b = p.b;
    const Rational& c = p.c;
    const Rational b2 = b * b;
    const Rational c2 = c * c;
    Denominators d;
    d.d1 = b2 * c2 + 2 * b2 - 3 * b2 * c + c - b * c2 + 2 * b;
    d.d2 = b * c - 1 - b;
    d.d3 = b * c - c - 2 * b;
    const Rational t = c2 - 3 * c + 2;  // (c-1)(c-2)
    d.d4 = b2 * t * t + c2;
    return d;
}

struct CoreValues {
    Rational e11, e01, e10;
};

CoreValues core_values(const ParamPair& p, const Rational& d1) {
    const Rational& b = p.b;
    const Rational& c = p.c;
    const Rational b2 = b * b;
    const Rational c2 = c * c;
    CoreValues v;
    v.e11 = -b * (c2 + 2 - 4 * c) / d1;
    v.e01 = -b * (c2 + 2 - 2 * c) / d1;
    v.e10 = -(b2 * c2 + 2 * b2 - 3 * b2 * c - c) / d1;
    return v;
}

}  // namespace

DegeneracySet degeneracy_flags(const ParamPair& p) {
    const Denominators den = denominators(p);
    DegeneracySet flags;
    if (den.d1 == 0) flags.insert(Degeneracy::D1);
    if (den.d2 == 0) flags.insert(Degeneracy::D2);
    if (den.d3 == 0) flags.insert(Degeneracy::D3);
    if (den.d4 == 0) flags.insert(Degeneracy::D4);
    if (den.d1 != 0) {
        const CoreValues v = core_values(p, den.d1);
        if (v.e01 == 0 && v.e10 == 0) flags.insert(Degeneracy::EAxis);
    }
    return flags;
}

Rational curve_residual(const Rational& e11, const Rational& e01, const Rational& e10) {
    const Rational e01sq = e01 * e01;
    const Rational t = e01sq + 1 - e10 * e10;
    return 4 * e11 * e11 + t * t - 8 * e01sq;
}

EVector complete_evector(const Rational& e11, const Rational& e01, const Rational& e10) {
    const Rational e01_2 = e01 * e01;
    const Rational e10_2 = e10 * e10;
    const Rational axis = e01_2 + e10_2;
    if (axis == 0) {
        DegeneracySet flags;
        flags.insert(Degeneracy::EAxis);
        throw DegenerateParameter(flags);
    }
    const Rational e01_3 = e01_2 * e01;
    const Rational e10_3 = e10_2 * e10;
    const Rational den = 8 * axis;

    EVector e;
    e.e11 = e11;
    e.e01 = e01;
    e.e10 = e10;
    e.e20 = e10_2 / 2 - Rational(1, 2);
    e.e02 = e01_2 / 2 - 1;
    e.e21 = (2 * e10_3 * e11 + 2 * e01_2 * e10 * e11 - e01 * e10_2 * e10_2 + e01_3 * e01_2 +
             6 * e10 * e11 - 2 * e01 * e10_2 - 8 * e01_3 + 3 * e01) /
            den;
    // Overall sign fixed against the expanded E12 form and the one-parameter
    // cases; the other sign violates four of the eight E-form equations.
    e.e12 = (e10_3 * e10_2 + 2 * e01_3 * e11 + 2 * e01 * e10_2 * e11 - e01_2 * e01_2 * e10 -
             6 * e10_3 + 6 * e01 * e11 - 3 * e10) /
            den;
    e.e30 = -e.e12 / 3 - e10 * e01_2 / 6 - e10 / 2 + e10_3 / 6 + e01 * e11 / 3;
    e.e03 = -e.e21 / 3 - e01 * e10_2 / 6 - Rational(5, 6) * e01 + e01_3 / 6 + e10 * e11 / 3;
    return e;
}

EVector evaluate_param_map(const ParamPair& p) {
    const Denominators den = denominators(p);
    if (den.d1 == 0) throw DegenerateParameter(degeneracy_flags(p));
    const CoreValues v = core_values(p, den.d1);
    return complete_evector(v.e11, v.e01, v.e10);
}

EVector evaluate_closed_forms(const ParamPair& p) {
    const Denominators den = denominators(p);
    if (den.d1 == 0 || den.d2 == 0 || den.d3 == 0 || den.d4 == 0) {
        throw DegenerateParameter(degeneracy_flags(p));
    }
    const Powers m(p);
    const Rational& b = p.b;
    const Rational& c = p.c;
    const Rational sq = den.d2 * den.d2 * den.d3 * den.d3;
    const Rational sq4 = sq * den.d4;

    const CoreValues v = core_values(p, den.d1);
    EVector e;
    e.e11 = v.e11;
    e.e01 = v.e01;
    e.e10 = v.e10;

    e.e20 = b / 2 * (m(1, 1, 2) - 2 * c - 2 * b) * (m(2, 1, 2) - m(1, 0, 2) - m(6, 1, 1) + 2 + 4 * b) /
            sq;

    e.e02 = (m(28, 2, 2) - m(16, 2, 1) - m(2, 0, 2) - m(4, 2, 0) - m(1, 2, 4) + m(4, 3, 4) -
             m(12, 3, 3) + m(4, 1, 3) + m(24, 3, 1) - m(8, 1, 1) - m(2, 4, 4) + m(12, 4, 3) -
             m(26, 4, 2) - m(8, 2, 3) + m(24, 4, 1) - m(16, 3, 0) - m(8, 4, 0)) /
            (2 * sq);

    e.e21 = b / 2 *
            (m(5, 1, 6) - m(2, 2, 6) + m(52, 2, 5) - m(16, 1, 5) - m(2, 2, 7) + m(2, 4, 8) +
             m(142, 4, 6) - m(26, 4, 7) - m(426, 4, 5) - m(61, 3, 6) + m(100, 3, 5) + m(14, 3, 7) -
             m(1, 3, 8) - m(20, 1, 2) - m(8, 2, 2) - m(16, 2, 1) - m(128, 2, 4) - m(200, 3, 3) +
             m(244, 3, 2) + m(32, 1, 3) - m(112, 3, 1) + m(768, 4, 4) - m(852, 4, 3) +
             m(568, 4, 2) + m(104, 2, 3) - m(208, 4, 1) + m(8, 0, 4) - m(4, 0, 3) + m(16, 3, 0) +
             m(32, 4, 0) - m(2, 0, 5)) /
            sq4;

    e.e12 = (m(16, 6, 0) + m(32, 5, 0) - m(6, 2, 5) + m(2, 1, 5) - m(62, 5, 6) + m(62, 6, 6) -
             m(180, 6, 5) + m(18, 5, 7) - m(12, 6, 7) - m(2, 5, 8) + m(1, 6, 8) + m(248, 5, 2) +
             m(248, 6, 2) - m(96, 6, 1) + m(321, 6, 4) - m(180, 5, 3) - m(144, 5, 1) -
             m(360, 6, 3) + m(1, 4, 8) + m(8, 4, 6) - m(6, 4, 7) + m(18, 4, 5) + m(7, 3, 6) +
             m(90, 5, 5) - m(14, 3, 5) - m(1, 3, 7) + m(17, 2, 4) + m(28, 3, 3) - m(28, 3, 2) -
             m(4, 1, 3) + m(8, 3, 1) - m(57, 4, 4) + m(36, 4, 3) + m(32, 4, 2) - m(12, 2, 3) -
             m(48, 4, 1) - m(1, 0, 4) + m(16, 4, 0)) /
            sq4;

    // The printed expansion opens two parentheses before D4^-1 and closes one;
    // read as a single factor it matches the composition path exactly.
    e.e03 = b / 2 *
            (m(1, 2, 4) - m(5, 2, 3) + m(10, 2, 2) - m(10, 2, 1) + m(4, 2, 0) + m(2, 1, 1) +
             m(2, 0, 2) - m(1, 1, 3)) *
            (m(2, 2, 4) - m(12, 2, 3) + m(26, 2, 2) - m(24, 2, 1) + m(8, 2, 0) - m(1, 1, 4) +
             m(3, 1, 3) - m(6, 1, 1) + m(4, 1, 0) + m(1, 0, 3) - m(2, 0, 2) + m(2, 0, 1)) /
            sq4;

    e.e30 = c * m(1, 2, 0) * (1 - c) * (c - 2) * (m(1, 1, 2) - m(4, 1, 1) + 2 + 4 * b) *
            (m(2, 1, 2) - m(1, 0, 2) - m(4, 1, 1) + 2 * b) / sq4;
    return e;
}

}  // namespace cuboid
