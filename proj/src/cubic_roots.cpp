#include "cuboid/cubic_roots.hpp"

#include <algorithm>
#include <utility>

namespace cuboid {

const char* to_string(RootStatus s) {
    switch (s) {
        case RootStatus::AllRationalPositive: return "ALL_RATIONAL_POSITIVE";
        case RootStatus::AllRationalNonpositive: return "ALL_RATIONAL_NONPOSITIVE";
        case RootStatus::PartialRational: return "PARTIAL_RATIONAL";
        case RootStatus::NoRational: return "NO_RATIONAL";
    }
    return "?";
}

namespace {

struct PrimePower {
    Integer prime;
    unsigned exponent;
};

std::vector<PrimePower> factorize(Integer n, const DivisorBudget& budget) {
    std::vector<PrimePower> factors;
    std::uint64_t trials = 0;
    auto charge = [&] {
        if (++trials > budget.max_trials) {
            throw DivisorOverflow("trial division budget exceeded factoring " + n.get_str());
        }
    };
    auto strip = [&](const Integer& p) {
        unsigned k = 0;
        while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
            mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
            ++k;
        }
        if (k > 0) factors.push_back({p, k});
        return k > 0;
    };
    // A prime cofactor ends the search early. 40 rounds after GMP's BPSW
    // pass; no composite is known to survive BPSW alone.
    auto finish_if_prime = [&] {
        if (n > 1 && mpz_probab_prime_p(n.get_mpz_t(), 40) > 0) {
            factors.push_back({n, 1});
            n = 1;
        }
    };

    charge();
    strip(Integer(2));
    finish_if_prime();
    for (unsigned long p = 3; n > 1; p += 2) {
        if (Integer(p) * p > n) {
            factors.push_back({n, 1});
            break;
        }
        charge();
        if (strip(Integer(p))) finish_if_prime();
    }
    return factors;
}

}  // namespace

std::vector<Integer> divisors_of(const Integer& n, const DivisorBudget& budget) {
    if (n < 1) throw std::invalid_argument("divisors_of requires n >= 1");
    std::vector<Integer> divs{Integer(1)};
    for (const PrimePower& f : factorize(n, budget)) {
        const std::size_t base = divs.size();
        if (base * (f.exponent + 1) > budget.max_divisors) {
            throw DivisorOverflow("divisor count budget exceeded for " + n.get_str());
        }
        Integer pk = 1;
        for (unsigned k = 1; k <= f.exponent; ++k) {
            pk *= f.prime;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

Rational discriminant(const MonicCubic& q) {
    const Rational& a = q.a2;
    const Rational& b = q.a1;
    const Rational& c = q.a0;
    return 18 * a * b * c - 4 * a * a * a * c + a * a * b * b - 4 * b * b * b - 27 * c * c;
}

bool may_split_over_rationals(const MonicCubic& q) {
    const Rational disc = discriminant(q);
    if (disc < 0) return false;
    return mpz_perfect_square_p(disc.get_num_mpz_t()) != 0 &&
           mpz_perfect_square_p(disc.get_den_mpz_t()) != 0;
}

RootClassification rational_roots(const MonicCubic& q, const DivisorBudget& budget) {
    Integer m;
    mpz_lcm(m.get_mpz_t(), q.a2.get_den_mpz_t(), q.a1.get_den_mpz_t());
    mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), q.a0.get_den_mpz_t());

    // u^3 + A2 u^2 + A1 u + A0 with t = u / m.
    const Integer A2 = Integer(q.a2.get_num() * (m / q.a2.get_den()));
    const Integer A1 = Integer(q.a1.get_num() * (m * m / q.a1.get_den()));
    const Integer A0 = Integer(q.a0.get_num() * (m * m * m / q.a0.get_den()));

    auto value = [&](const Integer& u) -> Integer { return Integer(((u + A2) * u + A1) * u + A0); };

    std::vector<Integer> u_roots;
    std::pair<Integer, Integer> quadratic;  // u^2 + B u + C after deflation
    bool deflated = false;

    auto deflate = [&](const Integer& r) {
        Integer B = A2 + r;
        Integer C = A1 + r * B;
        quadratic = {std::move(B), std::move(C)};
        u_roots.push_back(r);
        deflated = true;
    };

    if (A0 == 0) {
        deflate(Integer(0));
    } else {
        const Integer abs_a0 = abs(A0);
        for (const Integer& d : divisors_of(abs_a0, budget)) {
            if (value(d) == 0) {
                deflate(d);
                break;
            }
            const Integer neg = -d;
            if (value(neg) == 0) {
                deflate(neg);
                break;
            }
        }
    }

    if (deflated) {
        const auto& [B, C] = quadratic;
        const Integer disc = B * B - 4 * C;
        if (disc >= 0 && mpz_perfect_square_p(disc.get_mpz_t())) {
            Integer s;
            mpz_sqrt(s.get_mpz_t(), disc.get_mpz_t());
            // B^2 - 4C = B^2 (mod 4), so s and B share parity.
            u_roots.push_back(Integer((-B - s) / 2));
            u_roots.push_back(Integer((-B + s) / 2));
        }
    }

    RootClassification out;
    for (const Integer& u : u_roots) {
        Rational t(u, m);
        t.canonicalize();
        out.roots.push_back(std::move(t));
    }
    std::sort(out.roots.begin(), out.roots.end());

    if (out.roots.size() == 3) {
        const bool positive =
            std::all_of(out.roots.begin(), out.roots.end(), [](const Rational& r) { return r > 0; });
        out.status = positive ? RootStatus::AllRationalPositive : RootStatus::AllRationalNonpositive;
    } else if (out.roots.empty()) {
        out.status = RootStatus::NoRational;
    } else {
        out.status = RootStatus::PartialRational;
    }
    return out;
}

}  // namespace cuboid
