#include "cuboid/rational.hpp"

#include <cctype>

namespace cuboid {

namespace {

bool is_integer_literal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s.front() == '-' || s.front() == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

Integer parse_integer(std::string_view s) {
    // mpz_set_str does not accept a leading '+'.
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    if (!is_integer_literal(num)) {
        throw ParseError("not a rational number: '" + std::string(text) + "'");
    }
    Rational r;
    if (slash == std::string_view::npos) {
        r = Rational(parse_integer(num));
        return r;
    }
    const std::string_view den = text.substr(slash + 1);
    if (!is_integer_literal(den)) {
        throw ParseError("not a rational number: '" + std::string(text) + "'");
    }
    Integer d = parse_integer(den);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    r = Rational(parse_integer(num), d);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

bool is_canonical(const Rational& r) {
    if (r.get_den() <= 0) return false;
    Integer g;
    mpz_gcd(g.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return g == 1;
}

}  // namespace cuboid
