#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace reglab {

// Exact arithmetic substrate. GMP keeps rationals canonical: lowest terms,
// denominator > 0, zero is 0/1.
using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline Rational make_rational(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("rational: zero denominator");
    return Rational(num, den);
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(Int(num), Int(den));
}

// "p/q", or "p" when q = 1
inline std::string rational_str(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Int(s));
    return make_rational(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

inline Rational rational_pow(const Rational& r, long e) {
    if (e == 0) return Rational(1);
    if (r == 0 && e < 0) throw std::domain_error("rational_pow: 0^negative");
    Int n = numerator(r), d = denominator(r);
    unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
    Int np = pow(n, a), dp = pow(d, a);
    return e > 0 ? make_rational(np, dp) : make_rational(dp, np);
}

// exact square root when r is the square of a rational
inline std::optional<Rational> rational_sqrt(const Rational& r) {
    if (r < 0) return std::nullopt;
    Int sn = sqrt(numerator(r)), sd = sqrt(denominator(r));
    if (sn * sn != numerator(r) || sd * sd != denominator(r)) return std::nullopt;
    return make_rational(sn, sd);
}

inline bool is_rational_square(const Rational& r) { return rational_sqrt(r).has_value(); }

}  // namespace reglab
