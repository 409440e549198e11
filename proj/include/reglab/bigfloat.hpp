#pragma once

#include "reglab/rational.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <string>

namespace reglab {

// Arbitrary-precision reals (MPFR).  Each value carries its own precision;
// fresh values are created at the current default, so computations set the
// default up front (with guard digits) through PrecisionGuard.
using BigReal = boost::multiprecision::mpfr_float;

class PrecisionGuard {
public:
    explicit PrecisionGuard(unsigned digits10) : saved_(BigReal::default_precision()) {
        BigReal::default_precision(digits10);
    }
    ~PrecisionGuard() { BigReal::default_precision(saved_); }
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

private:
    unsigned saved_;
};

inline BigReal big_pi() { return acos(BigReal(-1)); }

inline BigReal to_big(const Rational& r) {
    return BigReal(numerator(r)) / BigReal(denominator(r));
}

inline BigReal to_big(const Int& n) { return BigReal(n); }

// c = exp(-2 pi / sqrt(3)) = 0.026579933...
inline BigReal nome_c() { return exp(-2 * big_pi() / sqrt(BigReal(3))); }

// value rounded to `digits` significant decimal digits, fixed point
inline std::string big_str(const BigReal& x, unsigned digits) { return x.str(digits); }

struct BigComplex {
    BigReal re, im;

    BigComplex() : re(0), im(0) {}
    BigComplex(BigReal r, BigReal i) : re(std::move(r)), im(std::move(i)) {}
    explicit BigComplex(const BigReal& r) : re(r), im(0) {}

    friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b) {
        BigReal n = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    BigComplex operator-() const { return {-re, -im}; }
    friend BigReal abs(const BigComplex& z) { return sqrt(z.re * z.re + z.im * z.im); }
};

inline BigComplex unit_root_power(long num, long den) {  // exp(2 pi i num/den)
    BigReal theta = 2 * big_pi() * BigReal(num) / BigReal(den);
    return {cos(theta), sin(theta)};
}

}  // namespace reglab
