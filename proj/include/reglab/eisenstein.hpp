#pragma once

#include "reglab/series.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace reglab {

// Legendre symbol mod 3: +1 for k = 1 (3), -1 for k = 2 (3), 0 for 3 | k
inline int chi3(long k) {
    long r = k % 3;
    if (r < 0) r += 3;
    return r == 0 ? 0 : (r == 1 ? 1 : -1);
}

struct QExpansion {
    Series series;
    std::string label;
};

// E_3a(z) = 1 - 9 sum_{n>=1} (sum_{k|n} chi3(k) k^2) q^n
inline QExpansion eisenstein_e3a(int N) {
    if (N < 1) throw std::invalid_argument("eisenstein_e3a: N >= 1");
    std::vector<Rational> c(static_cast<size_t>(N) + 1, Rational(0));
    c[0] = 1;
    for (long n = 1; n <= N; ++n) {
        Int s = 0;
        for (long k = 1; k <= n; ++k)
            if (n % k == 0) s += Int(chi3(k)) * k * k;
        c[static_cast<size_t>(n)] = Rational(-9 * s);
    }
    return {Series("q", 0, N, std::move(c)), "E3a"};
}

// E_3b(z) = sum_{n>=1} (sum_{k|n} chi3(n/k) k^2) q^n
inline QExpansion eisenstein_e3b(int N) {
    if (N < 1) throw std::invalid_argument("eisenstein_e3b: N >= 1");
    std::vector<Rational> c(static_cast<size_t>(N), Rational(0));
    for (long n = 1; n <= N; ++n) {
        Int s = 0;
        for (long k = 1; k <= n; ++k)
            if (n % k == 0) s += Int(chi3(n / k)) * k * k;
        c[static_cast<size_t>(n - 1)] = Rational(s);
    }
    return {Series("q", 1, N, std::move(c)), "E3b"};
}

// Coefficient families of the period series:
//   E3b (E3a/(E3a+27E3b))^{j/l}        = sum_{n>=1} a_n(j) q^n
//   E3a (E3b/(q(E3a+27E3b)))^{j/l}     = sum_{n>=0} b_n(j) q^n
struct CoefficientFamily {
    int j = 0;
    int l = 0;
    int order = 0;
    std::vector<Rational> a;  // a[n] = a_n(j), 1 <= n <= order (a[0] unused)
    std::vector<Rational> b;  // b[n] = b_n(j), 0 <= n <= order
};

namespace detail {
// internal worker admitting j = 0 (used by tests probing the j/l -> 0 limit)
inline CoefficientFamily coefficient_family_any(int j, int l, int N) {
    if (l < 1 || N < 3) throw std::invalid_argument("coefficient_family: need l >= 1, N >= 3");
    const Rational alpha = make_rational(j, l);
    // the fractional powers lose j/l-independent accuracy: build inputs a bit long
    const int M = N + 2;
    Series e3a = eisenstein_e3a(M).series;
    Series e3b = eisenstein_e3b(M).series;
    Series den = (e3a + Rational(27) * e3b).inverse();
    Series u = e3a * den;                 // constant term 1
    Series v = e3b.shifted(-1) * den;     // constant term 1
    Series a_ser = e3b * u.pow_fractional(alpha);
    Series b_ser = e3a * v.pow_fractional(alpha);
    CoefficientFamily fam;
    fam.j = j;
    fam.l = l;
    fam.order = N;
    fam.a.assign(static_cast<size_t>(N) + 1, Rational(0));
    fam.b.assign(static_cast<size_t>(N) + 1, Rational(0));
    for (int n = 1; n <= N; ++n) fam.a[static_cast<size_t>(n)] = a_ser.coeff(n);
    for (int n = 0; n <= N; ++n) fam.b[static_cast<size_t>(n)] = b_ser.coeff(n);
    if (fam.a[1] != 1 || fam.b[0] != 1)
        throw std::logic_error("coefficient_family: leading-term invariant violated");
    return fam;
}
}  // namespace detail

inline CoefficientFamily coefficient_family(int j, int l, int N) {
    if (j < 1 || j > l - 1)
        throw std::invalid_argument("coefficient_family: need 1 <= j <= l-1");
    return detail::coefficient_family_any(j, l, N);
}

inline std::vector<Rational> a_series(int j, int l, int N) {
    return coefficient_family(j, l, N).a;
}

inline std::vector<Rational> b_series(int j, int l, int N) {
    if (N < 2) throw std::invalid_argument("b_series: N >= 2");
    return coefficient_family(j, l, std::max(N, 3)).b;
}

}  // namespace reglab
