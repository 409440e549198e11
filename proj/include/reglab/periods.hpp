#pragma once

#include "reglab/eisenstein.hpp"
#include "reglab/fibration.hpp"
#include "reglab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace reglab {

// arithmetic-geometric mean; complete elliptic integral K(m) = pi/(2 agm(1, sqrt(1-m)))
inline BigReal agm(BigReal a, BigReal b) {
    if (a <= 0 || b <= 0) throw std::domain_error("agm: arguments must be positive");
    const BigReal eps =
        ldexp(BigReal(1), -static_cast<long>(BigReal::default_precision() * 3.33) + 4);
    for (int it = 0; it < 200; ++it) {
        if (abs(a - b) <= eps * a) break;
        BigReal am = (a + b) / 2;
        b = sqrt(a * b);
        a = am;
    }
    return a;
}

// K as a function of the complementary parameter 1-m (no cancellation at m -> 1)
inline BigReal elliptic_K_complement(const BigReal& one_minus_m) {
    return big_pi() / (2 * agm(BigReal(1), sqrt(one_minus_m)));
}

struct EvalResult {
    BigReal value;
    BigReal err_estimate;
    bool warning = false;
};

namespace detail {

struct SeriesContext {
    BigReal c, logc, sqrt3, pi, x;  // x = j/l
};

inline SeriesContext make_series_context(int j, int l) {
    SeriesContext ctx;
    ctx.pi = big_pi();
    ctx.sqrt3 = sqrt(BigReal(3));
    ctx.c = exp(-2 * ctx.pi / ctx.sqrt3);
    ctx.logc = -2 * ctx.pi / ctx.sqrt3;
    ctx.x = BigReal(j) / BigReal(l);
    return ctx;
}

// I(j) = sum a_n/n c^n + 3^{3x-3} sum b_n (1/(n+x) + sqrt3/(2 pi (n+x)^2)) c^{n+x}
inline EvalResult eval_I_impl(const CoefficientFamily& fam, const SeriesContext& ctx, int N,
                              unsigned prec) {
    BigReal s1(0), cn(1);
    for (int n = 1; n <= N; ++n) {
        cn *= ctx.c;
        s1 += to_big(fam.a[static_cast<size_t>(n)]) / n * cn;
    }
    BigReal pow3 = exp(log(BigReal(3)) * (3 * ctx.x - 3));
    BigReal s2(0), cnx = exp(ctx.logc * ctx.x);
    for (int n = 0; n <= N; ++n) {
        BigReal npx = n + ctx.x;
        s2 += to_big(fam.b[static_cast<size_t>(n)]) * (1 / npx + ctx.sqrt3 / (2 * ctx.pi * npx * npx)) * cnx;
        cnx *= ctx.c;
    }
    EvalResult r;
    r.value = s1 + pow3 * s2;
    // first omitted term pair (coefficients of order N+1 estimated by order N)
    BigReal tailA = abs(to_big(fam.a[static_cast<size_t>(N)])) / (N + 1) * cn * ctx.c;
    BigReal tailB = pow3 * abs(to_big(fam.b[static_cast<size_t>(N)])) / (N + 1 + ctx.x) * cnx;
    r.err_estimate = tailA + tailB;
    r.warning = r.err_estimate > exp(log(BigReal(10)) * (1 - static_cast<int>(prec) / 2));
    return r;
}

// J(j) = sum a_n (2pi/(sqrt3 n) + 1/n^2) c^n + 2pi 3^{3x-7/2} sum b_n/(n+x) c^{n+x}
inline EvalResult eval_J_impl(const CoefficientFamily& fam, const SeriesContext& ctx, int N,
                              unsigned prec) {
    BigReal s1(0), cn(1);
    for (int n = 1; n <= N; ++n) {
        cn *= ctx.c;
        s1 += to_big(fam.a[static_cast<size_t>(n)]) *
              (2 * ctx.pi / (ctx.sqrt3 * n) + BigReal(1) / (BigReal(n) * n)) * cn;
    }
    BigReal pow3 = 2 * ctx.pi * exp(log(BigReal(3)) * (3 * ctx.x - BigReal(7) / 2));
    BigReal s2(0), cnx = exp(ctx.logc * ctx.x);
    for (int n = 0; n <= N; ++n) {
        s2 += to_big(fam.b[static_cast<size_t>(n)]) / (n + ctx.x) * cnx;
        cnx *= ctx.c;
    }
    EvalResult r;
    r.value = s1 + pow3 * s2;
    BigReal tailA = abs(to_big(fam.a[static_cast<size_t>(N)])) * (2 * ctx.pi / ctx.sqrt3) / (N + 1) * cn * ctx.c;
    BigReal tailB = pow3 * abs(to_big(fam.b[static_cast<size_t>(N)])) / (N + 1 + ctx.x) * cnx;
    r.err_estimate = tailA + tailB;
    r.warning = r.err_estimate > exp(log(BigReal(10)) * (1 - static_cast<int>(prec) / 2));
    return r;
}

}  // namespace detail

inline EvalResult eval_I(int j, int l, int N, unsigned prec) {
    if (N < 8) throw std::invalid_argument("eval_I: N >= 8");
    PrecisionGuard guard(prec + 10);
    auto fam = coefficient_family(j, l, N);
    return detail::eval_I_impl(fam, detail::make_series_context(j, l), N, prec);
}

inline EvalResult eval_J(int j, int l, int N, unsigned prec) {
    if (N < 8) throw std::invalid_argument("eval_J: N >= 8");
    PrecisionGuard guard(prec + 10);
    auto fam = coefficient_family(j, l, N);
    return detail::eval_J_impl(fam, detail::make_series_context(j, l), N, prec);
}

// three real roots of 4x^3 - g2(t^l)x - g3(t^l), ascending (kappa < 0
// labeling of Lemma 5.5); near-degenerate configurations are resolved by
// raising the working precision with the distance to the endpoints
struct CubicRoots {
    BigReal low, mid, high;
};

namespace detail {

inline BigReal eval_qpoly(const QPolyT& p, const BigReal& x) {
    BigReal acc(0);
    for (int k = p.degree(); k >= 0; --k) acc = acc * x + to_big(p.coeff(k));
    return acc;
}

// trigonometric solution at the ambient precision; inputs are exact bits
inline CubicRoots solve_cubic(const BigReal& G2, const BigReal& G3) {
    BigReal p = -G2 / 4, q = -G3 / 4;
    if (p >= 0) throw std::domain_error("solve_cubic: not three real roots (p >= 0)");
    BigReal r = sqrt(-p / 3);
    BigReal arg = 3 * q / (2 * p * r);
    if (arg > 1) arg = 1;
    if (arg < -1) arg = -1;
    BigReal phi = acos(arg);
    BigReal pi = big_pi();
    std::vector<BigReal> roots;
    for (int k = 0; k < 3; ++k) roots.push_back(2 * r * cos(phi / 3 - 2 * pi * k / 3));
    std::sort(roots.begin(), roots.end());
    return {roots[0], roots[1], roots[2]};
}

}  // namespace detail

inline CubicRoots cubic_real_roots(const BigReal& t, const EllipticFibrationSpec& spec) {
    if (!(t > 0 && t < 1)) throw std::invalid_argument("cubic_real_roots: need 0 < t < 1");
    BigReal tau = pow(t, spec.l);
    return detail::solve_cubic(detail::eval_qpoly(spec.g2, tau), detail::eval_qpoly(spec.g3, tau));
}

enum class PeriodMethod { series, quadrature };

struct PeriodTable {
    int l = 0;
    unsigned prec = 0;
    std::string method;
    int terms = 0;              // series terms used
    int quad_levels = 0;
    long quad_nodes = 0;
    std::string pair_choice;    // which adjacent root pair realizes Gamma
    std::vector<BigReal> I, J;  // 1-based: I[j], J[j] for 1 <= j <= l-1
    BigReal err_estimate;
    bool warning = false;
};

namespace detail {

// property of the spec family used to scale the adaptive root precision:
// near t = 0 the colliding gap is ~ t^{a l / 2}, near t = 1 it is ~ (1-t)^{b/2}
struct QuadSetup {
    EllipticFibrationSpec spec;
    BigReal sqrt_abs_kappa;
    bool gamma_is_upper = true;  // Gamma-pair = (mid, high)?
};

inline std::vector<BigReal> quad_integrand(const QuadSetup& qs, const BigReal& t,
                                           const BigReal& one_minus_t, unsigned base_digits) {
    const int l = qs.spec.l;
    const int lm1 = l - 1;
    // adaptive precision: the arccos argument approaches +-1 like
    // min(t,1-t)^(a l resp. b l), so scale digits accordingly
    double dist = std::min(static_cast<double>(log10(t)), static_cast<double>(log10(one_minus_t)));
    int factor = std::max(qs.spec.a * l, qs.spec.b * l) + 2;
    unsigned hi_digits = base_digits + 20 + static_cast<unsigned>(factor * std::max(0.0, -dist));

    BigReal gap_low_ratio, gap_high_ratio, span;
    {
        PrecisionGuard hi(hi_digits);
        // the stored node bits are exact; extend them so downstream
        // cancellations resolve
        BigReal tt = t, omt = one_minus_t;
        tt.precision(hi_digits);
        omt.precision(hi_digits);
        (void)omt;
        BigReal tau = pow(tt, l);
        auto roots = solve_cubic(eval_qpoly(qs.spec.g2, tau), eval_qpoly(qs.spec.g3, tau));
        BigReal denom = roots.high - roots.low;
        gap_low_ratio = (roots.mid - roots.low) / denom;
        gap_high_ratio = (roots.high - roots.mid) / denom;
        span = denom;
    }
    gap_low_ratio.precision(base_digits);
    gap_high_ratio.precision(base_digits);
    span.precision(base_digits);
    if (!(gap_low_ratio > 0) || !(gap_high_ratio > 0))
        throw std::logic_error("quad_integrand: root gap lost despite adaptive precision");

    // K(m_pair) with 1 - m_pair formed from the complementary direct gap
    BigReal K_low_pair = elliptic_K_complement(gap_high_ratio);   // pair (low, mid)
    BigReal K_high_pair = elliptic_K_complement(gap_low_ratio);   // pair (mid, high)
    BigReal scale = qs.sqrt_abs_kappa / sqrt(span);
    BigReal inner_delta = scale * (qs.gamma_is_upper ? K_low_pair : K_high_pair);
    BigReal inner_gamma = scale * (qs.gamma_is_upper ? K_high_pair : K_low_pair);

    std::vector<BigReal> out(2 * static_cast<size_t>(lm1));
    BigReal tpow(1);
    for (int j = 1; j <= lm1; ++j) {
        out[static_cast<size_t>(j - 1)] = tpow * inner_delta;
        out[static_cast<size_t>(lm1 + j - 1)] = tpow * inner_gamma;
        tpow *= t;
    }
    return out;
}

}  // namespace detail

// |int_Delta t^{j-1} dt dx/y| and |int_Gamma t^{j-1} dt dx/y| for all j at
// once, by tanh-sinh over t with the inner integral as a complete elliptic
// integral (5.9)-(5.10)
struct QuadraturePeriods {
    std::vector<BigReal> abs_delta, abs_gamma;  // 1-based like PeriodTable
    int levels = 0;
    long nodes = 0;
    bool converged = true;
    std::string pair_choice;
    BigReal err_estimate;
};

inline QuadraturePeriods quad_periods(const EllipticFibrationSpec& spec, unsigned prec,
                                      int max_level = 11) {
    const int l = spec.l;
    if (l < 2) throw std::invalid_argument("quad_periods: l >= 2");
    PrecisionGuard guard(prec + 10);
    detail::QuadSetup qs{spec, sqrt(abs(to_big(spec.kappa))), true};
    {
        // decide which adjacent pair collapses as t -> 0 (the Gamma pair,
        // carrying the vanishing cycle delta_0); probe well inside (0,1)
        BigReal probe = BigReal(1) / 1024;
        auto roots = cubic_real_roots(probe, spec);
        qs.gamma_is_upper = (roots.high - roots.mid) < (roots.mid - roots.low);
    }
    BigReal tol = exp(log(BigReal(10)) * (-static_cast<int>(prec)));
    auto res = tanh_sinh_01(
        [&](const BigReal& t, const BigReal& omt) {
            return detail::quad_integrand(qs, t, omt, prec + 10);
        },
        2 * static_cast<size_t>(l - 1), tol, max_level);
    QuadraturePeriods out;
    out.levels = res.levels_used;
    out.nodes = res.nodes_used;
    out.converged = res.converged;
    out.err_estimate = res.error_estimate;
    out.pair_choice = qs.gamma_is_upper ? "gamma=(mid,high) collapsing at t->0"
                                        : "gamma=(low,mid) collapsing at t->0";
    out.abs_delta.assign(static_cast<size_t>(l), BigReal(0));
    out.abs_gamma.assign(static_cast<size_t>(l), BigReal(0));
    for (int j = 1; j <= l - 1; ++j) {
        out.abs_delta[static_cast<size_t>(j)] = 2 * res.values[static_cast<size_t>(j - 1)];
        out.abs_gamma[static_cast<size_t>(j)] = 2 * res.values[static_cast<size_t>(l - 1 + j - 1)];
    }
    return out;
}

inline BigReal quad_I(int j, int l, unsigned prec) {
    if (j < 1 || j > l - 1) throw std::invalid_argument("quad_I: need 1 <= j <= l-1");
    auto qp = quad_periods(eisenstein_family(l), prec);
    PrecisionGuard guard(prec + 10);
    return qp.abs_delta[static_cast<size_t>(j)];
}

inline BigReal quad_J(int j, int l, unsigned prec) {
    if (j < 1 || j > l - 1) throw std::invalid_argument("quad_J: need 1 <= j <= l-1");
    auto qp = quad_periods(eisenstein_family(l), prec);
    PrecisionGuard guard(prec + 10);
    return qp.abs_gamma[static_cast<size_t>(j)];
}

// Thm 5.9 relations: |int_Delta t^{j-1}dt dx/y| = (54 pi / l) I(j),
// |int_Gamma t^{j-1}dt dx/y| = (27/l) J(j)
inline PeriodTable period_table(int l, PeriodMethod method, unsigned prec, int terms = 64) {
    if (l < 2) throw std::invalid_argument("period_table: l >= 2");
    PrecisionGuard guard(prec + 10);
    PeriodTable tab;
    tab.l = l;
    tab.prec = prec;
    tab.I.assign(static_cast<size_t>(l), BigReal(0));
    tab.J.assign(static_cast<size_t>(l), BigReal(0));
    if (method == PeriodMethod::series) {
        tab.method = "series";
        tab.terms = terms;
        tab.err_estimate = BigReal(0);
        for (int j = 1; j <= l - 1; ++j) {
            auto fam = coefficient_family(j, l, terms);
            auto ctx = detail::make_series_context(j, l);
            auto ri = detail::eval_I_impl(fam, ctx, terms, prec);
            auto rj = detail::eval_J_impl(fam, ctx, terms, prec);
            tab.I[static_cast<size_t>(j)] = ri.value;
            tab.J[static_cast<size_t>(j)] = rj.value;
            tab.warning = tab.warning || ri.warning || rj.warning;
            if (ri.err_estimate > tab.err_estimate) tab.err_estimate = ri.err_estimate;
            if (rj.err_estimate > tab.err_estimate) tab.err_estimate = rj.err_estimate;
        }
    } else {
        tab.method = "quadrature";
        auto qp = quad_periods(eisenstein_family(l), prec);
        tab.quad_levels = qp.levels;
        tab.quad_nodes = qp.nodes;
        tab.pair_choice = qp.pair_choice;
        tab.err_estimate = qp.err_estimate;
        tab.warning = !qp.converged;
        BigReal pi = big_pi();
        for (int j = 1; j <= l - 1; ++j) {
            tab.I[static_cast<size_t>(j)] = qp.abs_delta[static_cast<size_t>(j)] * l / (54 * pi);
            tab.J[static_cast<size_t>(j)] = qp.abs_gamma[static_cast<size_t>(j)] * l / 27;
        }
    }
    return tab;
}

// numerical check of the (5.15) identities at z = iy:
//   27 E3b(-1/(3z)) = 3 sqrt(3) i z^3 E3a(z)   (both sides real at z = iy)
//   u(-1/(3z)) = 1 - u(z),  u := E3a/(E3a + 27 E3b)
inline BigReal verify_modular_identity(const std::vector<BigReal>& ys, unsigned prec) {
    PrecisionGuard guard(prec + 10);
    // truncation: q^N below target for the slowest-converging sample
    BigReal miny(1);
    for (auto& y : ys) {
        if (y < miny) miny = y;
        BigReal y2 = 1 / (3 * y);
        if (y2 < miny) miny = y2;
    }
    BigReal nval = (static_cast<int>(prec) + 25) * log(BigReal(10)) / (2 * big_pi() * miny);
    int N = static_cast<int>(nval.convert_to<double>()) + 8;
    N = std::min(std::max(N, 64), 4096);
    auto e3a = eisenstein_e3a(N).series;
    auto e3b = eisenstein_e3b(N).series;
    auto eval_series = [&](const Series& s, const BigReal& q) {
        BigReal acc(0), qn = pow(q, s.offset());
        for (int n = s.offset(); n <= s.order(); ++n) {
            acc += to_big(s.coeff(n)) * qn;
            qn *= q;
        }
        return acc;
    };
    BigReal worst(0);
    for (auto& y : ys) {
        BigReal q = exp(-2 * big_pi() * y);
        BigReal qp = exp(-2 * big_pi() / (3 * y));
        BigReal a_q = eval_series(e3a, q), b_q = eval_series(e3b, q);
        BigReal a_qp = eval_series(e3a, qp), b_qp = eval_series(e3b, qp);
        // 27 E3b(i/(3y)) = 3 sqrt(3) y^3 E3a(iy)
        BigReal lhs1 = 27 * b_qp;
        BigReal rhs1 = 3 * sqrt(BigReal(3)) * y * y * y * a_q;
        BigReal dev1 = abs(lhs1 - rhs1) / abs(rhs1);
        // involution on t^l = E3a/(E3a+27E3b)
        BigReal u_q = a_q / (a_q + 27 * b_q);
        BigReal u_qp = a_qp / (a_qp + 27 * b_qp);
        BigReal dev2 = abs(u_qp - (1 - u_q)) / abs(u_qp);
        if (dev1 > worst) worst = dev1;
        if (dev2 > worst) worst = dev2;
    }
    return worst;
}

}  // namespace reglab
