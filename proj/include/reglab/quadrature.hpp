#pragma once

#include "reglab/bigfloat.hpp"

#include <functional>
#include <vector>

namespace reglab {

// tanh-sinh (double-exponential) quadrature on (0,1) for a vector-valued
// integrand.  Nodes x = (1 + tanh(pi/2 sinh(u)))/2 cluster doubly
// exponentially at the endpoints, which absorbs the logarithmic blowup of
// the elliptic inner integrals as the cubic roots collide at t -> 0, 1.
//
// The integrand receives both t and 1-t: near an endpoint the small one is
// exact to full relative accuracy, which the root solver needs.
using Integrand01 = std::function<std::vector<BigReal>(const BigReal& t, const BigReal& one_minus_t)>;

struct QuadratureResult {
    std::vector<BigReal> values;
    BigReal error_estimate;  // last inter-level difference, component max
    int levels_used = 0;
    long nodes_used = 0;
    bool converged = false;
};

inline QuadratureResult tanh_sinh_01(const Integrand01& f, size_t ncomp, const BigReal& tol,
                                     int max_level = 12) {
    const BigReal half_pi = big_pi() / 2;
    // below this weight even a log-singular integrand cannot move the sum by tol
    const BigReal cutoff = tol * BigReal("1e-12");

    std::vector<BigReal> sum(ncomp, BigReal(0));
    QuadratureResult res;
    res.values.assign(ncomp, BigReal(0));

    auto eval_at_u = [&](const BigReal& u, std::vector<BigReal>& acc, const BigReal& h) -> bool {
        BigReal su = half_pi * sinh(u);
        BigReal ch = cosh(su);
        BigReal w = h * half_pi * cosh(u) / (ch * ch);
        if (w < cutoff) return false;
        // 1 - tanh(s) = 2 e^{-2s}/(1 + e^{-2s}); near-endpoint distance is exact
        BigReal d = exp(-2 * abs(su));
        BigReal near_end = d / (1 + d);
        BigReal far_end = 1 - near_end;
        auto vals = u >= 0 ? f(far_end, near_end) : f(near_end, far_end);
        for (size_t c = 0; c < ncomp; ++c) acc[c] += (w / 2) * vals[c];
        ++res.nodes_used;
        return true;
    };

    for (int level = 0; level <= max_level; ++level) {
        BigReal h = ldexp(BigReal(1), -level);
        std::vector<BigReal> acc(ncomp, BigReal(0));
        if (level == 0) {
            eval_at_u(BigReal(0), acc, h);
            for (long k = 1;; ++k) {
                bool live = eval_at_u(h * k, acc, h);
                if (eval_at_u(-h * k, acc, h)) live = true;
                if (!live) break;
            }
            sum = acc;
        } else {
            // new nodes: odd multiples of the refined step
            for (long k = 1;; k += 2) {
                bool live = eval_at_u(h * k, acc, h);
                if (eval_at_u(-h * k, acc, h)) live = true;
                if (!live) break;
            }
            for (size_t c = 0; c < ncomp; ++c) sum[c] = sum[c] / 2 + acc[c];
        }
        res.levels_used = level;
        if (level >= 2) {
            BigReal diff(0);
            for (size_t c = 0; c < ncomp; ++c) {
                BigReal scale = abs(sum[c]) > 1 ? BigReal(abs(sum[c])) : BigReal(1);
                BigReal d = abs(sum[c] - res.values[c]) / scale;
                if (d > diff) diff = d;
            }
            res.error_estimate = diff;
            if (diff < tol) {
                res.values = sum;
                res.converged = true;
                return res;
            }
        }
        res.values = sum;
    }
    res.converged = false;
    return res;
}

}  // namespace reglab
