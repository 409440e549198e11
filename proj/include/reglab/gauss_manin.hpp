#pragma once

#include "reglab/hyperelliptic.hpp"

namespace reglab {

namespace detail {

// Lemma 6.3 lifting of (P + Qy) dx/y to an absolute form on the chart:
// hat(x^i dx/y) = x^i (A y dx + 2 B dy), while Q y dx/y = Q dx lifts to itself.
inline AbsForm lift_rel_form(const RelForm& w, const XPoly& A, const XPoly& B) {
    AbsForm out;
    out.cx = ChartFn{w.Q, w.P * Laurent(A)};
    out.cy = ChartFn{w.P * Laurent(B) * RatFn(Rational(2)), Laurent()};
    out.ct = ChartFn{};
    return out;
}

// exterior differential of an absolute 1-form on a chart with relation
// y^2 = f: returns W with d(form) = W dt ^ dx, expressed as the relative
// form W dx = (P + Q y) dx/y.
inline RelForm abs_d(const AbsForm& a, const XPoly& f, const XPoly& f_x, const XPoly& f_t) {
    ChartFn S = a.cx.dt() - a.ct.dx();
    ChartFn T = (a.cy.dt() - a.ct.dy()) * Laurent(f_x) - (a.cy.dx() - a.cx.dy()) * Laurent(f_t);
    const RatFn half(make_rational(1, 2));
    return {S.odd * Laurent(f) + T.even * half, S.even + T.odd * half};
}

// absolute differential of a chart function
inline AbsForm abs_d_fn(const ChartFn& h) {
    return {h.dx(), h.dy(), h.dt()};
}

// chart-infinity absolute form rewritten in chart-0 coordinates:
// dz = -x^{-2} dx,  du = x^{-(g+1)} dy - (g+1) x^{-(g+2)} y dx
inline AbsForm abs_to_chart0(const AbsForm& a, const HyperellipticFamily& fam) {
    const int g = fam.genus();
    ChartFn G = fn_to_chart0(a.cx, g);
    ChartFn H = fn_to_chart0(a.cy, g);
    ChartFn E = fn_to_chart0(a.ct, g);
    AbsForm out;
    out.cx = G * Laurent::term(-2, RatFn(-1)) +
             H.mul_y(fam.f()) * Laurent::term(-(g + 2), RatFn(Rational(-(g + 1))));
    out.cy = H * Laurent::term(-(g + 1), RatFn(1));
    out.ct = E;
    return out;
}

}  // namespace detail

// Connecting homomorphism (6.8)-(6.11): nabla(cocycle) = dt (x) result.
// The Cech-1 component of D is -d(alpha) + hat(z_0) - hat(z_inf); after
// eliminating dy via 2y dy = f_x dx + f_t dt its dx part must cancel, and
// the dt part is a regular overlap function (the division by f is exact
// because gcd(f, f_x) = 1).  The iota sign of (6.11) flips the Cech-1 part.
inline CechCocycle gm_delta(const HyperellipticFamily& fam, const CechCocycle& c) {
    using namespace detail;
    AbsForm lift0 = lift_rel_form(c.form0, fam.bezout_A(), fam.bezout_B());
    AbsForm liftInf = lift_rel_form(c.formInf, fam.bezout_C(), fam.bezout_D());

    RelForm w0 = abs_d(lift0, fam.f(), fam.fx(), fam.ft());
    RelForm wInf = abs_d(liftInf, fam.fz(), fam.fzz(), fam.fzt());

    AbsForm total = -abs_d_fn(c.alpha) + lift0 - abs_to_chart0(liftInf, fam);

    // dx-coefficient after dy elimination must vanish identically
    const RatFn half(make_rational(1, 2));
    Laurent fl(fam.f()), fxl(fam.fx()), ftl(fam.ft());
    if (!(total.cx.even + total.cy.odd * fxl * half).is_zero() ||
        !(total.cx.odd * fl * RatFn(2) + total.cy.even * fxl).is_zero())
        throw std::logic_error("gm_delta: dx component did not cancel");

    Laurent H0_over_f = exact_div(total.cy.even, fam.f());
    ChartFn gfun{total.ct.even + total.cy.odd * ftl * half,
                 total.ct.odd + H0_over_f * ftl * half};

    return fam.make_cocycle(-gfun, w0, wInf);
}

// Reduce a cocycle to coordinates in the Lemma 6.1 basis
// (omega_1..omega_g, omega_1^*..omega_g^*).  Normal-form pass:
//   1. trade chart y-parts for Cech-1 functions via antiderivative
//      coboundaries (Lemma 6.2 in reverse),
//   2. the even Cech-1 part must collapse to a constant (dropped, exact),
//   3. odd Cech-1 monomials x^a y map to coboundaries of x^a y (a >= 0),
//      z^b u (a <= -g-1), or basis elements omega_i^* (-g <= a <= -1),
//   4. what is left is a global relative form, read off against omega_i.
// Any residue at the asserts means the input was not a cocycle.
inline std::vector<RatFn> reduce_to_basis(const HyperellipticFamily& fam, CechCocycle c) {
    const int g = fam.genus();
    std::vector<RatFn> coords(2 * static_cast<size_t>(g), RatFn(0));
    const RatFn half(make_rational(1, 2));
    Laurent fl(fam.f()), fxl(fam.fx());
    Laurent gl(fam.fz()), gzl(fam.fzz());

    // 1. push chart y-parts into the Cech-1 function
    if (!c.form0.Q.is_zero()) {
        if (!c.form0.Q.is_polynomial())
            throw std::invalid_argument("reduce_to_basis: chart-0 form not regular");
        Laurent R0 = c.form0.Q.antiderivative();
        c.alpha.even -= R0;
        c.form0.Q = Laurent();
    }
    if (!c.formInf.Q.is_zero()) {
        if (!c.formInf.Q.is_polynomial())
            throw std::invalid_argument("reduce_to_basis: chart-inf form not regular");
        Laurent Rinf = c.formInf.Q.antiderivative();
        c.alpha.even += Rinf.subst_inverse();
        c.formInf.Q = Laurent();
    }

    // 2. even Cech-1 part must be a constant; a constant is a coboundary
    for (auto& [e, v] : c.alpha.even.terms())
        if (e != 0 && !v.is_zero())
            throw std::invalid_argument("reduce_to_basis: non-cocycle (even Cech-1 residue)");
    c.alpha.even = Laurent();

    // 3. odd Cech-1 monomials
    for (auto& [a, v] : c.alpha.odd.terms()) {
        if (v.is_zero()) continue;
        if (a >= 0) {
            // subtract v * D0(x^a y, 0); d(x^a y) = (a x^{a-1} f + x^a f_x/2) dx/y
            c.form0.P -= (Laurent::term(a - 1, RatFn(Rational(a))) * fl +
                          Laurent::term(a, half) * fxl) * v;
        } else if (-a <= g) {
            const int i = -a;  // omega_i^*
            coords[static_cast<size_t>(g + i - 1)] = v;
            // forms adjusted below by subtracting v * omega_i^*
        } else {
            const int b = -a - (g + 1);  // x^a y = z^b u
            c.formInf.P += (Laurent::term(b - 1, RatFn(Rational(b))) * gl +
                            Laurent::term(b, half) * gzl) * v;
        }
    }
    c.alpha.odd = Laurent();

    // subtract the omega_i^* contributions recorded above
    auto basis = fam.basis();
    for (int i = 1; i <= g; ++i) {
        const RatFn& v = coords[static_cast<size_t>(g + i - 1)];
        if (v.is_zero()) continue;
        c.form0 -= basis[static_cast<size_t>(g + i - 1)].form0 * v;
        c.formInf -= basis[static_cast<size_t>(g + i - 1)].formInf * v;
    }

    // 4. the remainder is a global 1-form sum_c_i x^{i-1} dx/y
    if (!c.form0.Q.is_zero() || !c.formInf.Q.is_zero())
        throw std::logic_error("reduce_to_basis: unexpected y-part after reduction");
    for (auto& [e, v] : c.form0.P.terms()) {
        if (v.is_zero()) continue;
        if (e < 0 || e > g - 1)
            throw std::invalid_argument("reduce_to_basis: residual outside basis span");
        coords[static_cast<size_t>(e)] = v;
    }
    for (int i = 1; i <= g; ++i) {
        c.form0 -= basis[static_cast<size_t>(i - 1)].form0 * coords[static_cast<size_t>(i - 1)];
        c.formInf -= basis[static_cast<size_t>(i - 1)].formInf * coords[static_cast<size_t>(i - 1)];
    }
    if (!c.form0.is_zero() || !c.formInf.is_zero())
        throw std::invalid_argument("reduce_to_basis: residual outside basis span");
    return coords;
}

// Gauss-Manin connection matrix: column j holds the coordinates of
// nabla(basis_j), i.e. nabla(e_j) = sum_i M[i][j] dt (x) e_i.
inline std::vector<std::vector<RatFn>> connection_matrix(const HyperellipticFamily& fam) {
    const int dim = 2 * fam.genus();
    auto basis = fam.basis();
    std::vector<std::vector<RatFn>> M(static_cast<size_t>(dim),
                                      std::vector<RatFn>(static_cast<size_t>(dim), RatFn(0)));
    for (int j = 0; j < dim; ++j) {
        auto col = reduce_to_basis(fam, gm_delta(fam, basis[static_cast<size_t>(j)]));
        for (int i = 0; i < dim; ++i) M[static_cast<size_t>(i)][static_cast<size_t>(j)] = col[static_cast<size_t>(i)];
    }
    return M;
}

}  // namespace reglab
