#pragma once

#include "reglab/gauss_manin.hpp"

#include <array>
#include <limits>

namespace reglab {

using Mat2 = std::array<std::array<RatFn, 2>, 2>;
using QPolyT = Poly<Rational>;

// family y^2 = 4x^3 - g2(t) x - g3(t) as a HyperellipticFamily
inline HyperellipticFamily weierstrass_family(const QPolyT& g2, const QPolyT& g3) {
    XPoly f("x", {RatFn(-g3.renamed("t")), RatFn(-g2.renamed("t")), RatFn(0), RatFn(Rational(4))});
    return HyperellipticFamily(std::move(f), 1);
}

// Theorem 6.4 closed form, basis (omega, omega^*), columns = images:
//   nabla(omega)   = -Delta'/(12 Delta) omega + 3(2g2g3'-3g2'g3)/(4 Delta) omega^*
//   nabla(omega^*) = -g2(2g2g3'-3g2'g3)/(4 Delta) omega + Delta'/(12 Delta) omega^*
inline Mat2 weierstrass_connection(const QPolyT& g2_in, const QPolyT& g3_in) {
    QPolyT g2 = g2_in.renamed("t"), g3 = g3_in.renamed("t");
    QPolyT Delta = g2 * g2 * g2 - Rational(27) * g3 * g3;
    if (Delta.is_zero()) throw std::invalid_argument("weierstrass_connection: Delta == 0");
    QPolyT E = Rational(2) * g2 * g3.derivative() - Rational(3) * g2.derivative() * g3;
    RatFn dlog(Delta.derivative(), Rational(12) * Delta);
    RatFn e_over(Rational(3) * E, Rational(4) * Delta);
    RatFn g2e(g2 * E, Rational(4) * Delta);
    Mat2 M;
    M[0][0] = -dlog;
    M[1][0] = e_over;
    M[0][1] = -g2e;
    M[1][1] = dlog;
    return M;
}

enum class ReductionKind { smooth, multiplicative, additive };

struct ReductionType {
    ReductionKind kind = ReductionKind::smooth;
    int n = 0;  // ord_P(Delta) for multiplicative fibers
};

inline int poly_order_at(const QPolyT& p, const Rational& P) {
    if (p.is_zero()) return std::numeric_limits<int>::max();
    QPolyT lin(p.var(), {-P, Rational(1)});
    QPolyT q = p;
    int ord = 0;
    while (q(P) == 0) {
        q = exact_div(q, lin);
        ++ord;
    }
    return ord;
}

// Theorem 6.5 trichotomy from (ord g2, ord Delta) of a minimal model at P
inline ReductionType reduction_type(const QPolyT& g2_in, const QPolyT& g3_in, const Rational& P) {
    QPolyT g2 = g2_in.renamed("t"), g3 = g3_in.renamed("t");
    int o2 = poly_order_at(g2, P), o3 = poly_order_at(g3, P);
    if (o2 >= 4 && o3 >= 6)
        throw std::invalid_argument("reduction_type: (g2,g3) not minimal at P; divide by (t-P)^(4,6)");
    QPolyT Delta = g2 * g2 * g2 - Rational(27) * g3 * g3;
    if (Delta.is_zero()) throw std::invalid_argument("reduction_type: Delta == 0");
    int oD = poly_order_at(Delta, P);
    if (oD == 0) return {ReductionKind::smooth, 0};
    if (o2 == 0) return {ReductionKind::multiplicative, oD};
    return {ReductionKind::additive, oD};
}

// Theorem 6.5 basis of the canonical extension: {omega, omega^*} in the
// semistable/smooth case, {(t-P) omega, omega^*} in the additive case.
// Returned as the pair of factors multiplying (omega, omega^*).
inline std::pair<QPolyT, QPolyT> canonical_extension_basis(const QPolyT& g2, const QPolyT& g3,
                                                           const Rational& P) {
    auto rt = reduction_type(g2, g3, P);
    QPolyT one = QPolyT::constant("t", Rational(1));
    if (rt.kind == ReductionKind::additive) return {QPolyT("t", {-P, Rational(1)}), one};
    return {one, one};
}

// residue at P of the connection in the scaled basis e_j' = s_j e_j:
//   M'_ij = (s_j/s_i) M_ij + delta_ij s_j'/s_j
// entries must have at most simple poles (canonical-extension property)
inline std::array<std::array<Rational, 2>, 2> residue_matrix(
    const Mat2& M, const std::pair<QPolyT, QPolyT>& scaling, const Rational& P) {
    std::array<RatFn, 2> s{RatFn(scaling.first.renamed("t")), RatFn(scaling.second.renamed("t"))};
    std::array<std::array<Rational, 2>, 2> R;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            RatFn entry = M[static_cast<size_t>(i)][static_cast<size_t>(j)] * s[static_cast<size_t>(j)] / s[static_cast<size_t>(i)];
            if (i == j) entry += s[static_cast<size_t>(j)].derivative() / s[static_cast<size_t>(j)];
            R[static_cast<size_t>(i)][static_cast<size_t>(j)] = rational_residue(entry, P);
        }
    return R;
}

// exact check that both eigenvalue real parts of a rational 2x2 matrix lie
// in [0,1): eigenvalues are (tr +- sqrt(disc))/2 with disc = tr^2 - 4 det
inline bool eigenvalue_real_parts_in_unit_interval(const std::array<std::array<Rational, 2>, 2>& R) {
    Rational tr = R[0][0] + R[1][1];
    Rational det = R[0][0] * R[1][1] - R[0][1] * R[1][0];
    Rational disc = tr * tr - 4 * det;
    if (disc < 0) return tr >= 0 && tr < 2;  // conjugate pair, real part tr/2
    // sqrt(disc) comparisons done by squaring: lam_min >= 0, lam_max < 1
    // lam_min = (tr - sqrt(disc))/2 >= 0  <=>  tr >= 0 and tr^2 >= disc
    bool lo = tr >= 0 && tr * tr >= disc;
    // lam_max = (tr + sqrt(disc))/2 < 1  <=>  sqrt(disc) < 2 - tr
    bool hi = (2 - tr) > 0 && disc < (2 - tr) * (2 - tr);
    return lo && hi;
}

inline bool is_nilpotent2(const std::array<std::array<Rational, 2>, 2>& R) {
    Rational tr = R[0][0] + R[1][1];
    Rational det = R[0][0] * R[1][1] - R[0][1] * R[1][0];
    return tr == 0 && det == 0;
}

}  // namespace reglab
