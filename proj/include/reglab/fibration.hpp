#pragma once

#include "reglab/weierstrass.hpp"

#include <optional>
#include <string>
#include <vector>

namespace reglab {

// Conditions on (g2, g3) for the mu_l fibration kappa y^2 = 4x^3 - g2(t^l)x - g3(t^l):
//   (E1) Delta = g2^3 - 27 g3^2 = c t^a (1-t)^b, a,b >= 1, c > 0
//   (E2) 2 g2 g3' - 3 g2' g3 = c' t^a' (1-t)^b', a',b' >= 0, c' != 0
//   (E3) g2(0), g2(1) > 0 and g3(0) g3(1) < 0
//   (E4) g2 >= 0 on [0,1]

struct EllipticFibrationSpec {
    QPolyT g2, g3;       // pre-substitution data
    int l = 1;
    Rational kappa{-12};
    int a = 0, b = 0;    // (E1) exponents
    Rational c;          // (E1) constant
    int a1 = 0, b1 = 0;  // (E2) exponents a', b'
    Rational c1;         // (E2) constant c'
};

struct ValidationReport {
    bool ok = false;
    std::vector<std::string> violations;
    std::optional<EllipticFibrationSpec> spec;  // set when ok
};

namespace detail {
// p = c * t^a (1-t)^b exactly; nullopt when a non-constant cofactor remains
struct TabFactor {
    int a, b;
    Rational c;
};
inline std::optional<TabFactor> factor_t_onemt(const QPolyT& p_in) {
    if (p_in.is_zero()) return std::nullopt;
    QPolyT p = p_in.renamed("t");
    QPolyT tpoly("t", {Rational(0), Rational(1)});
    QPolyT onemt("t", {Rational(1), Rational(-1)});
    int a = 0, b = 0;
    while (p(Rational(0)) == 0) {
        p = exact_div(p, tpoly);
        ++a;
    }
    while (p(Rational(1)) == 0) {
        p = exact_div(p, onemt);
        ++b;
    }
    if (p.degree() != 0) return std::nullopt;
    return TabFactor{a, b, p.coeff(0)};
}
}  // namespace detail

inline ValidationReport validate_conditions(const QPolyT& g2_in, const QPolyT& g3_in) {
    ValidationReport rep;
    QPolyT g2 = g2_in.renamed("t"), g3 = g3_in.renamed("t");
    QPolyT Delta = g2 * g2 * g2 - Rational(27) * g3 * g3;
    QPolyT E2 = Rational(2) * g2 * g3.derivative() - Rational(3) * g2.derivative() * g3;

    EllipticFibrationSpec spec;
    spec.g2 = g2;
    spec.g3 = g3;

    auto d = detail::factor_t_onemt(Delta);
    if (!d) rep.violations.push_back("E1: Delta is not of the shape c t^a (1-t)^b");
    else if (d->a < 1 || d->b < 1) rep.violations.push_back("E1: need a, b >= 1");
    else if (d->c <= 0) rep.violations.push_back("E1: need c > 0");
    else {
        spec.a = d->a;
        spec.b = d->b;
        spec.c = d->c;
    }

    if (E2.is_zero()) rep.violations.push_back("E2: 2g2g3' - 3g2'g3 vanishes identically");
    else {
        auto e = detail::factor_t_onemt(E2);
        if (!e) rep.violations.push_back("E2: not of the shape c' t^a' (1-t)^b'");
        else {
            spec.a1 = e->a;
            spec.b1 = e->b;
            spec.c1 = e->c;
        }
    }

    if (!(g2(Rational(0)) > 0 && g2(Rational(1)) > 0))
        rep.violations.push_back("E3: g2(0), g2(1) > 0 fails");
    if (!(g3(Rational(0)) * g3(Rational(1)) < 0))
        rep.violations.push_back("E3: g3(0) g3(1) < 0 fails");

    // (E4) g2 >= 0 on [0,1]: with positive endpoints this holds iff the
    // odd-multiplicity part of g2 has no root in (0,1) (Sturm count)
    if (g2(Rational(0)) > 0 && g2(Rational(1)) > 0 && g2.degree() > 0) {
        QPolyT odd = odd_multiplicity_part(g2);
        if (odd.degree() > 0 && count_roots_open(odd, Rational(0), Rational(1)) > 0)
            rep.violations.push_back("E4: g2 changes sign inside (0,1)");
    }

    rep.ok = rep.violations.empty();
    if (rep.ok) rep.spec = spec;
    return rep;
}

struct CatalogEntry {
    std::string name;  // "i".."v"
    QPolyT g2, g3;
    int a, b;
};

// Remark 5.4: the complete list of (g2, g3) satisfying (E1)-(E4), up to
// (g2,g3) ~ (h^4 g2, h^6 g3) and t -> 1-t
inline std::vector<CatalogEntry> catalog() {
    auto qp = [](std::vector<long> v) {
        std::vector<Rational> c;
        for (long x : v) c.emplace_back(x);
        return QPolyT("t", std::move(c));
    };
    std::vector<CatalogEntry> out;
    out.push_back({"i", qp({3}), qp({1, -2}), 1, 1});
    out.push_back({"ii", qp({12, -9}), qp({8, -9}), 2, 1});
    out.push_back({"iii", qp({27, -24}), qp({-27, 36, -8}), 3, 1});
    out.push_back({"iv", Rational(3) * qp({16, -16, 1}), qp({-2, 1}) * qp({-32, 32, 1}), 4, 1});
    out.push_back({"v", Rational(12) * qp({1, -1, 1}),
                   Rational(4) * qp({-2, 1}) * qp({1, 1}) * qp({-1, 2}), 2, 2});
    for (auto& e : out) {
        auto rep = validate_conditions(e.g2, e.g3);
        if (!rep.ok || rep.spec->a != e.a || rep.spec->b != e.b)
            throw std::logic_error("catalog: entry " + e.name + " failed validation");
    }
    return out;
}

// the section-5.4 Eisenstein-parametrized family (catalog (iii) scaled by
// (h^4, h^6) = (4, 8)), with kappa = -12
inline EllipticFibrationSpec eisenstein_family(int l) {
    auto qp = [](std::vector<long> v) {
        std::vector<Rational> c;
        for (long x : v) c.emplace_back(x);
        return QPolyT("t", std::move(c));
    };
    auto rep = validate_conditions(Rational(12) * qp({9, -8}), Rational(-8) * qp({27, -36, 8}));
    if (!rep.ok) throw std::logic_error("eisenstein_family: validation failed");
    EllipticFibrationSpec spec = *rep.spec;
    spec.l = l;
    spec.kappa = Rational(-12);
    return spec;
}

// Lemma 5.1: minimal k with s^{4k} g2(s^{-l}), s^{6k} g3(s^{-l}) pole-free
inline int minimal_k(const QPolyT& g2, const QPolyT& g3, int l) {
    if (l < 1) throw std::invalid_argument("minimal_k: l >= 1");
    auto ceil_div = [](long n, long d) { return static_cast<int>((n + d - 1) / d); };
    int d2 = std::max(g2.degree(), 0), d3 = std::max(g3.degree(), 0);
    return std::max(ceil_div(static_cast<long>(l) * d2, 4), ceil_div(static_cast<long>(l) * d3, 6));
}

struct KodairaType {
    std::string tag;  // "smooth", "I_n", "II", ..., "IV*"
    int epsilon = 0;  // Kodaira index
    int nu = 0;       // number of irreducible components
};

// fiber type from the orders of a minimal model (residue characteristic 0)
inline KodairaType kodaira_from_orders(int ord_g2, int ord_g3, int ord_delta) {
    auto make = [](std::string tag, int eps, int nu) { return KodairaType{std::move(tag), eps, nu}; };
    if (ord_delta == 0) return make("smooth", 0, 1);
    if (ord_g2 == 0) return make("I_" + std::to_string(ord_delta), ord_delta, ord_delta);
    if (ord_g3 == 1) return make("II", 2, 1);
    if (ord_g2 == 1) return make("III", 3, 2);
    if (ord_g3 == 2) return make("IV", 4, 3);
    if (ord_g2 == 2 && ord_g3 == 3) {
        int n = ord_delta - 6;
        return make("I_" + std::to_string(n) + "*", n + 6, n + 5);
    }
    if (ord_g2 >= 2 && ord_g3 == 3 && ord_delta == 6) return make("I_0*", 6, 5);
    if (ord_g3 == 4) return make("IV*", 8, 7);
    if (ord_g2 == 3) return make("III*", 9, 8);
    if (ord_g3 == 5) return make("II*", 10, 9);
    throw std::invalid_argument("kodaira_from_orders: non-minimal orders");
}

struct FiberDescription {
    std::string location;  // "t=0", "t=zeta_l^i", "t=inf"
    KodairaType type;
};

struct FibrationInvariants {
    int l = 0;
    int k = 0;            // Lemma 5.1
    int h20 = 0;          // = k - 1
    int eps_inf = 0;      // Kodaira index at infinity
    int nu_inf = 0;
    int b2 = 0;
    int rho_f = 0;
    int dim_h2_ind = 0;   // l - 1 (l prime, h20 > 0)
    int h = 0;            // dim F^1 H^2_ind = l - 1 - h20
    KodairaType type_inf;
    std::vector<FiberDescription> fibers;
};

inline bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// numerical invariants (5.2)-(5.3), Lemma 5.1, Prop 5.2 for the mu_l family
inline FibrationInvariants invariants(const EllipticFibrationSpec& spec) {
    const int l = spec.l;
    FibrationInvariants inv;
    inv.l = l;
    inv.k = minimal_k(spec.g2, spec.g3, l);
    inv.h20 = inv.k - 1;

    // minimal model at infinity: gbar_i(s) = s^{(2i)k} g_i(s^{-l})
    QPolyT g2bar = spec.g2.inflate(l).reverse(4 * inv.k).renamed("s");
    QPolyT g3bar = spec.g3.inflate(l).reverse(6 * inv.k).renamed("s");
    QPolyT dbar = g2bar * g2bar * g2bar - Rational(27) * g3bar * g3bar;
    int o2 = poly_order_at(g2bar, Rational(0));
    int o3 = poly_order_at(g3bar, Rational(0));
    int oD = poly_order_at(dbar, Rational(0));
    if (o2 >= 4 && o3 >= 6)
        throw std::invalid_argument("invariants: model at infinity not minimal (k wrong?)");
    inv.type_inf = kodaira_from_orders(o2, o3, oD);
    inv.eps_inf = inv.type_inf.epsilon;
    inv.nu_inf = inv.type_inf.nu;

    // canonical bundle formula cross-check: eps_inf = 12k - l(a+b)
    int eps_formula = 12 * inv.k - l * (spec.a + spec.b);
    if (eps_formula != inv.eps_inf)
        throw std::logic_error("invariants: (5.3) and the order table disagree at infinity");

    inv.b2 = spec.a * l + spec.b * l + inv.eps_inf - 2;
    inv.rho_f = spec.a * l + (spec.b - 1) * l + inv.nu_inf;

    if (is_prime(l) && inv.h20 > 0) {
        // Prop 5.2: fiber at infinity is additive and dim H^2_ind = l-1
        if (inv.eps_inf - inv.nu_inf != 1)
            throw std::logic_error("invariants: fiber at infinity is not additive");
        inv.dim_h2_ind = l - 1;
        inv.h = l - 1 - inv.h20;
    }

    inv.fibers.push_back({"t=0", kodaira_from_orders(0, 0, spec.a * l)});
    for (int i = 0; i < l; ++i)
        inv.fibers.push_back({l == 1 ? "t=1" : "t=zeta_l^" + std::to_string(i),
                              kodaira_from_orders(0, 0, spec.b)});
    inv.fibers.push_back({"t=inf", inv.type_inf});
    return inv;
}

// Remark 3.8 criterion for bijectivity of nabla-bar at a finite point P
inline bool nabla_bar_criterion(const QPolyT& g2_in, const QPolyT& g3_in, const Rational& P) {
    QPolyT g2 = g2_in.renamed("t"), g3 = g3_in.renamed("t");
    auto rt = reduction_type(g2, g3, P);
    if (rt.kind == ReductionKind::smooth) return false;
    if (rt.kind == ReductionKind::multiplicative) return true;
    QPolyT Delta = g2 * g2 * g2 - Rational(27) * g3 * g3;
    QPolyT num = QPolyT("t", {-P, Rational(1)}) *
                 (Rational(2) * g2 * g3.derivative() - Rational(3) * g3 * g2.derivative());
    if (num.is_zero()) return false;
    return rational_residue(num, Delta, P) != 0;
}

// split multiplicative over F at t=1 iff -6 kappa g3(1) is a rational square
inline bool split_multiplicative_check(const Rational& kappa, const QPolyT& g3) {
    Rational v = g3.renamed("t")(Rational(1));
    if (v == 0) throw std::domain_error("split_multiplicative_check: g3(1) = 0");
    return is_rational_square(Rational(-6) * kappa * v);
}

}  // namespace reglab
