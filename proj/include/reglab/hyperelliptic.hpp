#pragma once

#include "reglab/rational_function.hpp"

#include <map>
#include <string>
#include <vector>

namespace reglab {

// Chart algebra for a family of hyperelliptic curves y^2 = f(x) over the
// t-line, glued from U_0 (coords x, y) and U_inf (coords z = 1/x,
// u = y/x^{g+1}, u^2 = g(z) = z^{2g+2} f(1/z)).
//
// Functions on a chart (and on the overlap) are written p(x) + q(x) y with
// p, q Laurent polynomials in the chart variable over Q(t); y^2 never
// appears because it rewrites to f.

using XPoly = Poly<RatFn>;  // polynomial in a chart variable over Q(t)

// sparse Laurent polynomial over Q(t)
class Laurent {
public:
    Laurent() = default;
    explicit Laurent(const XPoly& p) {
        for (int k = 0; k <= p.degree(); ++k)
            if (!p.coeff(k).is_zero()) c_[k] = p.coeff(k);
    }
    static Laurent term(int e, RatFn coeff) {
        Laurent l;
        if (!coeff.is_zero()) l.c_[e] = std::move(coeff);
        return l;
    }

    bool is_zero() const { return c_.empty(); }
    const std::map<int, RatFn>& terms() const { return c_; }
    RatFn coeff(int e) const {
        auto it = c_.find(e);
        return it == c_.end() ? RatFn(0) : it->second;
    }
    int min_exp() const { return c_.empty() ? 0 : c_.begin()->first; }
    int max_exp() const { return c_.empty() ? 0 : c_.rbegin()->first; }

    Laurent operator-() const {
        Laurent r;
        for (auto& [e, v] : c_) r.c_[e] = -v;
        return r;
    }
    friend Laurent operator+(const Laurent& a, const Laurent& b) {
        Laurent r = a;
        for (auto& [e, v] : b.c_) r.add_term(e, v);
        return r;
    }
    friend Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }
    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        Laurent r;
        for (auto& [e1, v1] : a.c_)
            for (auto& [e2, v2] : b.c_) r.add_term(e1 + e2, v1 * v2);
        return r;
    }
    friend Laurent operator*(const Laurent& a, const RatFn& s) {
        Laurent r;
        if (s.is_zero()) return r;
        for (auto& [e, v] : a.c_) r.c_[e] = v * s;
        return r;
    }
    friend Laurent operator*(const RatFn& s, const Laurent& a) { return a * s; }
    Laurent& operator+=(const Laurent& b) { return *this = *this + b; }
    Laurent& operator-=(const Laurent& b) { return *this = *this - b; }
    friend bool operator==(const Laurent& a, const Laurent& b) { return (a - b).is_zero(); }

    Laurent shifted(int k) const {  // multiply by x^k
        Laurent r;
        for (auto& [e, v] : c_) r.c_[e + k] = v;
        return r;
    }
    Laurent subst_inverse() const {  // x -> 1/x
        Laurent r;
        for (auto& [e, v] : c_) r.c_[-e] = v;
        return r;
    }
    Laurent derivative() const {  // d/dx
        Laurent r;
        for (auto& [e, v] : c_)
            if (e != 0) r.add_term(e - 1, v * RatFn(Rational(e)));
        return r;
    }
    Laurent derivative_t() const {
        Laurent r;
        for (auto& [e, v] : c_) r.add_term(e, v.derivative());
        return r;
    }
    Laurent antiderivative() const {  // requires no x^{-1} term
        Laurent r;
        for (auto& [e, v] : c_) {
            if (e == -1) throw std::domain_error("Laurent::antiderivative: x^-1 term");
            r.c_[e + 1] = v / RatFn(Rational(e + 1));
        }
        return r;
    }

    bool is_polynomial() const { return c_.empty() || min_exp() >= 0; }
    // conversion to a dense polynomial; requires min_exp >= 0
    XPoly to_poly(const std::string& var) const {
        if (!is_polynomial()) throw std::domain_error("Laurent::to_poly: negative exponent");
        std::vector<RatFn> coeffs(c_.empty() ? 0 : static_cast<size_t>(max_exp()) + 1, RatFn(0));
        for (auto& [e, v] : c_) coeffs[static_cast<size_t>(e)] = v;
        return XPoly(var, std::move(coeffs));
    }

    // exact division by a polynomial (throws if not divisible)
    friend Laurent exact_div(const Laurent& a, const XPoly& f) {
        if (a.is_zero()) return Laurent();
        int m = a.min_exp();
        XPoly num = a.shifted(-m).to_poly(f.var());
        XPoly q = exact_div(num, f);
        return Laurent(q).shifted(m);
    }

    std::string str(const std::string& var) const {
        if (is_zero()) return "0";
        std::string out;
        for (auto& [e, v] : c_) {
            if (!out.empty()) out += " + ";
            out += "(" + v.str() + ")";
            if (e != 0) out += "*" + var + "^" + std::to_string(e);
        }
        return out;
    }

private:
    void add_term(int e, const RatFn& v) {
        auto it = c_.find(e);
        if (it == c_.end()) {
            if (!v.is_zero()) c_[e] = v;
            return;
        }
        it->second += v;
        if (it->second.is_zero()) c_.erase(it);
    }
    std::map<int, RatFn> c_;
};

// p(x) + q(x) y on a chart (y stands for u on the infinity chart)
struct ChartFn {
    Laurent even, odd;

    bool is_zero() const { return even.is_zero() && odd.is_zero(); }
    ChartFn operator-() const { return {-even, -odd}; }
    friend ChartFn operator+(const ChartFn& a, const ChartFn& b) {
        return {a.even + b.even, a.odd + b.odd};
    }
    friend ChartFn operator-(const ChartFn& a, const ChartFn& b) { return a + (-b); }
    friend ChartFn operator*(const ChartFn& a, const Laurent& s) {
        return {a.even * s, a.odd * s};
    }
    friend ChartFn operator*(const ChartFn& a, const RatFn& s) { return {a.even * s, a.odd * s}; }
    ChartFn& operator+=(const ChartFn& b) { return *this = *this + b; }
    ChartFn& operator-=(const ChartFn& b) { return *this = *this - b; }
    friend bool operator==(const ChartFn& a, const ChartFn& b) {
        return a.even == b.even && a.odd == b.odd;
    }

    ChartFn dx() const { return {even.derivative(), odd.derivative()}; }
    ChartFn dy() const { return {odd, Laurent()}; }
    ChartFn dt() const { return {even.derivative_t(), odd.derivative_t()}; }
    ChartFn mul_y(const XPoly& f) const {  // multiply by y (uses y^2 = f)
        return {odd * Laurent(f), even};
    }
};

// relative 1-form (P + Q y) dx/y in canonical shape
struct RelForm {
    Laurent P, Q;

    bool is_zero() const { return P.is_zero() && Q.is_zero(); }
    RelForm operator-() const { return {-P, -Q}; }
    friend RelForm operator+(const RelForm& a, const RelForm& b) { return {a.P + b.P, a.Q + b.Q}; }
    friend RelForm operator-(const RelForm& a, const RelForm& b) { return a + (-b); }
    friend RelForm operator*(const RelForm& a, const RatFn& s) { return {a.P * s, a.Q * s}; }
    RelForm& operator-=(const RelForm& b) { return *this = *this - b; }
    friend bool operator==(const RelForm& a, const RelForm& b) { return a.P == b.P && a.Q == b.Q; }
};

// absolute 1-form cx dx + cy dy + ct dt on a chart
struct AbsForm {
    ChartFn cx, cy, ct;

    AbsForm operator-() const { return {-cx, -cy, -ct}; }
    friend AbsForm operator+(const AbsForm& a, const AbsForm& b) {
        return {a.cx + b.cx, a.cy + b.cy, a.ct + b.ct};
    }
    friend AbsForm operator-(const AbsForm& a, const AbsForm& b) { return a + (-b); }
};

class HyperellipticFamily;
RelForm rel_d(const ChartFn& h, const XPoly& f);
RelForm to_chart0(const RelForm& w, int genus);

// Cech 1-cocycle (alpha) x (form0, formInf): alpha a function on the overlap
// written in chart-0 coordinates, d(alpha) = form0 - formInf.
struct CechCocycle {
    ChartFn alpha;
    RelForm form0;    // chart 0, in (P + Q y) dx/y shape
    RelForm formInf;  // chart infinity, in (P + Q u) dz/u shape

    friend CechCocycle operator*(const CechCocycle& c, const RatFn& s) {
        return {c.alpha * s, c.form0 * s, c.formInf * s};
    }
    friend CechCocycle operator-(const CechCocycle& a, const CechCocycle& b) {
        return {a.alpha - b.alpha, a.form0 - b.form0, a.formInf - b.formInf};
    }
};

// y^2 = f(x), deg f in {2g+1, 2g+2}, smooth fibers over the generic point
class HyperellipticFamily {
public:
    explicit HyperellipticFamily(XPoly f_in, int genus) : f_(std::move(f_in)), g_(genus) {
        const int n = f_.degree();
        if (genus < 1 || (n != 2 * genus + 1 && n != 2 * genus + 2))
            throw std::invalid_argument("HyperellipticFamily: deg f must be 2g+1 or 2g+2");
        if (f_.var() != "x") f_ = f_.renamed("x");
        fz_ = f_.reverse(2 * g_ + 2).renamed("z");  // z^{2g+2} f(1/z)
        fx_ = f_.derivative();
        ft_ = poly_dt(f_);
        fzz_ = fz_.derivative();
        fzt_ = poly_dt(fz_);
        auto [d, A, B] = extended_euclid(f_, fx_);
        if (d.degree() != 0)
            throw std::invalid_argument("HyperellipticFamily: f has a multiple root identically");
        A_ = A;
        B_ = B;
        auto [dz, C, D] = extended_euclid(fz_, fzz_);
        if (dz.degree() != 0)
            throw std::invalid_argument("HyperellipticFamily: g(z) has a multiple root identically");
        C_ = C;
        D_ = D;
    }

    const XPoly& f() const { return f_; }
    const XPoly& fx() const { return fx_; }
    const XPoly& ft() const { return ft_; }
    const XPoly& fz() const { return fz_; }
    const XPoly& fzz() const { return fzz_; }
    const XPoly& fzt() const { return fzt_; }
    int genus() const { return g_; }
    int n() const { return f_.degree(); }

    // Bezout pairs A f + B f_x = 1 (chart 0) and C g + D g_z = 1 (chart inf)
    const XPoly& bezout_A() const { return A_; }
    const XPoly& bezout_B() const { return B_; }
    const XPoly& bezout_C() const { return C_; }
    const XPoly& bezout_D() const { return D_; }

    // replace the chart-0 Bezout pair by (A + s f_x, B - s f); cohomology
    // classes do not depend on the choice, which a property test asserts
    HyperellipticFamily with_shifted_bezout(const XPoly& s) const {
        HyperellipticFamily fam = *this;
        fam.A_ = A_ + s * fx_;
        fam.B_ = B_ - s * f_;
        if (fam.A_ * f_ + fam.B_ * fx_ != XPoly::constant("x", RatFn(1)))
            throw std::logic_error("with_shifted_bezout: identity lost");
        return fam;
    }

    // cocycle-condition check: d(alpha) == form0 - formInf on the overlap
    bool is_cocycle(const CechCocycle& c) const {
        RelForm lhs = rel_d(c.alpha, f_);
        RelForm rhs = c.form0 - to_chart0(c.formInf, g_);
        return lhs == rhs;
    }

    CechCocycle make_cocycle(ChartFn alpha, RelForm form0, RelForm formInf) const {
        CechCocycle c{std::move(alpha), std::move(form0), std::move(formInf)};
        if (!is_cocycle(c)) throw std::invalid_argument("CechCocycle: cocycle condition fails");
        return c;
    }

    // Lemma 6.1 basis: (omega_1..omega_g, omega_1^*..omega_g^*)
    std::vector<CechCocycle> basis() const {
        std::vector<CechCocycle> out;
        for (int i = 1; i <= g_; ++i) {  // omega_i = (0) x (x^{i-1} dx/y, -z^{g-i} dz/u)
            RelForm f0{Laurent::term(i - 1, RatFn(1)), Laurent()};
            RelForm fi{-Laurent::term(g_ - i, RatFn(1)), Laurent()};
            out.push_back(make_cocycle(ChartFn{}, f0, fi));
        }
        for (int i = 1; i <= g_; ++i) {  // omega_i^* = (y/x^i) x (...)
            ChartFn alpha{Laurent(), Laurent::term(-i, RatFn(1))};
            Laurent p0, pinf;
            for (int m = 0; m <= n(); ++m) {
                if (f_.coeff(m).is_zero()) continue;
                RatFn w = RatFn(make_rational(m, 2) - Rational(i)) * f_.coeff(m);
                if (m > i) p0 += Laurent::term(m - i - 1, w);
                else pinf += Laurent::term(g_ - m + i, w);
            }
            out.push_back(make_cocycle(alpha, RelForm{p0, Laurent()}, RelForm{pinf, Laurent()}));
        }
        return out;
    }

private:
    static XPoly poly_dt(const XPoly& p) {
        std::vector<RatFn> c;
        for (int k = 0; k <= p.degree(); ++k) c.push_back(p.coeff(k).derivative());
        return XPoly(p.var(), std::move(c));
    }

    XPoly f_, fz_, fx_, ft_, fzz_, fzt_;
    XPoly A_, B_, C_, D_;
    int g_;
};

// relative differential of a chart function h = p + q y:
// d(p + qy) = (q' f + q f'/2) dx/y + p' y dx/y
inline RelForm rel_d(const ChartFn& h, const XPoly& f) {
    Laurent fl(f), fxl(f.derivative());
    return {h.odd.derivative() * fl + h.odd * fxl * RatFn(make_rational(1, 2)),
            h.even.derivative()};
}

// rewrite a chart-infinity relative form into chart-0 coordinates:
//   z^j dz/u = -x^{g-1-j} dx/y,   q(z) u dz/u = q(z) dz = -q(1/x) x^{-2} dx
inline RelForm to_chart0(const RelForm& w, int genus) {
    RelForm out;
    for (auto& [j, c] : w.P.terms()) out.P += Laurent::term(genus - 1 - j, -c);
    out.Q = -w.Q.subst_inverse().shifted(-2);
    return out;
}

// rewrite a chart-infinity function p(z) + q(z) u in chart-0 coordinates:
//   z = 1/x, u = y / x^{g+1}
inline ChartFn fn_to_chart0(const ChartFn& h, int genus) {
    return {h.even.subst_inverse(), h.odd.subst_inverse().shifted(-(genus + 1))};
}

}  // namespace reglab
