#pragma once

#include "reglab/polynomial.hpp"

#include <optional>

namespace reglab {

// Field of rational functions num/den over Rational coefficients.
// Invariants: den monic and nonzero, gcd(num, den) = 1.
class RatFn {
public:
    RatFn() : RatFn(Rational(0)) {}
    explicit RatFn(const Rational& c)
        : num_(Poly<Rational>::constant("t", c)), den_(Poly<Rational>::constant("t", Rational(1))) {}
    RatFn(int c) : RatFn(Rational(c)) {}
    explicit RatFn(Poly<Rational> num)
        : num_(std::move(num)), den_(Poly<Rational>::constant(num_.var(), Rational(1))) {}
    RatFn(Poly<Rational> num, Poly<Rational> den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::domain_error("RatFn: zero denominator");
        reduce();
    }

    const Poly<Rational>& num() const { return num_; }
    const Poly<Rational>& den() const { return den_; }
    const std::string& var() const { return den_.var(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    RatFn operator-() const { return RatFn(unchecked{}, -num_, den_); }

    friend RatFn operator+(const RatFn& a, const RatFn& b) {
        return RatFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFn operator-(const RatFn& a, const RatFn& b) { return a + (-b); }
    friend RatFn operator*(const RatFn& a, const RatFn& b) {
        return RatFn(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFn operator/(const RatFn& a, const RatFn& b) {
        if (b.is_zero()) throw std::domain_error("RatFn: division by zero");
        return RatFn(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFn& operator+=(const RatFn& b) { return *this = *this + b; }
    RatFn& operator-=(const RatFn& b) { return *this = *this - b; }
    RatFn& operator*=(const RatFn& b) { return *this = *this * b; }
    RatFn& operator/=(const RatFn& b) { return *this = *this / b; }

    friend bool operator==(const RatFn& a, const RatFn& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFn& a, const RatFn& b) { return !(a == b); }

    RatFn derivative() const {
        return RatFn(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    // evaluation; nullopt at a pole
    std::optional<Rational> operator()(const Rational& x) const {
        Rational d = den_(x);
        if (d == 0) {
            if (num_(x) != 0) return std::nullopt;
            // removable only if reduce() missed it -- cannot happen; still be safe
            return std::nullopt;
        }
        return num_(x) / d;
    }

    // order of vanishing at P (negative at a pole)
    int order_at(const Rational& P) const {
        if (is_zero()) throw std::domain_error("RatFn::order_at of zero");
        const std::string& v = var();
        const Poly<Rational> lin(v, {-P, Rational(1)});
        auto count = [&](Poly<Rational> q) {
            int ord = 0;
            q = q.renamed(v);
            while (q(P) == 0) {
                q = exact_div(q, lin);
                ++ord;
            }
            return ord;
        };
        return count(num_) - count(den_);
    }

    std::string str() const {
        if (is_polynomial()) return num_.str();
        std::string n = num_.str(), d = den_.str();
        if (num_.degree() > 0) n = "(" + n + ")";
        if (den_.degree() > 0) d = "(" + d + ")";
        return n + "/" + d;
    }

private:
    struct unchecked {};
    RatFn(unchecked, Poly<Rational> num, Poly<Rational> den)
        : num_(std::move(num)), den_(std::move(den)) {}

    void reduce() {
        if (num_.is_zero()) {
            den_ = Poly<Rational>::constant(den_.var(), Rational(1));
            return;
        }
        auto g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
        }
        const Rational lead = den_.leading();
        if (lead != 1) {
            num_ = num_ / lead;
            den_ = den_ / lead;
        }
    }

    Poly<Rational> num_, den_;
};

// Residue at t = P of the 1-form (num/den) dt, which must have at most a
// simple pole there: Res = num(P) / ((den/(t-P))(P)).  Returns 0 when P is
// not a pole; throws on a pole of order >= 2.
inline Rational rational_residue(const Poly<Rational>& num, const Poly<Rational>& den,
                                 const Rational& P) {
    if (den.is_zero()) throw std::domain_error("rational_residue: zero denominator");
    RatFn form(num, den);  // cancels common factors first
    if (form.is_zero()) return Rational(0);
    const Poly<Rational> lin(form.var(), {-P, Rational(1)});
    Poly<Rational> d = form.den();
    if (d(P) != 0) return Rational(0);
    Poly<Rational> d1 = exact_div(d, lin);
    if (d1(P) == 0) throw std::domain_error("rational_residue: pole of order >= 2 at P");
    return form.num()(P) / d1(P);
}

inline Rational rational_residue(const RatFn& form, const Rational& P) {
    return rational_residue(form.num(), form.den(), P);
}

}  // namespace reglab
