#pragma once

#include "reglab/rational.hpp"

#include <algorithm>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace reglab {

// Dense univariate polynomial over a field F, with a named variable.
// Mixing variables in a binary operation is a programming error and throws.
// degree() of the zero polynomial is the sentinel -1.
template <class F>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::string var) : var_(std::move(var)) {}
    Poly(std::string var, std::vector<F> coeffs) : var_(std::move(var)), c_(std::move(coeffs)) {
        trim();
    }

    static Poly constant(std::string var, F value) {
        return Poly(std::move(var), {std::move(value)});
    }
    static Poly monomial(std::string var, F value, int deg) {
        std::vector<F> c(static_cast<size_t>(deg) + 1, F(0));
        c.back() = std::move(value);
        return Poly(std::move(var), std::move(c));
    }

    const std::string& var() const { return var_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    const F& coeff(int k) const {
        static const F zero(0);
        if (k < 0 || k >= static_cast<int>(c_.size())) return zero;
        return c_[static_cast<size_t>(k)];
    }
    const std::vector<F>& coeffs() const { return c_; }
    const F& leading() const {
        if (is_zero()) throw std::domain_error("Poly::leading of zero polynomial");
        return c_.back();
    }

    F operator()(const F& x) const {  // Horner
        F acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly(var_);
        std::vector<F> d(c_.size() - 1);
        for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * F(static_cast<int>(k));
        return Poly(var_, std::move(d));
    }

    // coefficient spread t -> t^k
    Poly inflate(int k) const {
        if (k < 1) throw std::invalid_argument("Poly::inflate: k >= 1");
        if (is_zero()) return *this;
        std::vector<F> d(static_cast<size_t>(degree()) * k + 1, F(0));
        for (size_t i = 0; i < c_.size(); ++i) d[i * k] = c_[i];
        return Poly(var_, std::move(d));
    }

    // x^n f(1/x) for n >= degree
    Poly reverse(int n) const {
        if (n < degree()) throw std::invalid_argument("Poly::reverse: n < degree");
        std::vector<F> d(static_cast<size_t>(n) + 1, F(0));
        for (size_t i = 0; i < c_.size(); ++i) d[static_cast<size_t>(n) - i] = c_[i];
        return Poly(var_, std::move(d));
    }

    Poly renamed(std::string var) const { return Poly(std::move(var), c_); }

    Poly operator-() const {
        std::vector<F> d(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) d[i] = -c_[i];
        return Poly(var_, std::move(d));
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        const std::string& v = merged_var(a, b);
        std::vector<F> d(std::max(a.c_.size(), b.c_.size()), F(0));
        for (size_t i = 0; i < d.size(); ++i) d[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
        return Poly(v, std::move(d));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        const std::string& v = merged_var(a, b);
        if (a.is_zero() || b.is_zero()) return Poly(v);
        std::vector<F> d(a.c_.size() + b.c_.size() - 1, F(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == F(0)) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) d[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(v, std::move(d));
    }

    friend Poly operator*(const Poly& a, const F& s) {
        std::vector<F> d(a.c_.size());
        for (size_t i = 0; i < a.c_.size(); ++i) d[i] = a.c_[i] * s;
        return Poly(a.var_, std::move(d));
    }
    friend Poly operator*(const F& s, const Poly& a) { return a * s; }
    friend Poly operator/(const Poly& a, const F& s) {
        if (s == F(0)) throw std::domain_error("Poly: division by zero scalar");
        std::vector<F> d(a.c_.size());
        for (size_t i = 0; i < a.c_.size(); ++i) d[i] = a.c_[i] / s;
        return Poly(a.var_, std::move(d));
    }

    Poly& operator+=(const Poly& b) { return *this = *this + b; }
    Poly& operator-=(const Poly& b) { return *this = *this - b; }
    Poly& operator*=(const Poly& b) { return *this = *this * b; }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (!a.is_zero() && !b.is_zero() && a.var_ != b.var_) return false;
        return a.c_ == b.c_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        const std::string& v = merged_var(a, b);
        if (b.is_zero()) throw std::domain_error("Poly: division by zero polynomial");
        std::vector<F> rem = a.c_;
        if (a.degree() < b.degree()) return {Poly(v), a};
        std::vector<F> quo(static_cast<size_t>(a.degree() - b.degree()) + 1, F(0));
        const F& lead = b.c_.back();
        for (int k = a.degree() - b.degree(); k >= 0; --k) {
            F q = rem[static_cast<size_t>(k + b.degree())] / lead;
            quo[static_cast<size_t>(k)] = q;
            if (q == F(0)) continue;
            for (int j = 0; j <= b.degree(); ++j)
                rem[static_cast<size_t>(k + j)] -= q * b.c_[static_cast<size_t>(j)];
        }
        return {Poly(v, std::move(quo)), Poly(v, std::move(rem))};
    }

    friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
    friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

    // throws unless the division is exact
    friend Poly exact_div(const Poly& a, const Poly& b) {
        auto [q, r] = divmod(a, b);
        if (!r.is_zero()) throw std::domain_error("Poly: exact_div with nonzero remainder");
        return q;
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return *this / leading();
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (int k = degree(); k >= 0; --k) {
            const F& a = c_[static_cast<size_t>(k)];
            if (a == F(0)) continue;
            std::string term = coeff_str(a);
            if (k > 0) {
                if (term == "1") term.clear();
                else if (term == "-1") term = "-";
                else term += "*";
                term += var_;
                if (k > 1) term += "^" + std::to_string(k);
            }
            if (!out.empty() && term[0] != '-') out += "+";
            out += term;
        }
        return out;
    }

private:
    static const std::string& merged_var(const Poly& a, const Poly& b) {
        if (!a.is_constant() && !b.is_constant() && a.var_ != b.var_)
            throw std::invalid_argument("Poly: mixed variables '" + a.var_ + "' and '" + b.var_ + "'");
        return a.is_constant() && !b.is_constant() ? b.var_ : a.var_;
    }

    static std::string coeff_str(const F& a) {
        if constexpr (std::is_same_v<F, Rational>) return rational_str(a);
        else return a.str();
    }

    void trim() {
        while (!c_.empty() && c_.back() == F(0)) c_.pop_back();
    }

    std::string var_{"x"};
    std::vector<F> c_;  // c_[k] multiplies var^k; c_.back() != 0
};

template <class F>
Poly<F> poly_gcd(Poly<F> a, Poly<F> b) {
    while (!b.is_zero()) {
        auto r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

// Extended Euclid: returns (d, A, B) with A*f + B*g = d = gcd(f, g), d monic.
template <class F>
std::tuple<Poly<F>, Poly<F>, Poly<F>> extended_euclid(const Poly<F>& f, const Poly<F>& g) {
    if (f.is_zero() && g.is_zero())
        throw std::invalid_argument("extended_euclid: both inputs zero");
    const std::string v = f.is_zero() ? g.var() : f.var();
    Poly<F> r0 = f, r1 = g;
    Poly<F> s0 = Poly<F>::constant(v, F(1)), s1 = Poly<F>(v);
    Poly<F> t0 = Poly<F>(v), t1 = Poly<F>::constant(v, F(1));
    while (!r1.is_zero()) {
        auto [q, r2] = divmod(r0, r1);
        r0 = std::move(r1); r1 = std::move(r2);
        Poly<F> s2 = s0 - q * s1;
        s0 = std::move(s1); s1 = std::move(s2);
        Poly<F> t2 = t0 - q * t1;
        t0 = std::move(t1); t1 = std::move(t2);
    }
    const F lead = r0.leading();
    Poly<F> d = r0 / lead, A = s0 / lead, B = t0 / lead;
    if (A * f + B * g != d) throw std::logic_error("extended_euclid: Bezout identity failed");
    return {d, A, B};
}

// ---- real-root machinery over Rational (used by the (E4) check) ----

inline int sign_of(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

// Sturm chain count of distinct real roots in the open interval (a, b);
// endpoints must not be roots.
inline int count_roots_open(const Poly<Rational>& p, const Rational& a, const Rational& b) {
    if (p.is_zero()) throw std::invalid_argument("count_roots_open: zero polynomial");
    if (p(a) == 0 || p(b) == 0)
        throw std::invalid_argument("count_roots_open: endpoint is a root");
    std::vector<Poly<Rational>> chain{p, p.derivative()};
    while (!chain.back().is_zero()) {
        auto r = chain[chain.size() - 2] % chain.back();
        chain.push_back(-r);
    }
    chain.pop_back();
    auto variations = [&](const Rational& x) {
        int v = 0, prev = 0;
        for (const auto& q : chain) {
            int s = sign_of(q(x));
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++v;
            prev = s;
        }
        return v;
    };
    return variations(a) - variations(b);
}

// squarefree decomposition p = prod a_i^i (Yun); returns the a_i, index i-1
inline std::vector<Poly<Rational>> squarefree_decomposition(const Poly<Rational>& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree_decomposition: zero polynomial");
    std::vector<Poly<Rational>> parts;
    Poly<Rational> q = p.monic();
    if (q.degree() == 0) return parts;
    Poly<Rational> g = poly_gcd(q, q.derivative());
    Poly<Rational> w = exact_div(q, g).monic();
    while (w.degree() > 0) {
        Poly<Rational> y = poly_gcd(w, g);
        parts.push_back(exact_div(w, y).monic());
        w = std::move(y);
        if (g.degree() > 0) g = exact_div(g, w).monic();
    }
    return parts;
}

// product of the factors of odd multiplicity; p changes sign exactly at its roots
inline Poly<Rational> odd_multiplicity_part(const Poly<Rational>& p) {
    auto parts = squarefree_decomposition(p);
    Poly<Rational> out = Poly<Rational>::constant(p.var(), Rational(1));
    for (size_t i = 0; i < parts.size(); ++i)
        if (i % 2 == 0) out *= parts[i];
    return out;
}

}  // namespace reglab
