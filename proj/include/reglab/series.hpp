#pragma once

#include "reglab/rational.hpp"

#include <string>
#include <vector>

namespace reglab {

// Truncated Laurent series  sum_{e=offset}^{order} c[e-offset] q^e.
// Exponents below `offset` are known to be zero; exponents above `order`
// are semantically unknown, not zero.  Arithmetic tracks the truncation
// order of its operands, so a coefficient you can read is always exact.
class Series {
public:
    Series(std::string var, int offset, int order, std::vector<Rational> coeffs)
        : var_(std::move(var)), offset_(offset), order_(order), c_(std::move(coeffs)) {
        if (order_ < offset_ - 1) throw std::invalid_argument("Series: order < offset-1");
        c_.resize(static_cast<size_t>(order_ - offset_ + 1), Rational(0));
    }

    static Series zero(std::string var, int order) { return Series(std::move(var), 0, order, {}); }
    static Series one(std::string var, int order) {
        return Series(std::move(var), 0, order, {Rational(1)});
    }
    static Series monomial(std::string var, const Rational& c, int e, int order) {
        Series s(std::move(var), e, order, {c});
        return s;
    }

    const std::string& var() const { return var_; }
    int offset() const { return offset_; }
    int order() const { return order_; }

    const Rational& coeff(int e) const {
        static const Rational zero(0);
        if (e > order_) throw std::out_of_range("Series::coeff beyond truncation order");
        if (e < offset_) return zero;
        return c_[static_cast<size_t>(e - offset_)];
    }

    // lowest exponent with nonzero retained coefficient, or order+1 if none
    int valuation() const {
        for (int e = offset_; e <= order_; ++e)
            if (coeff(e) != 0) return e;
        return order_ + 1;
    }

    bool known_zero() const { return valuation() > order_; }

    Series truncated(int new_order) const {
        if (new_order >= order_) return *this;
        std::vector<Rational> c;
        for (int e = offset_; e <= new_order; ++e) c.push_back(coeff(e));
        return Series(var_, offset_, new_order, std::move(c));
    }

    Series shifted(int k) const {  // multiply by q^k
        return Series(var_, offset_ + k, order_ + k, c_);
    }

    Series operator-() const {
        std::vector<Rational> d(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) d[i] = -c_[i];
        return Series(var_, offset_, order_, std::move(d));
    }

    friend Series operator+(const Series& a, const Series& b) {
        check_var(a, b);
        int order = std::min(a.order_, b.order_);
        int offset = std::min(a.offset_, b.offset_);
        std::vector<Rational> d;
        for (int e = offset; e <= order; ++e) d.push_back(a.coeff_raw(e) + b.coeff_raw(e));
        return Series(a.var_, offset, order, std::move(d));
    }
    friend Series operator-(const Series& a, const Series& b) { return a + (-b); }

    friend Series operator*(const Series& a, const Series& b) {
        check_var(a, b);
        // a known through order_a, so the product is trusted through
        // min(order_a + offset_b, order_b + offset_a)
        int order = std::min(a.order_ + b.offset_, b.order_ + a.offset_);
        int offset = a.offset_ + b.offset_;
        std::vector<Rational> d(static_cast<size_t>(order - offset + 1), Rational(0));
        for (int i = a.offset_; i <= a.order_; ++i) {
            if (a.coeff(i) == 0) continue;
            for (int j = b.offset_; j <= b.order_ && i + j <= order; ++j) {
                if (b.coeff(j) == 0) continue;
                d[static_cast<size_t>(i + j - offset)] += a.coeff(i) * b.coeff(j);
            }
        }
        return Series(a.var_, offset, order, std::move(d));
    }

    friend Series operator*(const Series& a, const Rational& s) {
        std::vector<Rational> d(a.c_.size());
        for (size_t i = 0; i < a.c_.size(); ++i) d[i] = a.c_[i] * s;
        return Series(a.var_, a.offset_, a.order_, std::move(d));
    }
    friend Series operator*(const Rational& s, const Series& a) { return a * s; }

    // multiplicative inverse; requires a nonzero retained coefficient
    Series inverse() const {
        int val = valuation();
        if (val > order_)
            throw std::domain_error("Series::inverse: no nonzero retained coefficient");
        // f = c q^v (1 + h); 1/f trusted through order - 2v
        int n = order_ - val;             // h known through degree n
        const Rational c0 = coeff(val);
        std::vector<Rational> h(static_cast<size_t>(n) + 1, Rational(0));
        for (int k = 0; k <= n; ++k) h[static_cast<size_t>(k)] = coeff(val + k) / c0;
        std::vector<Rational> g(static_cast<size_t>(n) + 1, Rational(0));
        g[0] = 1;
        for (int m = 1; m <= n; ++m) {
            Rational acc(0);
            for (int k = 1; k <= m; ++k) acc += h[static_cast<size_t>(k)] * g[static_cast<size_t>(m - k)];
            g[static_cast<size_t>(m)] = -acc;
        }
        for (auto& x : g) x = x / c0;
        return Series(var_, -val, order_ - 2 * val, std::move(g));
    }

    friend Series operator/(const Series& a, const Series& b) { return a * b.inverse(); }

    // f^alpha for f = 1 + O(q); solves f g' = alpha f' g coefficient-wise
    Series pow_fractional(const Rational& alpha) const {
        if (valuation() != 0 || coeff(0) != 1)
            throw std::domain_error("Series::pow_fractional: constant term must be 1");
        int n = order_;
        std::vector<Rational> g(static_cast<size_t>(n) + 1, Rational(0));
        g[0] = 1;
        for (int m = 1; m <= n; ++m) {
            Rational acc(0);
            for (int k = 1; k <= m; ++k)
                acc += (alpha * k - Rational(m - k)) * coeff(k) * g[static_cast<size_t>(m - k)];
            g[static_cast<size_t>(m)] = acc / m;
        }
        return Series(var_, 0, n, std::move(g));
    }

    Series pow_int(int e) const {
        if (e == 0) return one(var_, order_ - 0);
        if (e < 0) return inverse().pow_int(-e);
        Series acc = *this;
        for (int i = 1; i < e; ++i) acc = acc * (*this);
        return acc;
    }

    friend bool operator==(const Series& a, const Series& b) {
        if (a.var_ != b.var_ || a.order_ != b.order_) return false;
        int lo = std::min(a.offset_, b.offset_);
        for (int e = lo; e <= a.order_; ++e)
            if (a.coeff_raw(e) != b.coeff_raw(e)) return false;
        return true;
    }

private:
    static void check_var(const Series& a, const Series& b) {
        if (a.var_ != b.var_)
            throw std::invalid_argument("Series: mixed variables '" + a.var_ + "' and '" + b.var_ + "'");
    }
    const Rational& coeff_raw(int e) const {  // no order check; internal
        static const Rational zero(0);
        if (e < offset_ || e > order_) return zero;
        return c_[static_cast<size_t>(e - offset_)];
    }

    std::string var_;
    int offset_;
    int order_;
    std::vector<Rational> c_;
};

}  // namespace reglab
