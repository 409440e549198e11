#include "reglab/polynomial.hpp"
#include "reglab/rational_function.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace reglab;

namespace {

using QPoly = Poly<Rational>;

// deterministic generator for the property suites
struct Rng {
    std::mt19937 eng{20240809u};
    Rational rat(int lim = 20) {
        std::uniform_int_distribution<int> num(-lim, lim), den(1, lim);
        return make_rational(num(eng), den(eng));
    }
    QPoly poly(const std::string& var, int maxdeg = 5) {
        std::uniform_int_distribution<int> dg(0, maxdeg);
        int d = dg(eng);
        std::vector<Rational> c;
        for (int i = 0; i <= d; ++i) c.push_back(rat(9));
        return QPoly(var, std::move(c));
    }
};

QPoly qp(const std::string& var, std::vector<long> ints) {
    std::vector<Rational> c;
    for (long v : ints) c.emplace_back(v);
    return QPoly(var, std::move(c));
}

}  // namespace

TEST_CASE("rational basics") {
    CHECK(rational_str(make_rational(6, -4)) == "-3/2");
    CHECK(rational_str(make_rational(0, 7)) == "0");
    CHECK(parse_rational("-3/2") == make_rational(-3, 2));
    CHECK(parse_rational("17") == Rational(17));
    CHECK(rational_pow(make_rational(2, 3), -2) == make_rational(9, 4));
    CHECK(is_rational_square(Rational(576)));
    CHECK(is_rational_square(make_rational(4, 9)));
    CHECK(!is_rational_square(Rational(-4)));
    CHECK(!is_rational_square(make_rational(2, 1)));
}

TEST_CASE("ring axioms hold exactly on sampled inputs") {
    Rng rng;
    for (int it = 0; it < 60; ++it) {
        Rational a = rng.rat(), b = rng.rat(), c = rng.rat();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
    for (int it = 0; it < 25; ++it) {
        QPoly f = rng.poly("x"), g = rng.poly("x"), h = rng.poly("x");
        CHECK((f + g) + h == f + (g + h));
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * (g + h) == f * g + f * h);
        CHECK(f * g == g * f);
    }
}

TEST_CASE("polynomial division and gcd") {
    QPoly f = qp("x", {-1, 0, 1});  // x^2 - 1
    QPoly g = qp("x", {1, 1});      // x + 1
    auto [q, r] = divmod(f, g);
    CHECK(q == qp("x", {-1, 1}));
    CHECK(r.is_zero());
    CHECK(poly_gcd(f, g) == g.monic());
    CHECK(QPoly("x").degree() == -1);  // zero-polynomial sentinel
    CHECK_THROWS_AS(qp("x", {1, 2}) + qp("t", {1, 2}), std::invalid_argument);
}

TEST_CASE("extended_euclid examples") {
    // shared factor: f = x^2-1, g = x+1 -> d = x+1, A = 0, B = 1
    {
        auto [d, A, B] = extended_euclid(qp("x", {-1, 0, 1}), qp("x", {1, 1}));
        CHECK(d == qp("x", {1, 1}));
        CHECK(A.is_zero());
        CHECK(B == qp("x", {1}));
    }
    // unit gcd: f = x, g = 1 -> d = 1, A = 0, B = 1
    {
        auto [d, A, B] = extended_euclid(qp("x", {0, 1}), qp("x", {1}));
        CHECK(d == qp("x", {1}));
        CHECK(A.is_zero());
        CHECK(B == qp("x", {1}));
    }
    // catalog family (i) at t = 1/2: f = 4x^3 - 3x, g = f' = 12x^2 - 3
    {
        QPoly f = qp("x", {0, -3, 0, 4}), g = qp("x", {-3, 0, 12});
        auto [d, A, B] = extended_euclid(f, g);
        CHECK(d == qp("x", {1}));
        CHECK(A * f + B * g == d);
    }
}

TEST_CASE("extended_euclid Bezout identity on random inputs") {
    Rng rng;
    for (int it = 0; it < 40; ++it) {
        QPoly f = rng.poly("x", 6), g = rng.poly("x", 4);
        if (f.is_zero() && g.is_zero()) continue;
        auto [d, A, B] = extended_euclid(f, g);
        CHECK(A * f + B * g == d);  // also enforced internally
        if (!f.is_zero()) CHECK(divmod(f, d).second.is_zero());
        if (!g.is_zero()) CHECK(divmod(g, d).second.is_zero());
        CHECK(d.leading() == 1);
    }
}

TEST_CASE("rational function arithmetic and invariants") {
    RatFn r(qp("t", {0, 1}), qp("t", {0, 0, 2}));  // t / 2t^2 = (1/2)/t
    CHECK(r.den() == qp("t", {0, 1}));
    CHECK(r.num() == QPoly::constant("t", make_rational(1, 2)));
    RatFn s = r + r;
    CHECK(s == RatFn(qp("t", {1}), qp("t", {0, 1})));
    CHECK((r * RatFn(qp("t", {0, 1}))) == RatFn(make_rational(1, 2)));
    CHECK(r.derivative() == RatFn(qp("t", {-1}) * make_rational(1, 2), qp("t", {0, 0, 1})));
    CHECK(RatFn(qp("t", {0, 0, 3})).order_at(Rational(0)) == 2);
    CHECK(RatFn(qp("t", {1}), qp("t", {0, 1})).order_at(Rational(0)) == -1);
}

TEST_CASE("rational_residue examples") {
    // residue of (1/t) dt at 0 is 1
    CHECK(rational_residue(qp("t", {1}), qp("t", {0, 1}), Rational(0)) == 1);
    // double pole: error
    CHECK_THROWS_AS(rational_residue(qp("t", {1}), qp("t", {0, 0, 1}), Rational(0)),
                    std::domain_error);
    // not a pole: 0
    CHECK(rational_residue(qp("t", {1}), qp("t", {1, 1}), Rational(0)) == 0);
    // Delta = 110592 t^3 (1-t): residue of (Delta'/Delta) dt at t = 1 equals
    // ord_1 Delta = +1 (residues are coordinate-independent)
    QPoly Delta = Rational(110592) * qp("t", {0, 0, 0, 1, -1});
    CHECK(rational_residue(Delta.derivative(), Delta, Rational(1)) == 1);
    CHECK(rational_residue(Delta.derivative(), Delta, Rational(0)) == 3);
}

TEST_CASE("residue linearity and global sum") {
    Rng rng;
    // linearity in the numerator over a fixed denominator
    QPoly den = qp("t", {0, 1}) * qp("t", {-1, 1}) * qp("t", {-2, 1});
    for (int it = 0; it < 20; ++it) {
        QPoly n1 = rng.poly("t", 2), n2 = rng.poly("t", 2);
        Rational lam = rng.rat();
        for (long P : {0L, 1L, 2L}) {
            Rational r1 = rational_residue(n1, den, Rational(P));
            Rational r2 = rational_residue(n2, den, Rational(P));
            Rational r12 = rational_residue(n1 + lam * n2, den, Rational(P));
            CHECK(r12 == r1 + lam * r2);
        }
    }
    // a rational 1-form regular at infinity (deg num <= deg den - 2) has
    // residues summing to zero over all of its poles
    for (int it = 0; it < 20; ++it) {
        QPoly num = rng.poly("t", 1);
        Rational total(0);
        for (long P : {0L, 1L, 2L}) total += rational_residue(num, den, Rational(P));
        CHECK(total == 0);
    }
}

TEST_CASE("sturm root counting and odd multiplicity part") {
    QPoly p = qp("t", {0, -3, 0, 4});  // 4t^3 - 3t: roots 0, +-sqrt(3)/2
    CHECK(count_roots_open(p, make_rational(1, 100), Rational(1)) == 1);
    CHECK(count_roots_open(p, Rational(-1), Rational(1)) == 3);
    // (t^2-2)^2 (t-3): odd part t-3
    QPoly q = qp("t", {2, 0, -1}) * qp("t", {2, 0, -1}) * qp("t", {-3, 1});
    CHECK(odd_multiplicity_part(q) == qp("t", {-3, 1}));
    auto parts = squarefree_decomposition(q);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0] == qp("t", {-3, 1}));
    CHECK(parts[1] == qp("t", {-2, 0, 1}));
}
