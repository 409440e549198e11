#include "reglab/eisenstein.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace reglab;

TEST_CASE("E3a and E3b coefficients") {
    auto e3a = eisenstein_e3a(12).series;
    auto e3b = eisenstein_e3b(12).series;
    CHECK(e3a.coeff(0) == 1);
    CHECK(e3a.coeff(1) == -9);
    CHECK(e3a.coeff(2) == 27);   // -9 (chi(1) + 4 chi(2))
    CHECK(e3a.coeff(3) == -9);   // -9 (chi(1)*1 + chi(3)*9)
    CHECK(e3b.offset() == 1);
    CHECK(e3b.coeff(1) == 1);
    CHECK(e3b.coeff(2) == 3);
    CHECK(e3b.coeff(3) == 9);
    CHECK(e3b.coeff(4) == 13);
    CHECK_THROWS_AS(eisenstein_e3a(0), std::invalid_argument);
}

TEST_CASE("hauptmodul-style ratios") {
    int N = 8;
    auto e3a = eisenstein_e3a(N).series;
    auto e3b = eisenstein_e3b(N).series;
    Series den = e3a + Rational(27) * e3b;
    Series u = e3a * den.inverse();
    CHECK(u.coeff(0) == 1);
    CHECK(u.coeff(1) == -27);
    CHECK(u.coeff(2) == 405);
    Series v = e3b.shifted(-1) * den.inverse();
    CHECK(v.coeff(0) == 1);
    CHECK(v.coeff(1) == -15);
}

TEST_CASE("Theorem coefficient families: displayed low orders") {
    for (auto [j, l] : std::vector<std::pair<int, int>>{{1, 5}, {2, 5}, {4, 5}, {3, 7}, {1, 2}}) {
        auto fam = coefficient_family(j, l, 8);
        Rational x = make_rational(j, l);
        CHECK(fam.a[1] == 1);
        CHECK(fam.a[2] == Rational(3) - Rational(27) * x);
        CHECK(fam.a[3] == Rational(9) - make_rational(81, 2) * x + make_rational(729, 2) * x * x);
        CHECK(fam.b[0] == 1);
        CHECK(fam.b[1] == Rational(-9) - Rational(15) * x);
        CHECK(fam.b[2] == Rational(27) + make_rational(387, 2) * x + make_rational(225, 2) * x * x);
    }
    CHECK_THROWS_AS(coefficient_family(0, 5, 8), std::invalid_argument);
    CHECK_THROWS_AS(coefficient_family(5, 5, 8), std::invalid_argument);
}

TEST_CASE("coefficients depend only on j/l") {
    auto f1 = coefficient_family(1, 5, 16);
    auto f2 = coefficient_family(2, 10, 16);
    auto f3 = coefficient_family(3, 15, 16);
    for (int n = 1; n <= 16; ++n) {
        CHECK(f1.a[n] == f2.a[n]);
        CHECK(f1.a[n] == f3.a[n]);
    }
    for (int n = 0; n <= 16; ++n) {
        CHECK(f1.b[n] == f2.b[n]);
        CHECK(f1.b[n] == f3.b[n]);
    }
}

TEST_CASE("j/l -> 0 limit degenerates to the bare Eisenstein series") {
    auto fam = detail::coefficient_family_any(0, 5, 12);
    auto e3a = eisenstein_e3a(12).series;
    auto e3b = eisenstein_e3b(12).series;
    for (int n = 1; n <= 12; ++n) CHECK(fam.a[n] == e3b.coeff(n));
    for (int n = 0; n <= 12; ++n) CHECK(fam.b[n] == e3a.coeff(n));
}

TEST_CASE("exact coefficient identities on random (j,l) pairs") {
    std::mt19937 eng(5511u);
    std::uniform_int_distribution<int> lp(2, 23);
    int done = 0;
    while (done < 20) {
        int l = lp(eng);
        std::uniform_int_distribution<int> jp(1, l - 1);
        int j = jp(eng);
        auto fam = coefficient_family(j, l, 4);
        Rational x = make_rational(j, l);
        REQUIRE(fam.a[1] == 1);
        REQUIRE(fam.a[2] == Rational(3) - Rational(27) * x);
        REQUIRE(fam.a[3] == Rational(9) - make_rational(81, 2) * x + make_rational(729, 2) * x * x);
        REQUIRE(fam.b[0] == 1);
        REQUIRE(fam.b[1] == Rational(-9) - Rational(15) * x);
        REQUIRE(fam.b[2] == Rational(27) + make_rational(387, 2) * x + make_rational(225, 2) * x * x);
        ++done;
    }
}
