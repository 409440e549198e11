#include "reglab/weierstrass.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace reglab;

namespace {

QPolyT qp(std::vector<long> ints) {
    std::vector<Rational> c;
    for (long v : ints) c.emplace_back(v);
    return QPolyT("t", std::move(c));
}

RatFn rf(std::vector<long> num, std::vector<long> den) { return RatFn(qp(num), qp(den)); }

struct NamedFamily {
    const char* name;
    QPolyT g2, g3;
};

std::vector<NamedFamily> catalog_families() {
    return {
        {"i", qp({3}), qp({1, -2})},
        {"ii", qp({12, -9}), qp({8, -9})},
        {"iii", qp({27, -24}), qp({-27, 36, -8})},
        {"iv", Rational(3) * qp({16, -16, 1}), qp({-2, 1}) * qp({-32, 32, 1})},
        {"v", Rational(12) * qp({1, -1, 1}), Rational(4) * qp({-2, 1}) * qp({1, 1}) * qp({-1, 2})},
        {"s54", Rational(12) * qp({9, -8}), Rational(-8) * qp({27, -36, 8})},
    };
}

}  // namespace

TEST_CASE("Lemma 6.1 basis satisfies the cocycle condition") {
    // construction throws if any cocycle condition fails
    for (auto& fam : catalog_families()) {
        auto F = weierstrass_family(fam.g2, fam.g3);
        auto basis = F.basis();
        REQUIRE(basis.size() == 2);
        for (auto& b : basis) CHECK(F.is_cocycle(b));
    }
    // genus 2, odd and even degree models
    XPoly f5("x", {RatFn(1), RatFn(qp({0, 1})), RatFn(0), RatFn(0), RatFn(0), RatFn(2)});
    auto F5 = HyperellipticFamily(f5, 2);
    CHECK(F5.basis().size() == 4);
    XPoly f6("x", {RatFn(1), RatFn(qp({0, 1})), RatFn(0), RatFn(0), RatFn(0), RatFn(2), RatFn(1)});
    auto F6 = HyperellipticFamily(f6, 2);
    CHECK(F6.basis().size() == 4);
}

TEST_CASE("Weierstrass omega^* matches the (6.13) chart forms") {
    QPolyT g2 = qp({0, -1, 3}), g3 = qp({5, 1});  // arbitrary nondegenerate
    auto F = weierstrass_family(g2, g3);
    auto b = F.basis();
    const auto& ws = b[1];
    // 0-chart form: 2x dx/y
    CHECK(ws.form0.P == Laurent::term(1, RatFn(2)));
    CHECK(ws.form0.Q.is_zero());
    // infinity-chart form: (g2 z + 2 g3 z^2) dz/(2u)
    Laurent expect = Laurent::term(1, RatFn(g2) * RatFn(make_rational(1, 2))) +
                     Laurent::term(2, RatFn(g3));
    CHECK(ws.formInf.P == expect);
}

TEST_CASE("lift data on y^2 = 4x^3 + 4t: A = 1/(4t), B = -x/(12t)") {
    XPoly f("x", {RatFn(qp({0, 4})), RatFn(0), RatFn(0), RatFn(4)});
    HyperellipticFamily fam(f, 1);
    RatFn quarter_t(qp({1}), qp({0, 4}));
    CHECK(fam.bezout_A() == XPoly::constant("x", quarter_t));
    CHECK(fam.bezout_B() == XPoly("x", {RatFn(0), RatFn(qp({-1}), qp({0, 12}))}));
}

TEST_CASE("gm_delta vanishes for a constant family") {
    XPoly f("x", {RatFn(-1), RatFn(0), RatFn(0), RatFn(1)});  // y^2 = x^3 - 1
    HyperellipticFamily fam(f, 1);
    for (auto& b : fam.basis()) {
        auto coords = reduce_to_basis(fam, gm_delta(fam, b));
        for (auto& c : coords) CHECK(c.is_zero());
    }
}

TEST_CASE("additive example (0, -4t): diagonal connection") {
    QPolyT g2 = qp({0}), g3 = qp({0, -4});
    auto F = weierstrass_family(g2, g3);
    auto M = connection_matrix(F);
    RatFn expect = rf({-1}, {0, 6});
    CHECK(M[0][0] == expect);
    CHECK(M[1][1] == -expect);
    CHECK(M[0][1].is_zero());
    CHECK(M[1][0].is_zero());
    auto W = weierstrass_connection(g2, g3);
    CHECK(W[0][0] == expect);
    CHECK(W[1][1] == -expect);
    CHECK(W[0][1].is_zero());
    CHECK(W[1][0].is_zero());
}

TEST_CASE("general algorithm reproduces Theorem 6.4 on the catalog") {
    for (auto& nf : catalog_families()) {
        INFO(nf.name);
        auto F = weierstrass_family(nf.g2, nf.g3);
        auto M = connection_matrix(F);
        auto W = weierstrass_connection(nf.g2, nf.g3);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) CHECK(M[static_cast<size_t>(i)][static_cast<size_t>(j)] == W[static_cast<size_t>(i)][static_cast<size_t>(j)]);
        // Weierstrass families have trace zero
        CHECK((M[0][0] + M[1][1]).is_zero());
    }
}

TEST_CASE("catalog family (i): nabla(omega) coefficient on omega^*") {
    auto W = weierstrass_connection(qp({3}), qp({1, -2}));
    CHECK(W[1][0] == rf({-1}, {0, 12, -12}));   // -1/(12t(1-t)) = -1/(12t-12t^2)
    CHECK(W[0][0] == rf({1, -2}, {0, -12, 12}));  // -Delta'/(12 Delta) = (1-2t)/(12t^2-12t)
}

TEST_CASE("Leibniz rule") {
    for (auto& nf : {catalog_families()[0], catalog_families()[4]}) {
        auto F = weierstrass_family(nf.g2, nf.g3);
        auto basis = F.basis();
        RatFn h(qp({1, 0, 3}), qp({2, 1}));  // (1+3t^2)/(t+2)
        for (size_t idx = 0; idx < basis.size(); ++idx) {
            auto scaled = basis[idx] * h;
            auto lhs = reduce_to_basis(F, gm_delta(F, scaled));
            auto base = reduce_to_basis(F, gm_delta(F, basis[idx]));
            for (size_t i = 0; i < lhs.size(); ++i) {
                RatFn expect = h * base[i] + (i == idx ? h.derivative() : RatFn(0));
                CHECK(lhs[i] == expect);
            }
        }
    }
}

TEST_CASE("reduce_to_basis: unit vectors and exact cocycles") {
    auto F = weierstrass_family(qp({3}), qp({1, -2}));
    auto basis = F.basis();
    for (size_t j = 0; j < basis.size(); ++j) {
        auto coords = reduce_to_basis(F, basis[j]);
        for (size_t i = 0; i < coords.size(); ++i)
            CHECK(coords[i] == (i == j ? RatFn(1) : RatFn(0)));
    }
    // coboundary of (x^2 y, 0): class is zero
    Laurent x2y = Laurent::term(2, RatFn(1));
    RelForm d0{Laurent::term(1, RatFn(2)) * Laurent(F.f()) +
                   Laurent::term(2, RatFn(make_rational(1, 2))) * Laurent(F.fx()),
               Laurent()};
    auto cob = F.make_cocycle(ChartFn{Laurent(), x2y}, d0, RelForm{});
    auto coords = reduce_to_basis(F, cob);
    for (auto& c : coords) CHECK(c.is_zero());
}

TEST_CASE("cohomology classes do not depend on the Bezout pair") {
    for (auto& nf : {catalog_families()[1], catalog_families()[5]}) {
        auto F = weierstrass_family(nf.g2, nf.g3);
        auto Fs1 = F.with_shifted_bezout(XPoly::constant("x", RatFn(1)));
        auto Fs2 = F.with_shifted_bezout(XPoly("x", {RatFn(0), RatFn(qp({0, 1}))}));  // s = t x
        auto basis = F.basis();
        for (auto& b : basis) {
            auto c0 = reduce_to_basis(F, gm_delta(F, b));
            auto c1 = reduce_to_basis(Fs1, gm_delta(Fs1, b));
            auto c2 = reduce_to_basis(Fs2, gm_delta(Fs2, b));
            for (size_t i = 0; i < c0.size(); ++i) {
                CHECK(c0[i] == c1[i]);
                CHECK(c0[i] == c2[i]);
            }
        }
    }
}

TEST_CASE("genus-2 family: Leibniz and basis reduction") {
    XPoly f("x", {RatFn(qp({1, 1})), RatFn(qp({0, 1})), RatFn(0), RatFn(0), RatFn(0), RatFn(1)});
    HyperellipticFamily F(f, 2);  // y^2 = x^5 + t x + (1+t)
    auto basis = F.basis();
    for (size_t j = 0; j < basis.size(); ++j) {
        auto coords = reduce_to_basis(F, basis[j]);
        for (size_t i = 0; i < coords.size(); ++i)
            CHECK(coords[i] == (i == j ? RatFn(1) : RatFn(0)));
    }
    RatFn h(qp({0, 1}));
    auto scaled = basis[0] * h;
    auto lhs = reduce_to_basis(F, gm_delta(F, scaled));
    auto base = reduce_to_basis(F, gm_delta(F, basis[0]));
    for (size_t i = 0; i < lhs.size(); ++i)
        CHECK(lhs[i] == h * base[i] + (i == 0 ? RatFn(1) : RatFn(0)));
}

TEST_CASE("reduction types and canonical extension") {
    // catalog (i) at t = 0: multiplicative(1)
    auto r1 = reduction_type(qp({3}), qp({1, -2}), Rational(0));
    CHECK(r1.kind == ReductionKind::multiplicative);
    CHECK(r1.n == 1);
    // (0, -4t) at 0: additive
    auto r2 = reduction_type(qp({0}), qp({0, -4}), Rational(0));
    CHECK(r2.kind == ReductionKind::additive);
    // smooth elsewhere
    CHECK(reduction_type(qp({3}), qp({1, -2}), make_rational(1, 2)).kind == ReductionKind::smooth);
    // non-minimal input rejected
    QPolyT t4 = qp({0, 0, 0, 0, 1}), t6 = qp({0, 0, 0, 0, 0, 0, 1});
    CHECK_THROWS_AS(reduction_type(t4 * Rational(3), t6, Rational(0)), std::invalid_argument);
    // canonical basis scaling
    CHECK(canonical_extension_basis(qp({3}), qp({1, -2}), Rational(0)).first == qp({1}));
    CHECK(canonical_extension_basis(qp({0}), qp({0, -4}), Rational(0)).first == qp({0, 1}));
}

TEST_CASE("residue matrices: nilpotent at multiplicative, [0,1) at additive") {
    // catalog (i) at t = 0 in basis {omega, omega^*}
    auto W = weierstrass_connection(qp({3}), qp({1, -2}));
    auto scal = canonical_extension_basis(qp({3}), qp({1, -2}), Rational(0));
    auto R = residue_matrix(W, scal, Rational(0));
    CHECK(is_nilpotent2(R));
    CHECK(R[0][0] == make_rational(-1, 12));
    CHECK(R[0][1] == make_rational(1, 12));
    CHECK(R[1][0] == make_rational(-1, 12));
    CHECK(R[1][1] == make_rational(1, 12));
    CHECK(eigenvalue_real_parts_in_unit_interval(R));
    // additive (0,-4t) at 0 in basis {t omega, omega^*}: eigenvalues 5/6, 1/6
    auto W2 = weierstrass_connection(qp({0}), qp({0, -4}));
    auto scal2 = canonical_extension_basis(qp({0}), qp({0, -4}), Rational(0));
    auto R2 = residue_matrix(W2, scal2, Rational(0));
    CHECK(R2[0][0] == make_rational(5, 6));
    CHECK(R2[1][1] == make_rational(1, 6));
    CHECK(eigenvalue_real_parts_in_unit_interval(R2));
    // unscaled additive basis violates the eigenvalue window
    auto R3 = residue_matrix(W2, {qp({1}), qp({1})}, Rational(0));
    CHECK(!eigenvalue_real_parts_in_unit_interval(R3));
    // smooth point: zero residue
    auto R4 = residue_matrix(W, scal, make_rational(1, 3));
    CHECK(R4[0][0] == 0);
    CHECK(R4[0][1] == 0);
    CHECK(R4[1][0] == 0);
    CHECK(R4[1][1] == 0);
}
