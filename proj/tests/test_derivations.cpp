#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "weitz/cpoly.hpp"
#include "weitz/derivation.hpp"
#include "weitz/ncpoly.hpp"
#include "weitz/weitzcomm.hpp"

using namespace weitz;

TEST_CASE("basic derivation and jordan recovery") {
    LinearDerivation d = LinearDerivation::basic(3);
    CHECK(d.m() == 3);
    CHECK(d.matrix()[0][1] == 1);
    CHECK(d.matrix()[1][2] == 1);
    CHECK(d.matrix()[0][0] == 0);
    auto jt = d.jordan();
    REQUIRE(jt.has_value());
    CHECK(jt->blocks == std::vector<int>{3});
    LinearDerivation d2 = LinearDerivation::from_jordan(JordanType::parse("3,2"));
    CHECK(d2.m() == 5);
    auto jt2 = d2.jordan();
    REQUIRE(jt2.has_value());
    CHECK(jt2->blocks == std::vector<int>{3, 2});
    CHECK(JordanType::parse("2,2") == JordanType{{2, 2}});
    CHECK_THROWS_AS(JordanType::parse("2,3"), std::invalid_argument);
}

TEST_CASE("from_matrix rejects non-nilpotent input") {
    std::vector<std::vector<Rat>> id = {{1, 0}, {0, 1}};
    CHECK_THROWS_AS(LinearDerivation::from_matrix(id), std::invalid_argument);
    std::vector<std::vector<Rat>> nil = {{0, Rat(5)}, {0, 0}};
    CHECK(LinearDerivation::from_matrix(nil).m() == 2);
}

TEST_CASE("leibniz rule") {
    LinearDerivation d = LinearDerivation::basic(2);
    NCPoly x = NCPoly::var(2, 0), y = NCPoly::var(2, 1);
    NCPoly f = x * y - Rat(2) * (y * y), g = y * x * y + x;
    CHECK(apply(d, f * g) == apply(d, f) * g + f * apply(d, g));
    CHECK(apply(d, x).is_zero());
    CHECK(apply(d, y) == x);
    CPoly cx = CPoly::var(2, 0), cy = CPoly::var(2, 1);
    CPoly cf = cx * cy + cy.pow(3), cg = cx - cy.pow(2);
    CHECK(apply(d, cf * cg) == apply(d, cf) * cg + cf * apply(d, cg));
}

TEST_CASE("matrix exponential") {
    LinearDerivation d = LinearDerivation::basic(3);
    auto e = exp_matrix(d);
    CHECK(e[0][0] == 1);
    CHECK(e[0][1] == 1);
    CHECK(e[0][2] == Rat(1, 2));
    CHECK(e[1][2] == 1);
    CHECK(e[2][0] == 0);
}

TEST_CASE("linear exponentials act as automorphisms") {
    LinearDerivation d = LinearDerivation::basic(2);
    CEndo ec = exp_linear_c(d);
    CPoly cx = CPoly::var(2, 0), cy = CPoly::var(2, 1);
    CHECK(ec.images[0] == cx);
    CHECK(ec.images[1] == cx + cy);
    CHECK(ec(cx * cy) == ec(cx) * ec(cy));
    NCEndo en = exp_linear_nc(d);
    NCPoly x = NCPoly::var(2, 0), y = NCPoly::var(2, 1);
    CHECK(en.images[1] == x + y);
    CHECK(en(commutator(x, y)) == commutator(x, y));
}

TEST_CASE("polynomial derivation exponential") {
    // delta(x) = 0, delta(y) = x^2 exponentiates to y -> y + x^2
    CPoly cx = CPoly::var(2, 0), cy = CPoly::var(2, 1);
    CDerivation d{{CPoly::zero(2), cx.pow(2)}};
    CEndo e = exp_poly(d);
    CHECK(e.images[0] == cx);
    CHECK(e.images[1] == cy + cx.pow(2));
}

TEST_CASE("log inverts exp for triangular derivations") {
    for (const auto& jt : {JordanType{{3}}, JordanType{{2, 2}}, JordanType{{3, 2}}}) {
        LinearDerivation d = LinearDerivation::from_jordan(jt);
        CDerivation lg = log_endo(exp_linear_c(d));
        for (int j = 0; j < d.m(); ++j) {
            CPoly expect(d.m());
            for (int i = 0; i < d.m(); ++i)
                expect += d.matrix()[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                          CPoly::var(d.m(), i);
            CHECK(lg.images[static_cast<std::size_t>(j)] == expect);
        }
    }
}

TEST_CASE("scaled exponential and the classical automorphism") {
    CPoly x = CPoly::var(3, 0), y = CPoly::var(3, 1), z = CPoly::var(3, 2);
    CPoly w = nagata_w();
    CHECK(w == x * z + y.pow(2));
    LinearDerivation lin = nagata_linear();
    CHECK(apply(lin, w).is_zero());
    CEndo nu = nagata_automorphism();
    CHECK(nu.images[0] == x - Rat(2) * (w * y) - w.pow(2) * z);
    CHECK(nu.images[1] == y + w * z);
    CHECK(nu.images[2] == z);
    // the automorphism is multiplicative and fixes the scaling constant
    CHECK(nu(w) == w);
    CHECK(nu(x * y) == nu(x) * nu(y));
    // log recovers the scaled derivation even without a triangular certificate
    CDerivation lg = log_endo(nu);
    CHECK(lg.images == nagata_delta().images);
    CHECK(lg.images == scaled_derivation(w, lin).images);
}

TEST_CASE("scaled exponential requires a constant scale") {
    LinearDerivation d = LinearDerivation::basic(2);
    CPoly cy = CPoly::var(2, 1);
    CHECK_THROWS_AS(exp_scaled(cy, d), std::invalid_argument);
}

TEST_CASE("log refuses a non-unipotent endomorphism") {
    CPoly cx = CPoly::var(2, 0), cy = CPoly::var(2, 1);
    CEndo bad{{cx + cx.pow(2), cy}};
    CHECK_THROWS_AS(log_endo(bad), NotLocallyNilpotent);
    CEndo scale{{Rat(2) * cx, cy}};
    CHECK_THROWS_AS(log_endo(scale), NotLocallyNilpotent);
    // The difference x*y - y*x vanishes under abelianization but its chain
    // (ad x)^k [x,y] never terminates; the shape test must not certify it
    // and the work budget must refuse it promptly.
    NCPoly nx = NCPoly::var(2, 0), ny = NCPoly::var(2, 1);
    NCEndo comm_shift{{nx, ny + commutator(nx, ny)}};
    CHECK_THROWS_AS(log_endo(comm_shift), NotLocallyNilpotent);
}

TEST_CASE("fixed points") {
    CEndo nu = nagata_automorphism();
    CPoly x = CPoly::var(3, 0), z = CPoly::var(3, 2);
    CHECK(fixed_point_check(nu, nagata_w()));
    CHECK(fixed_point_check(nu, z));
    CHECK_FALSE(fixed_point_check(nu, x));
    NCEndo en = exp_linear_nc(LinearDerivation::basic(2));
    NCPoly nx = NCPoly::var(2, 0), ny = NCPoly::var(2, 1);
    CHECK(fixed_point_check(en, commutator(nx, ny)));
    CHECK_FALSE(fixed_point_check(en, ny));
}
