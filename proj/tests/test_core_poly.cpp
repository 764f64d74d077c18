#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "weitz/cpoly.hpp"
#include "weitz/io.hpp"
#include "weitz/ncpoly.hpp"
#include "weitz/rational.hpp"

using namespace weitz;

TEST_CASE("word arithmetic and ring axioms") {
    NCPoly x = NCPoly::var(2, 0), y = NCPoly::var(2, 1);
    CHECK(x * y != y * x);
    NCPoly f = x * y - Rat(3) * (y * x), g = x + y * y, h = y - x * x;
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);
    CHECK((g + h) * f == g * f + h * f);
    CHECK(f + NCPoly::zero(2) == f);
    CHECK(f * NCPoly::unit(2) == f);
    CHECK(f - f == NCPoly::zero(2));
    CHECK((f - f).is_zero());
}

TEST_CASE("left normed commutator") {
    NCPoly x = NCPoly::var(2, 0), y = NCPoly::var(2, 1);
    // [x,y,y] = xy^2 - 2yxy + y^2x
    NCPoly expected = NCPoly::term(2, {0, 1, 1}, 1) + NCPoly::term(2, {1, 0, 1}, -2) +
                      NCPoly::term(2, {1, 1, 0}, 1);
    CHECK(left_normed_commutator({x, y, y}) == expected);
    CHECK(commutator(x, y) == NCPoly::term(2, {0, 1}, 1) + NCPoly::term(2, {1, 0}, -1));
    CHECK(left_normed_commutator({x, y, y}) == commutator(commutator(x, y), y));
}

TEST_CASE("multidegree and components") {
    NCPoly x = NCPoly::var(2, 0), y = NCPoly::var(2, 1);
    CHECK(word_multidegree({0, 1, 0, 1, 1}, 2) == std::vector<int>{2, 3});
    NCPoly f = x * y * x + y * y + x * x * x - Rat(2) * (x * y);
    CHECK(f.component({2, 1}) == x * y * x);
    CHECK(f.component({0, 2}) == y * y);
    CHECK(f.homogeneous_component(2) == y * y - Rat(2) * (x * y));
    CHECK(f.homogeneous_component(3) == x * y * x + x * x * x);
    CHECK(f.homogeneous_component(5).is_zero());
}

TEST_CASE("substitution is a homomorphism") {
    NCPoly x = NCPoly::var(2, 0), y = NCPoly::var(2, 1);
    NCPoly f = x * y - y * x, g = x * x + y;
    std::vector<NCPoly> images = {x * y, y - x * x};
    CHECK((f * g).substitute(images) == f.substitute(images) * g.substitute(images));
    CHECK((f + g).substitute(images) == f.substitute(images) + g.substitute(images));
    // substitution may change arity
    std::vector<NCPoly> into3 = {NCPoly::var(3, 2), NCPoly::var(3, 0) * NCPoly::var(3, 1)};
    CHECK(f.substitute(into3).arity() == 3);
}

TEST_CASE("commutative polynomials") {
    CPoly x = CPoly::var(3, 0), y = CPoly::var(3, 1), z = CPoly::var(3, 2);
    CHECK(x * y == y * x);
    CHECK((x + y).pow(2) == x * x + Rat(2) * (x * y) + y * y);
    CHECK((x * y * y).partial(1) == Rat(2) * (x * y));
    CHECK((x * y * y).partial(2).is_zero());
    std::vector<int> ones = {1, 1, 1};
    long deg = 0;
    CHECK((x * y * z).is_homogeneous(ones, &deg));
    CHECK(deg == 3);
    CHECK_FALSE((x + x * y).is_homogeneous(ones));
    CHECK((x.pow(2) - y.pow(2)).divide_exact(x - y) == x + y);
    CHECK_FALSE((x.pow(2) - y.pow(2) + z).divide_exact(x - y).has_value());
    std::vector<Rat> pt = {Rat(2), Rat(1, 2), Rat(-1)};
    CHECK((x * y + z.pow(2)).eval(pt) == Rat(2));
}

TEST_CASE("binomials and factorials") {
    CHECK(factorial_z(5) == 120);
    CHECK(binomial_z(10, 5) == 252);
    CHECK(binomial_z(4, 0) == 1);
    CHECK(catalan_z(6) == 132);
    CHECK(rat_binomial(5, 2) == Rat(10));
}

TEST_CASE("text round trips") {
    std::vector<std::string> n2 = default_names(2);
    std::vector<std::string> n5 = default_names(5);
    CHECK(n2 == std::vector<std::string>{"x", "y"});
    CHECK(n5[0] == "x1");
    CHECK(n5[4] == "x5");
    NCPoly x = NCPoly::var(2, 0), y = NCPoly::var(2, 1);
    NCPoly f = Rat(3, 2) * (x * y * x) - y * y + NCPoly::unit(2);
    CHECK(parse_nc(render(f, n2), n2) == f);
    CHECK(parse_nc("3/2*x*y*x - y^2 + 1", n2) == f);
    CHECK(parse_nc("(x + y)*(x - y)", n2) == (x + y) * (x - y));
    CPoly cx = CPoly::var(2, 0), cy = CPoly::var(2, 1);
    CPoly g = cx.pow(3) - Rat(1, 2) * (cx * cy) + CPoly::constant(2, Rat(7));
    CHECK(parse_c(render(g, n2), n2) == g);
    CHECK(parse_c("x^3 - 1/2*x*y + 7", n2) == g);
}

TEST_CASE("json round trips") {
    std::vector<std::string> n2 = default_names(2);
    NCPoly x = NCPoly::var(2, 0), y = NCPoly::var(2, 1);
    NCPoly f = Rat(3, 2) * (x * y) - y * x * x;
    auto j = to_json(f, n2);
    CHECK(j["vars"].size() == 2);
    CHECK(nc_from_json(j) == f);
    CPoly cf = CPoly::var(2, 0).pow(2) - Rat(5, 3) * CPoly::var(2, 1);
    CHECK(c_from_json(to_json(cf, n2)) == cf);
}

TEST_CASE("rendered combinations") {
    std::string s = render_combination({{"a", Rat(1)}, {"b", Rat(-2)}, {"c", Rat(1, 3)}});
    CHECK(s == "a - 2*b + 1/3*c");
}
