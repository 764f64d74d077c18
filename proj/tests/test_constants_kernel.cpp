#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>

#include "weitz/context.hpp"
#include "weitz/derivation.hpp"
#include "weitz/kernel.hpp"
#include "weitz/ncpoly.hpp"
#include "weitz/rational.hpp"

using namespace weitz;

TEST_CASE("free kernel dimensions by degree") {
    AlgebraContext f2 = AlgebraContext::free_assoc(2);
    LinearDerivation d = LinearDerivation::basic(2);
    std::vector<long> want = {1, 2, 3, 6, 10, 20};
    for (int n = 1; n <= 6; ++n)
        CHECK(static_cast<long>(kernel_layer(f2, d, n).size()) == want[static_cast<std::size_t>(n - 1)]);
}

TEST_CASE("free kernel dimensions by bidegree") {
    AlgebraContext f2 = AlgebraContext::free_assoc(2);
    LinearDerivation d = LinearDerivation::basic(2);
    auto dim = [&](int a, int b) {
        return static_cast<long>(kernel_at(f2, d, {a, b}).size());
    };
    CHECK(dim(1, 0) == 1);
    CHECK(dim(0, 1) == 0);
    CHECK(dim(1, 1) == 1);
    CHECK(dim(2, 1) == 2);
    CHECK(dim(2, 2) == 2);
    CHECK(dim(3, 1) == 3);
    CHECK(dim(3, 2) == 5);
    CHECK(dim(3, 3) == 5);
    CHECK(dim(1, 2) == 0);
}

TEST_CASE("kernel elements are constants and closed under products") {
    AlgebraContext f2 = AlgebraContext::free_assoc(2);
    LinearDerivation d = LinearDerivation::basic(2);
    std::vector<CtxElem> k21 = kernel_at(f2, d, {2, 1});
    std::vector<CtxElem> k11 = kernel_at(f2, d, {1, 1});
    for (const auto& e : k21) CHECK(is_constant(f2, d, e));
    NCPoly a = nc_from_ctx(k21[0], 2), b = nc_from_ctx(k11[0], 2);
    CHECK(is_constant(d, a * b));
    CHECK(is_constant(d, b * a));
}

TEST_CASE("highest weight test") {
    NCPoly x = NCPoly::var(2, 0), y = NCPoly::var(2, 1);
    NCPoly w1 = commutator(x, y);
    NCPoly w2 = x * w1 * y - y * w1 * x;
    CHECK(highest_weight_test(x));
    CHECK(highest_weight_test(w1));
    CHECK(highest_weight_test(w2));
    CHECK(highest_weight_test(x * x));
    CHECK_FALSE(highest_weight_test(y));
    CHECK_FALSE(highest_weight_test(x * y));
    CHECK_FALSE(highest_weight_test(x + y));
}

TEST_CASE("partial linearization") {
    NCPoly x = NCPoly::var(2, 0);
    // linearizing one x in x^2 gives x z + z x with z the fresh last variable
    NCPoly lin = partial_linearization(x * x, 0);
    NCPoly x3 = NCPoly::var(3, 0), z3 = NCPoly::var(3, 2);
    CHECK(lin == x3 * z3 + z3 * x3);
    // degree-zero variables linearize to zero
    CHECK(partial_linearization(x * x, 1).is_zero());
}

TEST_CASE("span rank") {
    NCPoly x = NCPoly::var(2, 0), y = NCPoly::var(2, 1);
    std::vector<NCPoly> dep = {x * y, y * x, x * y - y * x};
    CHECK(span_rank(dep) == 2);
    std::vector<NCPoly> ind = {x * y, y * x, x * x};
    CHECK(span_rank(ind) == 3);
    std::vector<CPoly> cs = {CPoly::var(2, 0), Rat(2) * CPoly::var(2, 0)};
    CHECK(span_rank(cs) == 1);
}

TEST_CASE("lifting onto quotients") {
    LinearDerivation d = LinearDerivation::basic(2);
    LiftingReport r = lifting_check(d, AlgebraContext::metabelian2(), {2, 2});
    CHECK(r.free_dim == 2);
    CHECK(r.quotient_dim == 1);
    CHECK(r.surjective);
    LiftingReport g = lifting_check(d, AlgebraContext::grassmann_l2(2), {3, 1});
    CHECK(g.surjective);
}

TEST_CASE("left-right bracket operator") {
    LinearDerivation d = LinearDerivation::basic(2);
    NCPoly x = NCPoly::var(2, 0), y = NCPoly::var(2, 1);
    NCPoly c = commutator(x, y);
    // one application of e -> xey - yex sends [x,y] to the degree-4 generator
    CHECK(lr_operator(c, 1) == x * c * y - y * c * x);
    CHECK(is_constant(d, lr_operator(c, 3)));
    AlgebraContext mb = AlgebraContext::metabelian2();
    CHECK(lr_operator(mb, mb.reduce(c), 2) == mb.reduce(lr_operator(c, 2)));
}

TEST_CASE("kernel equals the fixed space of the exponential") {
    AlgebraContext f2 = AlgebraContext::free_assoc(2);
    LinearDerivation d = LinearDerivation::basic(2);
    NCEndo e = exp_linear_nc(d);
    for (const auto& md : std::vector<std::vector<int>>{{2, 1}, {2, 2}, {3, 2}, {3, 3}}) {
        std::vector<CtxElem> kern = kernel_at(f2, d, md);
        for (const auto& k : kern) CHECK(fixed_point_check(e, nc_from_ctx(k, 2)));
        // the displaced images e(b) - b span a complement of the same codimension
        std::vector<NCPoly> displaced;
        for (const auto& b : f2.basis(md)) {
            NCPoly w = NCPoly::term(2, b.e, 1);
            displaced.push_back(w.substitute(e.images) - w);
        }
        long moved = span_rank(displaced);
        CHECK(static_cast<long>(f2.basis(md).size()) - moved ==
              static_cast<long>(kern.size()));
    }
}

TEST_CASE("layer cap refusal") {
    AlgebraContext f2 = AlgebraContext::free_assoc(2);
    LinearDerivation d = LinearDerivation::basic(2);
    setenv("WEITZ_MAX_LAYER", "4", 1);
    CHECK_THROWS_AS(kernel_layer(f2, d, 5), LayerCapExceeded);
    unsetenv("WEITZ_MAX_LAYER");
    CHECK(kernel_layer(f2, d, 5).size() == 10);
}

TEST_CASE("quotient kernels") {
    LinearDerivation d = LinearDerivation::basic(2);
    AlgebraContext mb = AlgebraContext::metabelian2();
    // bidegree (2,2): one bracket constant survives in the quotient
    std::vector<CtxElem> k = kernel_at(mb, d, {2, 2});
    REQUIRE(k.size() == 1);
    CHECK(is_constant(mb, d, k[0]));
    AlgebraContext tc = AlgebraContext::trace2x2();
    std::vector<CtxElem> kt = kernel_at(tc, d, {2, 2});
    CHECK(kt.size() == 3);
}
