#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "weitz/context.hpp"
#include "weitz/derivation.hpp"
#include "weitz/ncpoly.hpp"
#include "weitz/series.hpp"

using namespace weitz;

namespace {

std::vector<NCPoly> short_words(int maxlen) {
    std::vector<Word> ws = {{}};
    std::vector<NCPoly> out;
    for (int len = 1; len <= maxlen; ++len) {
        std::vector<Word> next;
        for (const auto& w : ws)
            if (static_cast<int>(w.size()) == len - 1)
                for (int c = 0; c < 2; ++c) {
                    Word e = w;
                    e.push_back(c);
                    next.push_back(e);
                    out.push_back(NCPoly::term(2, e, 1));
                }
        ws.insert(ws.end(), next.begin(), next.end());
    }
    return out;
}

}  // namespace

TEST_CASE("metabelian normal form") {
    AlgebraContext mb = AlgebraContext::metabelian2();
    NCPoly x = NCPoly::var(2, 0), y = NCPoly::var(2, 1);
    NCPoly c = commutator(x, y);
    CtxElem e;
    e.add(BKey{0, false, {1, 1}}, 1);
    e.add(BKey{1, false, {0, 0, 0, 0}}, -1);
    CHECK(mb.reduce(y * x) == e);
    CHECK(mb.reduce(c * c).is_zero());
    CHECK(mb.reduce(c * x * c).is_zero());
    // bimodule action: left letters shift the first exponent pair, right the second
    CtxElem lx;
    lx.add(BKey{1, false, {1, 0, 0, 0}}, 1);
    CHECK(mb.reduce(x * c) == lx);
    CtxElem rx;
    rx.add(BKey{1, false, {0, 0, 1, 0}}, 1);
    CHECK(mb.reduce(c * x) == rx);
    for (const auto& f : short_words(3))
        for (const auto& g : short_words(3))
            CHECK(mb.reduce(f * g) == mb.mul(mb.reduce(f), mb.reduce(g)));
}

TEST_CASE("metabelian hilbert series") {
    AlgebraContext mb = AlgebraContext::metabelian2();
    TruncSeries2 h = hilbert_of_context(mb, 12);
    // dim at (i,j) is 1 for the monomial plus i*j bimodule elements
    CHECK(h.coefficient(2, 2) == 5);
    CHECK(h.coefficient(4, 0) == 1);
    CHECK(h.coefficient(3, 1) == 4);
    TruncSeries2 one = TruncSeries2::one(12);
    TruncSeries2 t1 = TruncSeries2::monomial(12, 1, 0), t2 = TruncSeries2::monomial(12, 0, 1);
    TruncSeries2 a = ((one - t1) * (one - t2)).inverse();
    CHECK(h == a + t1 * t2 * a * a);
}

TEST_CASE("grassmann type normal form") {
    AlgebraContext g2 = AlgebraContext::grassmann_l2(2);
    NCPoly x = NCPoly::var(2, 0), y = NCPoly::var(2, 1);
    NCPoly c = commutator(x, y);
    CtxElem e;
    e.add(BKey{0, false, {1, 1}}, 1);
    e.add(BKey{1, false, {0, 0}}, -1);
    CHECK(g2.reduce(y * x) == e);
    CHECK(g2.reduce(c * x) == g2.reduce(x * c));
    CHECK(g2.reduce(c * c).is_zero());
    for (const auto& f : short_words(3))
        for (const auto& g : short_words(3))
            CHECK(g2.reduce(f * g) == g2.mul(g2.reduce(f), g2.reduce(g)));
    TruncSeries2 h = hilbert_of_context(g2, 12);
    TruncSeries2 one = TruncSeries2::one(12);
    TruncSeries2 t1 = TruncSeries2::monomial(12, 1, 0), t2 = TruncSeries2::monomial(12, 0, 1);
    CHECK(h == (one + t1 * t2) * ((one - t1) * (one - t2)).inverse());
}

TEST_CASE("grassmann type rank 3") {
    AlgebraContext g3 = AlgebraContext::grassmann_l2(3);
    NCPoly x = NCPoly::var(3, 0), z = NCPoly::var(3, 2);
    NCPoly cxz = commutator(x, z);
    CHECK(g3.reduce(x * z) - g3.reduce(z * x) == g3.reduce(cxz));
    CHECK(g3.reduce(cxz * cxz).is_zero());
    // commutators are central
    CHECK(g3.reduce(cxz * z) == g3.reduce(z * cxz));
    // three pair tags at degree 2, plus six products of generators
    CHECK(g3.basis_layer(2).size() == 9);
}

TEST_CASE("wreath embedding") {
    AlgebraContext w2 = AlgebraContext::wreath(2);
    NCPoly x1 = NCPoly::var(2, 0), x2 = NCPoly::var(2, 1);
    // generator image splits into a polynomial part and a module part
    CtxElem g0 = w2.gen(0);
    CHECK(g0.c.size() == 2);
    CHECK(g0.c.count(BKey{0, false, {1, 0}}) == 1);
    CHECK(g0.c.count(BKey{1, false, {0, 0, 0, 0}}) == 1);
    // embedded commutator: a1 (v2 - u2) + a2 (u1 - v1)
    CtxElem c = w2.reduce(commutator(x1, x2));
    CtxElem expect;
    expect.add(BKey{1, false, {0, 0, 0, 1}}, 1);
    expect.add(BKey{1, false, {0, 1, 0, 0}}, -1);
    expect.add(BKey{2, false, {1, 0, 0, 0}}, 1);
    expect.add(BKey{2, false, {0, 0, 1, 0}}, -1);
    CHECK(c == expect);
    // the module squares to zero
    CtxElem m1;
    m1.add(BKey{1, false, {0, 0, 0, 0}}, 1);
    CHECK(w2.mul(m1, m1).is_zero());
    for (const auto& f : short_words(3))
        for (const auto& g : short_words(3))
            CHECK(w2.reduce(f * g) == w2.mul(w2.reduce(f), w2.reduce(g)));
}

TEST_CASE("derivations commute with reduction") {
    LinearDerivation d = LinearDerivation::basic(2);
    std::vector<AlgebraContext> ctxs;
    ctxs.push_back(AlgebraContext::metabelian2());
    ctxs.push_back(AlgebraContext::grassmann_l2(2));
    ctxs.push_back(AlgebraContext::wreath(2));
    ctxs.push_back(AlgebraContext::trace2x2());
    for (const auto& ctx : ctxs)
        for (const auto& f : short_words(4))
            CHECK(ctx.apply_linear(d, ctx.reduce(f)) == ctx.reduce(apply(d, f)));
}

TEST_CASE("trace context normal form") {
    AlgebraContext tc = AlgebraContext::trace2x2();
    NCPoly x = NCPoly::var(2, 0), y = NCPoly::var(2, 1);
    // x = p/2 + x0
    CtxElem gx = tc.reduce(x);
    CHECK(gx.c.size() == 2);
    CHECK(gx.c.at(BKey{0, false, {1, 0, 0, 0, 0}}) == Rat(1, 2));
    CHECK(gx.c.at(BKey{1, false, {0, 0, 0, 0, 0}}) == 1);
    // [x,y]^2 = t^2 - uv, a central element
    CtxElem csq = tc.reduce(commutator(x, y) * commutator(x, y));
    CHECK(csq.c.size() == 2);
    CHECK(csq.c.at(BKey{0, false, {0, 0, 0, 2, 0}}) == 1);
    CHECK(csq.c.at(BKey{0, false, {0, 0, 1, 0, 1}}) == -1);
    // multidegree bookkeeping: t carries bidegree (1,1)
    CHECK(tc.key_multidegree(BKey{0, false, {0, 0, 0, 1, 0}}) == std::vector<int>{1, 1});
    CHECK(tc.key_multidegree(BKey{3, false, {0, 0, 0, 0, 0}}) == std::vector<int>{1, 1});
}

TEST_CASE("weighted commutative context") {
    AlgebraContext c = AlgebraContext::commutative_weighted(2, {1, 2}, {"s", "w"});
    CHECK(c.weights() == std::vector<int>{1, 2});
    // layer 2: s^2 and w
    CHECK(c.basis_layer(2).size() == 2);
    CHECK(c.basis_layer(3).size() == 2);
}

TEST_CASE("free context round trip") {
    AlgebraContext f2 = AlgebraContext::free_assoc(2);
    NCPoly x = NCPoly::var(2, 0), y = NCPoly::var(2, 1);
    NCPoly f = x * y * x - Rat(3) * (y * y);
    CHECK(f2.reduce(f * f) == f2.mul(f2.reduce(f), f2.reduce(f)));
    CHECK(f2.basis_layer(3).size() == 8);
    CHECK(f2.basis({2, 1}).size() == 3);
}
