#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "weitz/derivation.hpp"
#include "weitz/kernel.hpp"
#include "weitz/ncpoly.hpp"
#include "weitz/sl2gens.hpp"

using namespace weitz;

TEST_CASE("generator construction") {
    std::vector<Sl2Generator> gens = sl2_generators(8);
    // counts 1, 1, 2, 5 at degrees 2, 4, 6, 8
    CHECK(gens.size() == 9);
    std::map<int, long> counts = sl2_generator_counts(gens);
    CHECK(counts.at(2) == 1);
    CHECK(counts.at(4) == 1);
    CHECK(counts.at(6) == 2);
    CHECK(counts.at(8) == 5);
    NCPoly x = NCPoly::var(2, 0), y = NCPoly::var(2, 1);
    NCPoly w1 = commutator(x, y);
    CHECK(gens[0].poly == w1);
    CHECK(gens[1].poly == x * w1 * y - y * w1 * x);
    for (const auto& g : gens) {
        CHECK(g.degree >= 2);
        // every generator has balanced bidegree (n, n)
        auto md = g.poly.multidegree();
        REQUIRE(md.has_value());
        CHECK((*md)[0] == (*md)[1]);
        CHECK((*md)[0] + (*md)[1] == g.degree);
    }
}

TEST_CASE("generators are constants and highest weight vectors") {
    LinearDerivation d = LinearDerivation::basic(2);
    for (const auto& g : sl2_generators(8)) {
        CHECK(is_constant(d, g.poly));
        CHECK(highest_weight_test(g.poly));
    }
}

TEST_CASE("each generator wraps a product of earlier ones") {
    std::vector<Sl2Generator> gens = sl2_generators(8);
    NCPoly x = NCPoly::var(2, 0), y = NCPoly::var(2, 1);
    for (const auto& g : gens) {
        if (g.factors.empty()) continue;
        NCPoly omega = NCPoly::unit(2);
        int fdeg = 0;
        for (int id : g.factors) {
            omega = omega * gens[static_cast<std::size_t>(id - 1)].poly;
            fdeg += gens[static_cast<std::size_t>(id - 1)].degree;
        }
        CHECK(fdeg == g.degree - 2);
        CHECK(g.poly == x * omega * y - y * omega * x);
    }
}

TEST_CASE("dyck words") {
    CHECK(is_dyck({0, 1}));
    CHECK(is_dyck({0, 0, 1, 1}));
    CHECK(is_dyck({0, 1, 0, 1}));
    CHECK_FALSE(is_dyck({1, 0}));
    CHECK_FALSE(is_dyck({0, 1, 1, 0}));
    CHECK_FALSE(is_dyck({0, 0, 1}));
    std::vector<Word> d2 = dyck_words(2);
    CHECK(d2 == std::vector<Word>{{0, 0, 1, 1}, {0, 1, 0, 1}});
    CHECK(dyck_words(3).size() == 5);
    CHECK(dyck_words(5).size() == 42);
}

TEST_CASE("minimal monomials of products are dyck words") {
    std::vector<Sl2Generator> gens = sl2_generators(6);
    NCPoly w1 = gens[0].poly, w2 = gens[1].poly;
    CHECK(minimal_monomial(w2) == Word{0, 0, 1, 1});
    CHECK(minimal_monomial(w1 * w2 * w2) == Word{0, 1, 0, 0, 1, 1, 0, 0, 1, 1});
    for (int d = 2; d <= 6; d += 2) {
        std::vector<NCPoly> prods = sl2_products(gens, d);
        std::set<Word> mins;
        for (const auto& p : prods) {
            Word w = minimal_monomial(p);
            CHECK(is_dyck(w));
            mins.insert(w);
        }
        CHECK(mins.size() == prods.size());
        std::vector<Word> dy = dyck_words(d / 2);
        CHECK(std::set<Word>(dy.begin(), dy.end()) == mins);
    }
}

TEST_CASE("products span the balanced kernel layers") {
    std::vector<Sl2Generator> gens = sl2_generators(8);
    AlgebraContext f2 = AlgebraContext::free_assoc(2);
    LinearDerivation d = LinearDerivation::basic(2);
    for (int n = 1; n <= 4; ++n) {
        std::vector<NCPoly> prods = sl2_products(gens, 2 * n);
        std::vector<CtxElem> kern = kernel_at(f2, d, {n, n});
        CHECK(prods.size() == kern.size());
        CHECK(span_rank(prods) == static_cast<long>(prods.size()));
        std::vector<NCPoly> united = prods;
        for (const auto& e : kern) united.push_back(nc_from_ctx(e, 2));
        CHECK(span_rank(united) == static_cast<long>(prods.size()));
    }
}

TEST_CASE("product tuples are ordered and complete") {
    std::vector<Sl2Generator> gens = sl2_generators(6);
    auto tuples = sl2_product_tuples(gens, 6);
    CHECK(tuples.size() == 5);
    for (const auto& t : tuples) {
        int deg = 0;
        for (int id : t) {
            CHECK(id >= 1);
            deg += gens[static_cast<std::size_t>(id - 1)].degree;
        }
        CHECK(deg == 6);
    }
}
