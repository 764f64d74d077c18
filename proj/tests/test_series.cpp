#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "weitz/context.hpp"
#include "weitz/rational.hpp"
#include "weitz/series.hpp"

using namespace weitz;

namespace {

TruncSeries2 one(int n) { return TruncSeries2::one(n); }
TruncSeries2 t1(int n) { return TruncSeries2::monomial(n, 1, 0); }
TruncSeries2 t2(int n) { return TruncSeries2::monomial(n, 0, 1); }

}  // namespace

TEST_CASE("truncated series arithmetic") {
    const int N = 8;
    TruncSeries2 a = one(N) + t1(N), b = one(N) - t1(N);
    CHECK(a * b == one(N) - t1(N) * t1(N));
    CHECK(a + b == Rat(2) * one(N));
    CHECK((a - a).coeffs().empty());
    // inverse: 1/(1-t1) is the geometric series
    TruncSeries2 g = b.inverse();
    for (int k = 0; k <= N; ++k) CHECK(g.coefficient(k, 0) == 1);
    CHECK(b * g == one(N));
    // truncation drops total degree over N
    TruncSeries2 t = TruncSeries2::monomial(N, 5, 4);
    CHECK((t * t).coeffs().empty());
}

TEST_CASE("two variable schur polynomials") {
    const int N = 6;
    CHECK(schur2(0, 0, N) == one(N));
    CHECK(schur2(1, 0, N) == t1(N) + t2(N));
    CHECK(schur2(1, 1, N) == t1(N) * t2(N));
    CHECK(schur2(2, 0, N) == t1(N) * t1(N) + t1(N) * t2(N) + t2(N) * t2(N));
    CHECK(schur2(2, 1, N) == t1(N) * t2(N) * (t1(N) + t2(N)));
    // the factorization S_(l1,l2) = (t1 t2)^l2 S_(l1-l2,0)
    CHECK(schur2(3, 2, N) == t1(N) * t2(N) * t1(N) * t2(N) * schur2(1, 0, N));
}

TEST_CASE("schur decomposition recovers multiplicities") {
    const int N = 8;
    TruncSeries2 f = schur2(3, 1, N) + Rat(2) * schur2(2, 2, N) + schur2(1, 0, N);
    MultTable mt = schur_decompose(f);
    CHECK(mt.at({3, 1}) == 1);
    CHECK(mt.at({2, 2}) == 2);
    CHECK(mt.at({1, 0}) == 1);
    long nonzero = 0;
    for (const auto& [lam, m] : mt)
        if (m != 0) ++nonzero;
    CHECK(nonzero == 3);
}

TEST_CASE("multiplicity series") {
    const int N = 6;
    MultTable mt;
    mt[{0, 0}] = 1;
    mt[{2, 1}] = 3;
    TruncSeries2 m = mult_series_M(mt, N);
    CHECK(m.coefficient(0, 0) == 1);
    CHECK(m.coefficient(2, 1) == 3);
    TruncSeries2 mp = mult_series_Mprime(mt, N);
    // in (t, v) coordinates the entry sits at t^(l1-l2) v^l2
    CHECK(mp.coefficient(1, 1) == 3);
}

TEST_CASE("multiplicity round trip") {
    const int N = 10;
    TruncSeries2 h = (one(N) - t1(N) - t2(N)).inverse();
    CHECK(inverse_multiplicity_check(h));
    AlgebraContext mb = AlgebraContext::metabelian2();
    CHECK(inverse_multiplicity_check(hilbert_of_context(mb, N)));
}

TEST_CASE("catalan numbers") {
    std::vector<Rat> cat = catalan_coefficients(8);
    std::vector<long> want = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
    REQUIRE(cat.size() == want.size());
    for (std::size_t i = 0; i < want.size(); ++i) CHECK(cat[i] == want[i]);
    CHECK(catalan_z(7) == 429);
}

TEST_CASE("hilbert series of the rank-2 free constants") {
    const int N = 10;
    TruncSeries2 h = constants_hilbert_free2(N);
    // (t, v) entry at (i, j) is the kernel dimension at bidegree (i+j, j):
    // C(i+2j, j) - C(i+2j, j-1)
    CHECK(h.coefficient(0, 0) == 1);
    CHECK(h.coefficient(1, 0) == 1);
    CHECK(h.coefficient(0, 1) == 1);
    CHECK(h.coefficient(1, 1) == 2);
    CHECK(h.coefficient(0, 2) == 2);
    CHECK(h.coefficient(2, 2) == 9);
    // specialization to a single grading variable, t = s, v = s^2
    std::vector<Rat> by_degree = specialize(h, 1, 2);
    std::vector<long> want = {1, 1, 2, 3, 6, 10, 20, 35, 70, 126, 252};
    REQUIRE(by_degree.size() == want.size());
    for (std::size_t i = 0; i < want.size(); ++i) CHECK(by_degree[i] == want[i]);
}

TEST_CASE("generator series") {
    const int N = 14;
    TruncSeries2 a = free_generators_series(N);
    // a(t, v) = t + v c(v): one generator of bidegree (1,0), Catalan many per v-degree
    CHECK(a.coefficient(1, 0) == 1);
    CHECK(a.coefficient(0, 1) == 1);
    CHECK(a.coefficient(0, 2) == 1);
    CHECK(a.coefficient(0, 3) == 2);
    CHECK(a.coefficient(0, 4) == 5);
    CHECK(a.coefficient(0, 7) == 132);
    CHECK(a.coefficient(1, 1) == 0);
    // the constants algebra is freely generated: H = 1/(1 - a)
    CHECK((one(N) - a).inverse() == constants_hilbert_free2(N));
}

TEST_CASE("hilbert series of contexts") {
    const int N = 8;
    AlgebraContext f2 = AlgebraContext::free_assoc(2);
    TruncSeries2 h = hilbert_of_context(f2, N);
    CHECK(h == (one(N) - t1(N) - t2(N)).inverse());
    AlgebraContext c2 = AlgebraContext::commutative(2);
    TruncSeries2 hc = hilbert_of_context(c2, N);
    CHECK(hc == ((one(N) - t1(N)) * (one(N) - t2(N))).inverse());
}
