#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "weitz/cpoly.hpp"
#include "weitz/derivation.hpp"
#include "weitz/generic2x2.hpp"
#include "weitz/weitzcomm.hpp"

using namespace weitz;

TEST_CASE("center variables and weights") {
    CHECK(cbar_names() == std::vector<std::string>{"p", "q", "u", "t", "v"});
    CHECK(cbar_weights() == std::vector<int>{1, 1, 2, 2, 2});
    CHECK(cbar_disc() == cbar_var(VT).pow(2) - cbar_var(VU) * cbar_var(VV));
}

TEST_CASE("module structure against the matrix realization") {
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            TraceElem a = TraceElem::basis(i), b = TraceElem::basis(j);
            CHECK(matrix_realization(trace_mul(a, b)) ==
                  gm_mul(matrix_realization(a), matrix_realization(b)));
        }
    // trace-zero square: x0^2 = (u/2) 1
    TraceElem sq = trace_mul(TraceElem::basis(1), TraceElem::basis(1));
    TraceElem expect = TraceElem::from_cbar(Rat(1, 2) * cbar_var(VU));
    CHECK(sq == expect);
    // commutator square is the discriminant
    TraceElem comm = trace_mul(TraceElem::basis(1), TraceElem::basis(2)) -
                     trace_mul(TraceElem::basis(2), TraceElem::basis(1));
    CHECK(trace_mul(comm, comm) == TraceElem::from_cbar(cbar_disc()));
}

TEST_CASE("generators and traces") {
    TraceElem gx = TraceElem::gen_x(), gy = TraceElem::gen_y();
    CHECK(matrix_realization(gx) == gm_generic_x());
    CHECK(matrix_realization(gy) == gm_generic_y());
    CHECK(trace_of(gx) == cbar_var(VP));
    CHECK(trace_of(gy) == cbar_var(VQ));
    CHECK(trace_of(trace_mul(gx, gx)) == cbar_var(VU) + Rat(1, 2) * cbar_var(VP).pow(2));
    // u = tr(x0^2) realizes as -2 det(x0)
    GenericMatrix x0 = matrix_realization(TraceElem::basis(1));
    CPoly det = x0.a[0] * x0.a[3] - x0.a[1] * x0.a[2];
    CHECK(cbar_realization()[VU] == Rat(-2) * det);
}

TEST_CASE("realization is a homomorphism") {
    CPoly u = cbar_var(VU), q = cbar_var(VQ);
    TraceElem a = TraceElem::gen_x() + u * TraceElem::basis(2);
    TraceElem b = q * TraceElem::basis(3) - TraceElem::gen_y();
    CHECK(matrix_realization(trace_mul(a, b)) ==
          gm_mul(matrix_realization(a), matrix_realization(b)));
    CHECK(matrix_realization(a + b) == gm_add(matrix_realization(a), matrix_realization(b)));
}

TEST_CASE("induced derivations on the center") {
    CPoly zero = CPoly::zero(kCbarVars);
    CPoly p = cbar_var(VP), u = cbar_var(VU), t = cbar_var(VT);
    TraceDerivation wd = weitzenbock_trace_derivation();
    CHECK(wd.cbar.images == std::vector<CPoly>{zero, p, zero, u, Rat(2) * t});
    TraceDerivation c5 = chain5_trace_derivation();
    CHECK(c5.cbar.images == std::vector<CPoly>{cbar_var(VV), p, zero, u, Rat(2) * t});
    // both come from make_trace_derivation and obey the Leibniz rule
    TraceElem a = TraceElem::gen_x(), b = trace_mul(TraceElem::gen_y(), TraceElem::gen_x());
    for (const auto& d : {wd, c5})
        CHECK(apply(d, trace_mul(a, b)) ==
              trace_mul(apply(d, a), b) + trace_mul(a, apply(d, b)));
    // the matrix route induces the same center images
    TraceDerivation from_lin = trace_derivation_from_matrix(LinearDerivation::basic(2));
    CHECK(from_lin.cbar.images == wd.cbar.images);
}

TEST_CASE("center constants") {
    TraceDerivation wd = weitzenbock_trace_derivation();
    std::vector<CPoly> gens = cbar_constants_weitzenbock();
    REQUIRE(gens.size() == 5);
    CHECK(gens[0] == cbar_var(VP));
    CHECK(gens[1] == cbar_var(VU));
    for (const auto& g : gens) CHECK(apply(wd.cbar, g).is_zero());
    // u g4 + p^2 g3 = g2^2
    CHECK(gens[1] * gens[4] + cbar_var(VP).pow(2) * gens[3] == gens[2].pow(2));
    TraceDerivation c5 = chain5_trace_derivation();
    std::vector<CPoly> gens5 = cbar_constants_chain5();
    REQUIRE(gens5.size() == 5);
    CHECK(gens5[0] == cbar_var(VU));
    CHECK(gens5[1] == cbar_disc());
    for (const auto& g : gens5) CHECK(apply(c5.cbar, g).is_zero());
}

TEST_CASE("scaled exponentials of the trace algebra") {
    CPoly disc = cbar_disc();
    TraceElem gx = TraceElem::gen_x(), gy = TraceElem::gen_y();
    ExpTraceResult r = exp_w_delta(disc, weitzenbock_trace_derivation());
    CHECK(r.x_image == gx);
    CHECK(r.y_image == gy + disc * gx);
    CHECK(r.r_membership);
    CHECK(r.w_quotient == CPoly::unit(kCbarVars));
    // w must be a constant
    CHECK_THROWS_AS(exp_w_delta(cbar_var(VQ), weitzenbock_trace_derivation()),
                    std::invalid_argument);
    // the five-step chain moves x as well
    CPoly u = cbar_var(VU), t = cbar_var(VT), v = cbar_var(VV);
    ExpTraceResult c = exp_w_delta(u, chain5_trace_derivation());
    TraceElem wx = gx + TraceElem::from_cbar(Rat(1, 2) * (u * v)) +
                   TraceElem::from_cbar(Rat(1, 2) * (u.pow(2) * t)) +
                   TraceElem::from_cbar(Rat(1, 6) * u.pow(4));
    CHECK(c.x_image == wx);
    CHECK_FALSE(c.r_membership);
}

TEST_CASE("rank-5 correspondence with the split jordan type") {
    // substituting (u, t, v/2, p, q) for the five variables carries the
    // split-type generators onto the center generators up to sign
    std::vector<CPoly> images = {cbar_var(VU), cbar_var(VT), Rat(1, 2) * cbar_var(VV),
                                 cbar_var(VP), cbar_var(VQ)};
    std::vector<CPoly> from32;
    for (const auto& g : nowicki_32()) from32.push_back(g.substitute(images));
    std::vector<CPoly> targets = cbar_constants_weitzenbock();
    CHECK(from32[0] == targets[1]);            // x1 -> u
    CHECK(from32[1] == targets[0]);            // x4 -> p
    CHECK(from32[2] == Rat(-1) * targets[2]);  // x1 x5 - x2 x4 -> -(pt - qu)
    CHECK(from32[3] == targets[3]);            // x2^2 - 2 x1 x3 -> t^2 - uv
    CHECK(from32[4] == targets[4]);            // the quintic lands on q^2 u - 2pqt + p^2 v
}
