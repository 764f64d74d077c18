#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "weitz/cpoly.hpp"
#include "weitz/derivation.hpp"
#include "weitz/weitzcomm.hpp"

using namespace weitz;

namespace {

CPoly v(int arity, int j) { return CPoly::var(arity, j); }

}  // namespace

TEST_CASE("shifted generators for a single block") {
    // rank 3: z3 = x3 x1^2 - x2^2 x1 / 2
    std::vector<CPoly> g3 = z_generators(JordanType{{3}});
    REQUIRE(g3.size() == 2);
    CHECK(g3[0] == v(3, 0));
    CHECK(g3[1] == v(3, 2) * v(3, 0).pow(2) - Rat(1, 2) * (v(3, 1).pow(2) * v(3, 0)));
    // rank 4 adds z4 = x4 x1^3 - x3 x2 x1^2 + x2^3 x1 / 3
    std::vector<CPoly> g4 = z_generators(JordanType{{4}});
    REQUIRE(g4.size() == 3);
    CHECK(g4[2] == v(4, 3) * v(4, 0).pow(3) - v(4, 2) * v(4, 1) * v(4, 0).pow(2) +
                       Rat(1, 3) * (v(4, 1).pow(3) * v(4, 0)));
}

TEST_CASE("shifted generators for split jordan types") {
    // blocks (2,2): the construction reproduces the classical generating set
    std::vector<CPoly> g22 = z_generators(JordanType{{2, 2}});
    REQUIRE(g22.size() == 3);
    CHECK(g22[0] == v(4, 0));
    CHECK(g22[1] == v(4, 2));
    CHECK(g22[2] == v(4, 3) * v(4, 0) - v(4, 2) * v(4, 1));
    // blocks (3,2)
    std::vector<CPoly> g32 = z_generators(JordanType{{3, 2}});
    REQUIRE(g32.size() == 4);
    CHECK(g32[1] == v(5, 2) * v(5, 0).pow(2) - Rat(1, 2) * (v(5, 1).pow(2) * v(5, 0)));
    CHECK(g32[2] == v(5, 3));
    CHECK(g32[3] == v(5, 4) * v(5, 0) - v(5, 3) * v(5, 1));
    // the construction needs a leading block of size at least 2
    CHECK_THROWS_AS(z_generators(JordanType{{1, 1, 1}}), std::invalid_argument);
}

TEST_CASE("shifted generators are constants") {
    for (const auto& jt : {JordanType{{3}}, JordanType{{4}}, JordanType{{5}}, JordanType{{2, 2}},
                           JordanType{{3, 2}}, JordanType{{2, 2, 1}}}) {
        LinearDerivation d = LinearDerivation::from_jordan(jt);
        for (const auto& z : z_generators(jt)) CHECK(apply(d, z).is_zero());
    }
}

TEST_CASE("classical generator sets are constants") {
    struct Case {
        JordanType jt;
        std::vector<CPoly> gens;
    };
    std::vector<Case> cases = {
        {JordanType{{3}}, nowicki_basic3()},  {JordanType{{4}}, nowicki_basic4()},
        {JordanType{{5}}, nowicki_basic5()},  {JordanType{{2, 2}}, nowicki_22()},
        {JordanType{{3, 2}}, nowicki_32()},
    };
    for (const auto& c : cases) {
        LinearDerivation d = LinearDerivation::from_jordan(c.jt);
        for (const auto& g : c.gens) CHECK(apply(d, g).is_zero());
    }
    CHECK(nowicki_22() ==
          std::vector<CPoly>{v(4, 0), v(4, 2), v(4, 0) * v(4, 3) - v(4, 1) * v(4, 2)});
}

TEST_CASE("generation of the constants algebra") {
    CHECK(generates_constants(nowicki_basic3(), LinearDerivation::basic(3), 6));
    CHECK(generates_constants(nowicki_22(), LinearDerivation::from_jordan(JordanType{{2, 2}}), 6));
    // the first variable alone does not generate
    CHECK_FALSE(generates_constants({v(3, 0)}, LinearDerivation::basic(3), 4));
    // the shifted generators only generate after inverting x1
    CHECK_FALSE(generates_constants(z_generators(JordanType{{3}}), LinearDerivation::basic(3), 4));
    CHECK(generates_constants_localized(z_generators(JordanType{{3}}),
                                        LinearDerivation::basic(3), 6, 8));
}

TEST_CASE("transcendence ranks") {
    CHECK(transcendence_rank(nowicki_basic3()) == 2);
    CHECK(transcendence_rank(nowicki_basic5()) == 4);
    CHECK(transcendence_rank(nowicki_22()) == 3);
    CHECK(transcendence_rank(nowicki_32()) == 4);
    CHECK(transcendence_rank({v(3, 0), v(3, 0).pow(2)}) == 1);
    CHECK(transcendence_rank(z_generators(JordanType{{4}})) == 3);
}

TEST_CASE("nagata data") {
    CPoly x = v(3, 0), y = v(3, 1), z = v(3, 2);
    CHECK(nagata_w() == x * z + y.pow(2));
    LinearDerivation lin = nagata_linear();
    CHECK(apply(lin, x) == Rat(-2) * y);
    CHECK(apply(lin, y) == z);
    CHECK(apply(lin, z).is_zero());
    CHECK(apply(lin, nagata_w()).is_zero());
    CDerivation delta = nagata_delta();
    CHECK(delta.images[0] == Rat(-2) * (nagata_w() * y));
    CHECK(delta.images[1] == nagata_w() * z);
    CHECK(delta.images[2].is_zero());
    CHECK(nagata_kernel_match(5));
}
