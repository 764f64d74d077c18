#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "weitz/verify.hpp"

using namespace weitz;

TEST_CASE("suite registry") {
    std::vector<std::string> names = verify_suite_names();
    CHECK(names.size() == 8);
    CHECK(names.front() == "nowicki");
    CHECK(names.back() == "generic2x2");
    CHECK_THROWS_AS(verify_suite("bogus"), std::invalid_argument);
}

TEST_CASE("nagata suite passes and shows the images") {
    std::vector<CheckResult> rs = verify_suite("nagata");
    REQUIRE(rs.size() == 4);
    for (const auto& r : rs) CHECK(r.pass);
    CHECK(rs[0].id == "nagata.images");
    CHECK(rs[0].details.find("nu(x)") != std::string::npos);
    CHECK(rs[0].details.find("z") != std::string::npos);
}

TEST_CASE("degree override trims the sl2 counts") {
    std::vector<CheckResult> rs = verify_suite("sl2", 6);
    REQUIRE(!rs.empty());
    CHECK(rs[0].id == "sl2.counts");
    CHECK(rs[0].pass);
    CHECK(rs[0].details == "degrees 2..6: 1,1,2");
}

TEST_CASE("criteria plumbing") {
    CriterionResult r = acceptance_criterion(6);
    CHECK(r.index == 6);
    CHECK(r.pass);
    CHECK(r.limit_seconds == 0.0);
    CHECK(r.within_limit());
    CHECK_THROWS_AS(acceptance_criterion(0), std::invalid_argument);
    CHECK_THROWS_AS(acceptance_criterion(11), std::invalid_argument);
}
