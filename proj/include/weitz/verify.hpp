#pragma once

#include <string>
#include <vector>

namespace weitz {

// One named verification check; details is a short deterministic summary of
// what was compared (counts, dimensions, degree ranges).
struct CheckResult {
    std::string id;
    bool pass = false;
    std::string details;
};

// The named suites, in report order.
std::vector<std::string> verify_suite_names();

// Runs one suite ("all" concatenates every suite).  Throws std::invalid_argument
// on an unknown name.  A positive degree overrides the default degree bound of
// the nowicki and sl2 suites.
std::vector<CheckResult> verify_suite(const std::string& suite, int degree = 0);

// Top-level acceptance checks 1..10, each timed; limit_seconds = 0 means no
// runtime bound is enforced for that check.
struct CriterionResult {
    int index = 0;
    std::string description;
    bool pass = false;
    double seconds = 0.0;
    double limit_seconds = 0.0;

    bool within_limit() const { return limit_seconds <= 0.0 || seconds < limit_seconds; }
    std::string details;
};

CriterionResult acceptance_criterion(int index);
std::vector<CriterionResult> acceptance_criteria();

}  // namespace weitz
