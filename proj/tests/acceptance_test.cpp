// Acceptance gate: runs every top-level criterion, prints one line per
// criterion with its runtime, and exits nonzero if any fails or overruns
// its time limit.
#include <cstdio>

#include "weitz/verify.hpp"

int main() {
    bool all_pass = true;
    for (int i = 1; i <= 10; ++i) {
        weitz::CriterionResult r = weitz::acceptance_criterion(i);
        bool ok = r.pass && r.within_limit();
        all_pass = all_pass && ok;
        if (r.limit_seconds > 0)
            std::printf("[%s] C%d (%.2fs, limit %.0fs): %s -- %s\n", ok ? "PASS" : "FAIL",
                        r.index, r.seconds, r.limit_seconds, r.description.c_str(),
                        r.details.c_str());
        else
            std::printf("[%s] C%d (%.2fs): %s -- %s\n", ok ? "PASS" : "FAIL", r.index, r.seconds,
                        r.description.c_str(), r.details.c_str());
        std::fflush(stdout);
    }
    std::printf("%s\n", all_pass ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED");
    return all_pass ? 0 : 1;
}
