// Runs every acceptance criterion and prints one line per criterion.
#include <cstdio>

#include "amix/suite.hpp"

int main()
{
    int failed = 0;
    for (int id = 1; id <= amix::suite::kCriterionCount; ++id) {
        const auto r = amix::suite::run_criterion(id);
        std::printf("%s criterion %2d: %s -- %s\n", r.passed ? "PASS" : "FAIL", r.id, r.title.c_str(),
                    r.detail.c_str());
        std::fflush(stdout);
        if (!r.passed) ++failed;
    }
    std::printf("%d/%d criteria passed\n", amix::suite::kCriterionCount - failed, amix::suite::kCriterionCount);
    return failed == 0 ? 0 : 1;
}
