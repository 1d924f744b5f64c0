// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include "lgb/selftest.hpp"

#include <cstdio>

int main() {
    bool all = true;
    for (const auto& r : lgb::run_acceptance()) {
        std::puts(lgb::format_criterion(r).c_str());
        all = all && r.pass;
    }
    std::puts(all ? "acceptance: all criteria passed" : "acceptance: FAILURES present");
    return all ? 0 : 1;
}
