#ifndef LGB_SELFTEST_HPP
#define LGB_SELFTEST_HPP

#include <string>
#include <vector>

namespace lgb {

struct CriterionResult {
    int number = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double ms = 0.0;
};

// Runs the full acceptance suite; one result per criterion.
std::vector<CriterionResult> run_acceptance();

// "[PASS] 1 milnor-basis-golden (12.3 ms): ..." one line per criterion.
std::string format_criterion(const CriterionResult& r);

}  // namespace lgb

#endif
