#pragma once

#include <functional>
#include <string>
#include <vector>

namespace latzeta {

struct CriterionResult {
    int number = 0;
    std::string title;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

// Runs the twelve-point verification suite at default precision, printing one
// pass/fail line per criterion to the given sink.  Returns true iff all pass.
bool run_acceptance_suite(const std::function<void(const std::string&)>& print,
                          std::vector<CriterionResult>* results = nullptr);

} // namespace latzeta
