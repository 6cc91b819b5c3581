#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace capbound {

struct CriterionResult {
    int index = 0;
    std::string name;
    bool passed = false;
    std::string detail;     // one-line summary of the checked values
    double seconds = 0.0;
};

/// Runs every acceptance criterion in order. When progress is non-null each
/// result is printed to it as a single pass/fail line as soon as it is known.
std::vector<CriterionResult> run_acceptance_suite(std::ostream* progress);

} // namespace capbound
