#pragma once

#include <string>
#include <vector>

namespace mfwb {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    double seconds = 0.0;
    double budget_seconds = 0.0;
    std::string detail; // first failure, empty on success
};

// Runs the full exact-arithmetic acceptance battery; one result per
// criterion, in order.
std::vector<CriterionResult> run_acceptance();

std::string format_criterion_line(const CriterionResult& r);

} // namespace mfwb
