#pragma once

#include <optional>
#include <string>
#include <vector>

namespace celestial {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

struct AcceptanceOptions {
    // replace the second circle of this built-in fixture before running (test hook)
    std::optional<std::string> inject_fault;
};

// fixed order 1..11; deterministic for fixed options
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt = {});

// "PASS  3  euclidean types: ..." lines, one per criterion
std::string format_results(const std::vector<CriterionResult>& rs);

bool all_pass(const std::vector<CriterionResult>& rs);

} // namespace celestial
