#pragma once
// The verification suite behind `reproduce-paper` and the acceptance binary.
// Criterion k of the suite is the k-th acceptance check of the project.

#include <string>
#include <vector>

namespace strebel {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

constexpr int kCriteria = 14;

// all, thm1, examples, exact, ribbon, periods
std::vector<std::string> suite_names();
std::vector<int> suite_criteria(const std::string& suite);  // throws std::invalid_argument

// never throws: exceptions become a failing result with the message as detail
CriterionResult run_criterion(int id);

// "PASS  7  ribbon enumeration ... (0.05 s)  detail"
std::string format_line(const CriterionResult& r);

}  // namespace strebel
