// One line per acceptance criterion; exits non-zero if any fails.
#include <iostream>

#include "strebel/suite.hpp"

int main() {
    int failed = 0;
    for (int id : strebel::suite_criteria("all")) {
        auto r = strebel::run_criterion(id);
        std::cout << strebel::format_line(r) << std::endl;
        failed += !r.pass;
    }
    std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria passed") << std::endl;
    return failed ? 1 : 0;
}
