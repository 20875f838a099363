#pragma once
// Command-line front end. Exit codes: 0 success, 1 verification or numerical
// failure, 2 usage error (bad arguments or malformed input).

#include <ostream>
#include <string>
#include <vector>

namespace strebel::cli {

// args excludes the program name
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace strebel::cli
