#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ratsurf::cli {

/// Parsed command-line state for one invocation.
struct RunConfig {
    std::string subcommand;
    std::string input_path;
    std::string inline_text;
    std::string output_path;
    std::string grid = "-1:1:3,-1:1:3";
    unsigned long seed = 0;
    bool verbose = false;
};

/// Entry point shared by the binary and the tests. Exit codes: 0 success,
/// 2 input error, 3 certification failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ratsurf::cli
