#ifndef TORIC_TOOLS_CLI_HPP
#define TORIC_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace toric::cli {

enum ExitCode : int
{
    kOk = 0,
    kFailure = 1,
    kSchema = 2,
    kCondition = 3,
    kBudget = 4,
    kHypothesis = 5,
};

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}   // namespace toric::cli

#endif
