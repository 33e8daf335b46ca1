#ifndef PSIQ_TOOLS_CLI_HPP_
#define PSIQ_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace psiq::cli {

enum ExitCode : int
{
    kOk = 0,
    kMismatch = 1, // verification failed or a table row is missing
    kInvalidInput = 2,
    kOverflow = 3,
};

// args[0] is the program name. Output goes to out, diagnostics and partial
// search results to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace psiq::cli

#endif // PSIQ_TOOLS_CLI_HPP_
