#ifndef PGHOPF_CLI_HPP
#define PGHOPF_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace pghopf::cli {

/// Exit statuses: mathematical yes, mathematical no, usage or input error.
enum ExitCode : int { kYes = 0, kNo = 1, kUsage = 2 };

/// Runs one command line (args exclude the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pghopf::cli

#endif  // PGHOPF_CLI_HPP
