#ifndef JETCOVER_CLI_HPP
#define JETCOVER_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace jetcover {

/// Runs the command-line interface on the given arguments (without the
/// program name). Results go to out, diagnostics and machine-readable
/// error JSON to err. Returns the process exit code: 0 success, 2 domain
/// error, 3 resource-bound refusal.
int runCli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace jetcover

#endif
