#ifndef CX2_CLI_HPP_
#define CX2_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace cx2 {

/// Runs the command-line driver on the given arguments (program name not
/// included). All regular output goes to `out`, diagnostics to `err`.
/// Returns the process exit code: 0 on success, 1 when a property check
/// found counterexamples or solvers disagreed, 2 on usage or parse errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace cx2

#endif  // CX2_CLI_HPP_
