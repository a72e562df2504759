#ifndef CASIMIR_CLI_HPP
#define CASIMIR_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace casimir::cli {

// Exit codes of the command-line front end.
inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 2;        // argument or I/O error
inline constexpr int exit_material_db = 3;  // material database error
inline constexpr int exit_convergence = 4;  // numerical convergence failure

/// Run the CLI on `args` (without the program name). Results go to `out`,
/// diagnostics and errors to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace casimir::cli

#endif
