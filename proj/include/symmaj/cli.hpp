#ifndef SYMMAJ_CLI_HPP
#define SYMMAJ_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace symmaj {

/// Exit statuses of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitNotRegular = 2, // also: a verify oracle failed
  kExitCapExceeded = 3,
};

int run_cli(int argc, char const *const *argv, std::ostream &out, std::ostream &err);

/// Same, with `args` excluding the program name.
int run_cli(std::vector<std::string> const &args, std::ostream &out, std::ostream &err);

} // namespace symmaj

#endif // SYMMAJ_CLI_HPP
