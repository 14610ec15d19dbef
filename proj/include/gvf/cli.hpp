#ifndef GVF_CLI_HPP
#define GVF_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace gvf {

enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitInput = 2,
  kExitInfeasible = 3,
};

/// Entry point of the `gvf` tool. `args[0]` is the program name.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gvf

#endif  // GVF_CLI_HPP
