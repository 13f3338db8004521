#pragma once

#include <string>
#include <vector>

namespace zetascope {

// Runs one subcommand (args exclude the program name).  Returns 0 on
// success, 1 on usage errors, 2 on numeric/domain errors.
int cli_dispatch(const std::vector<std::string>& args);

}  // namespace zetascope
