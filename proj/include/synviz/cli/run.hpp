#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace synviz::cli {

/// Entry point behind the `synviz` binary. `args` excludes the program name.
/// Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace synviz::cli
