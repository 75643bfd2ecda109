#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bicross {

/// Batch entry point behind the command-line binary, callable in-process
/// for tests. Exit code contract: 0 all checks pass, 1 at least one check
/// failed, 2 input/usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bicross
