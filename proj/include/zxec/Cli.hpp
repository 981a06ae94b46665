#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zx {

/// Runs the command-line interface. Exit codes: 0 equivalent (matching the
/// expectation), 2 proven non-equivalent, 3 no information, 1 usage or
/// input errors.
int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace zx
