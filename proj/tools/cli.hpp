#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace artin {

/// Runs artintool with the given arguments (program name excluded).
/// Returns 0 on success, 1 when a verification fails, 2 on usage or input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace artin
