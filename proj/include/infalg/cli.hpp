#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace infalg {

/// Runs one command line (without the program name). Documents and reports
/// go to `out`, diagnostics to `err`. Returns 0 on success, 1 when a check
/// fails or the input violates a structural law, 2 on unreadable or
/// malformed input and usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace infalg
