#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace skw::cli {

/// Runs one invocation; args exclude the program name. Returns 0 on
/// success, 1 on a failed verification (or a false predicate under
/// --assert), 2 on a usage error. JSON goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace skw::cli
