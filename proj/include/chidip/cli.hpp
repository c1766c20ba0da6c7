#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace chidip {

/// Entry point of the `chidip` tool. `args` excludes the program name.
/// Results go to `out`, diagnostics to `err`; output is written only once
/// the whole result is computed. Returns 0 on success, 2 on usage errors
/// and 1 on computation errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chidip
