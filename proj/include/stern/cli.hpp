#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stern {

/// Runs the command-line surface. args excludes the program name, natural
/// order. Returns 0 on success / verification pass, 1 on verification or
/// computation failure, 2 on usage errors.
int run_cli(std::vector<std::string> args, std::ostream& out,
            std::ostream& err);

}  // namespace stern
