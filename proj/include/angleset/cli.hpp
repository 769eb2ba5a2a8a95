#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace angleset::cli {

enum ExitCode : int { ok = 0, negative = 1, usage = 2, indeterminate = 3 };

// args excludes the program name. Output goes to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace angleset::cli
