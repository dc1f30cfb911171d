#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fermient::cli {

enum ExitCode { ok = 0, verification_failure = 1, input_error = 2 };

// Runs one fermi-ent command; `args` excludes the program name.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fermient::cli
