#pragma once

#include "n2vx/coset.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace n2vx::cli {

/// Stable verification exit contract: 0 when every check passed, 2 otherwise.
int verify_exit_code(const std::vector<CosetCheck>& checks);

/// Full command surface; args exclude the program name. Records go to out
/// (or to the --out file when given), diagnostics to err. Returns the
/// process exit code: 0 success or pass, 1 usage or parse error, 2
/// verification failure.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace n2vx::cli
