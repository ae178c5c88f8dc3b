#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rup::cli {

// Usage errors share the parse-error code.
enum ExitCode : int { kOk = 0, kParseError = 2, kInternalError = 3 };

/// Runs one robustup invocation; `args` excludes the program name.
///   classify FILE... [--jobs N]
///   simulate FILE [--steps N] [--dt Q] [--times Q,Q,...] [--tol Q]
///   series FILE [--terms N]
///   emit-smt FILE [--formula yes|no] [--parametric]
///   sample FILE [--epsilon Q] [--count N] [--seed S] [--horizon H] [--window W]
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rup::cli
