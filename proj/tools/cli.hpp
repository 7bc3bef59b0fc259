#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hopfop::cli {

/// Runs one invocation; args excludes the program name. Returns the exit code:
/// 0 success, 1 a verification failed, 2 bad arguments or unparsable input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hopfop::cli
