#pragma once

#include <string>
#include <vector>

namespace rkp::cli {

/// Entry point shared by the binary and the tests. `args` excludes the
/// program name. Exit codes: 0 success, 1 verification failure, 2 usage
/// or domain error.
int run(const std::vector<std::string>& args);

}  // namespace rkp::cli
