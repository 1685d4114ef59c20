#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cubelab::cli {

// Exit codes: 0 success, 1 a verification failed or an internal error,
// 2 bad arguments or input (diagnostic names the field on `err`).
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace cubelab::cli
