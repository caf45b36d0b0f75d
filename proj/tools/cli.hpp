#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cellkit::cli {

// Exit codes: 0 all checks pass, 1 some check failed, 2 usage or infrastructure error.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cellkit::cli
