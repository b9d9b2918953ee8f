#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace moeblox::cli {

// Exit codes: 0 affirmative, 1 negative, 2 usage or data error.
inline constexpr int kExitYes = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitError = 2;

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace moeblox::cli
