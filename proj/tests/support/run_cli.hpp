#pragma once

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace moeblox::testing {

struct CliResult {
  int exit_code;
  std::string out;
};

// Runs the moeblox binary through the shell; stderr is discarded.
inline CliResult run_cli(const std::string& args) {
  const std::string command = std::string("\"") + MOEBLOX_CLI_PATH + "\" " + args + " 2>/dev/null";
  FILE* pipe = ::popen(command.c_str(), "r");
  if (pipe == nullptr) return {-1, {}};
  std::string out;
  std::array<char, 4096> buffer{};
  std::size_t n = 0;
  while ((n = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) out.append(buffer.data(), n);
  const int status = ::pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

inline std::string scene(const std::string& name) {
  return std::string("\"") + MOEBLOX_SCENES_DIR + "/" + name + "\"";
}

}  // namespace moeblox::testing
