#pragma once

// Small helper for driving the frobkit binary from tests. The binary path
// comes from the FROBKIT_BIN environment variable (set by CTest).

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

struct CliResult {
  int exit_code;
  std::string out;
  std::string err;
};

inline std::string cli_path() {
  const char* env = std::getenv("FROBKIT_BIN");
  if (env == nullptr || *env == '\0') {
    throw std::runtime_error("FROBKIT_BIN is not set");
  }
  return env;
}

// Runs `<env_prefix> <binary> <args>` through the shell, capturing stdout via
// the pipe and stderr via a temporary file.
inline CliResult run_cli(const std::string& args,
                         const std::string& env_prefix = "") {
  static int counter = 0;
  const std::string err_path = "/tmp/frobkit_test_err_" +
                               std::to_string(getpid()) + "_" +
                               std::to_string(counter++);
  std::string cmd;
  if (!env_prefix.empty()) cmd += env_prefix + " ";
  cmd += "'" + cli_path() + "' " + args + " 2>" + err_path;

  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) throw std::runtime_error("popen failed: " + cmd);
  std::string out;
  char buffer[4096];
  size_t n = 0;
  while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
    out.append(buffer, n);
  }
  const int status = pclose(pipe);
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;

  std::ifstream err_file(err_path);
  std::stringstream err;
  err << err_file.rdbuf();
  std::remove(err_path.c_str());

  return {code, out, err.str()};
}
