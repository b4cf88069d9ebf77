#pragma once

#include <string>

#include <json.hpp>

namespace mixnorm {

/// Resolved run configuration: a command plus the raw JSON config with CLI
/// overrides applied. All numeric parameters are validated against module
/// preconditions before any computation starts.
struct RunConfig {
  std::string command;  // norm | op | weight | seminorm | verify
  nlohmann::json raw;
  std::string out_dir = ".";
  bool quiet = false;
};

/// Execute a validated command. Returns 0 on success, 1 when a verify
/// experiment fails its criterion. Configuration problems throw
/// std::invalid_argument (the CLI maps them to exit code 2).
int run(const RunConfig& config);

/// Full command-line entry point (subcommands, --config/--out/--seed/
/// --resolution/--quiet); returns the process exit status and writes a
/// machine-readable error object to stderr on configuration errors.
int run_cli(int argc, char** argv);

}  // namespace mixnorm
