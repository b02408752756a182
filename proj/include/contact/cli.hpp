#pragma once

#include <string>

namespace contact {

// Subcommand bodies, exposed for tests.  Each loads the config at the given
// path and returns the process exit code: 0 pass, 1 usage/config error,
// 2 comparison/check failure.
int cmd_limits(const std::string& config_path);
int cmd_evolve(const std::string& config_path);
int cmd_simulate(const std::string& config_path);
int cmd_compare(const std::string& config_path);
int cmd_check(const std::string& config_path);

int run_cli(int argc, char** argv);

}  // namespace contact
