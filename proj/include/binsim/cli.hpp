#pragma once

#include <string>
#include <vector>

namespace binsim {

// Subcommands: run, plan, validate. Exit 0 on success, 1 on usage/config
// errors, 2 on runtime errors. Seed precedence: --seed flag, then the
// BINSIM_SEED environment variable, then the config file.
int run_cli(const std::vector<std::string>& args);

}  // namespace binsim
