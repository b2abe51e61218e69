#pragma once

#include <optional>
#include <string>

namespace bergman {

// Exit-code contract: 0 pass, 1 fail verdict / harness failure, 2 input error.
struct RunOverrides {
    std::optional<double> tol;
    std::optional<int> n;
};

int run_config(const std::string& config_path, const std::string& out_dir,
               const RunOverrides& overrides = {},
               const std::string& expected_kind = "");

// Runs every library invariant, printing one line per check.  Returns 0
// when all pass, 1 otherwise.
int run_verify_command();

}  // namespace bergman
