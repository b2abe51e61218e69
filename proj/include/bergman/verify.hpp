#pragma once

#include <string>
#include <vector>

namespace bergman {

struct CheckResult {
    std::string name;
    double residual;
    double tolerance;
    bool pass;
};

// Every library invariant as a named check at its stated size and tolerance.
std::vector<CheckResult> run_verify_suite();

// Test hook: the T_1 = identity check with a configurable entry normalization
// factor.  The library convention is 2.0; anything else must fail the check.
CheckResult check_identity_normalization(double factor);

}  // namespace bergman
