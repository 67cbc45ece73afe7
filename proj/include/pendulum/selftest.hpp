#pragma once

#include <string>
#include <vector>

namespace pendulum {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Built-in verification of the perturbation engine against exactly solvable
/// references: a constant shift (first order only), a linear term (second
/// order only, -F^2/(2 mu omega^2)), a quadratic term (frequency shift,
/// matched order by order against the Taylor expansion, plus the order-5
/// scaling of the residual), and the closed-form series sweep.
std::vector<CheckResult> run_selftest();

}  // namespace pendulum
