// checks.hpp: built-in invariant suite, run by `chiralpb check`.

#pragma once

#include "chiralpb/model.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace chiralpb {

struct CheckResult {
    std::string name;
    bool passed{false};
    std::string detail;
};

// Uniform draw: g_a, g_b, J, delta_c, delta_m in [-5, 5], kappa_c in [0.5, 5],
// kappa_m = 1, phi in [0, 2 pi), o_drive and e from the given magnitudes.
SystemParams random_params(std::mt19937_64& rng, double o_drive = 0.3, double e = 0.7);

std::vector<CheckResult> run_invariant_checks(std::uint64_t seed = 1);

} // namespace chiralpb
