// fixtures.hpp: parameter sets shared by the unit and acceptance suites.

#pragma once

#include "chiralpb/model.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <filesystem>
#include <string>

#include <unistd.h>

namespace fixtures {

// kappa_c = 2.5, kappa_m = 1, J = 0, g_a = 2, g_b = 0, O = 0.01,
// delta_c = delta_m = 2.
inline chiralpb::SystemParams reference_point()
{
    chiralpb::SystemParams p;
    p.delta_c = 2.0;
    p.delta_m = 2.0;
    p.j = 0.0;
    p.g_a = 2.0;
    p.g_b = 0.0;
    p.kappa_a = p.kappa_b = 2.5;
    p.kappa_m = 1.0;
    p.o_drive = 0.01;
    return p;
}

inline double rel_diff(std::complex<double> x, std::complex<double> ref, double floor = 1e-300)
{
    return std::abs(x - ref) / std::max(std::abs(ref), floor);
}

// Fresh directory under the system temp dir, private to this process so
// tests can run in parallel.
inline std::filesystem::path scratch_dir(const std::string& name)
{
    const auto dir = std::filesystem::temp_directory_path() /
                     ("chiralpb_" + name + "_" + std::to_string(::getpid()));
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

} // namespace fixtures
