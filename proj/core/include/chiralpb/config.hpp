// config.hpp: run specifications and the key = value configuration format.
//
//   # comment
//   delta_c = 2
//   kappa_c = 2.5
//   sweep.1 = phi, 0, 6.2831853, 201
//   method = both
//
// The full grammar is in docs/config.md.

#pragma once

#include "chiralpb/model.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace chiralpb {

enum class Method { analytic, master, both };

std::string_view to_string(Method method) noexcept;

struct SweepAxis {
    std::string name;
    double start{0.0};
    double stop{0.0};
    std::size_t count{2};

    // Evenly spaced, endpoints included.
    double value(std::size_t i) const;

    bool operator==(const SweepAxis&) const = default;
};

struct RunSpec {
    SystemParams base{};
    std::vector<SweepAxis> axes{};       // 0, 1 or 2; axis 1 varies slowest
    Method method{Method::both};
    std::vector<Mode> modes{Mode::a, Mode::b};
    bool use_optimal_drive{false};       // E_L = E_R = E_opt at every point
    bool use_optimal_phase{false};       // also phi = phi_opt; needs use_optimal_drive
    bool reverse_field{false};           // a <-> b swap applied after E_opt
    std::size_t truncation{2};           // n_max per mode for the master equation
    std::string output{};

    bool wants_analytic() const noexcept { return method != Method::master; }
    bool wants_master() const noexcept { return method != Method::analytic; }

    // Product of the axis counts (1 without axes).
    std::size_t point_count() const;

    // Throws ConfigError on inconsistent settings.
    void validate() const;

    // Rates and rate-valued axes in units of kappa_m.
    RunSpec normalized() const;

    // Normalized base parameters with the field reversal applied.
    SystemParams effective_params() const;

    bool operator==(const RunSpec&) const = default;
};

// Throws ConfigError (with the 1-based line where one applies).
RunSpec parse_config(std::string_view text);
RunSpec load_config(const std::string& path);

// Canonical text of a spec: every key, fixed order, 17 significant digits.
// parse_config(to_config(s)) == s.
std::string to_config(const RunSpec& spec);

std::string_view library_version() noexcept;

} // namespace chiralpb
