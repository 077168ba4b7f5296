// model.hpp: parameters of the chiral cavity-magnon system and its
// rotating-frame Hamiltonians.
//
// All rates and detunings are expressed in units of the magnon linewidth
// kappa_m; SystemParams::normalized() brings an arbitrary set into that form.

#pragma once

#include "chiralpb/fock.hpp"

#include <optional>
#include <span>
#include <string_view>

namespace chiralpb {

struct SystemParams {
    double delta_c{0.0};  // cavity detuning from the probe
    double delta_m{0.0};  // magnon detuning from the probe
    double j{0.0};        // CW/CCW backscattering coupling
    double g_a{0.0};      // magnon coupling to the CCW mode a
    double g_b{0.0};      // magnon coupling to the CW mode b
    double e_l{0.0};      // two-photon drive into mode a
    double e_r{0.0};      // two-photon drive into mode b
    double phi{0.0};      // shared two-photon drive phase, radians
    double o_drive{0.0};  // magnon probe amplitude
    double kappa_a{1.0};
    double kappa_b{1.0};
    double kappa_m{1.0};
    // Physical size of one rate unit in MHz; informational only.
    std::optional<double> unit_scale_mhz{};

    // Throws InvalidParameterError when a decay rate is not strictly positive,
    // a drive amplitude is negative, or any value is not finite.
    void validate() const;

    // Divides every rate-dimensioned field by kappa_m (phi is untouched).
    SystemParams normalized() const;

    // Exchanges (g_a, g_b), (e_l, e_r), (kappa_a, kappa_b): the parameter
    // image of reversing the bias field.
    SystemParams swapped_ab() const;

    bool symmetric_cavity() const noexcept { return kappa_a == kappa_b; }
    bool symmetric_drive() const noexcept { return e_l == e_r; }

    // Named access used by configuration files and sweeps. Names are the
    // field names above; "kappa_c" and "e" set both members of the pair.
    static std::span<const std::string_view> field_names();
    static bool is_field(std::string_view name);
    void set(std::string_view name, double value);
    double get(std::string_view name) const;

    bool operator==(const SystemParams&) const = default;
};

struct ComplexDetunings {
    complex dt_c;  // delta_c - i kappa_c / 2
    complex dt_m;  // delta_m - i kappa_m / 2
};

// Requires kappa_a == kappa_b (kappa_c), otherwise UnsupportedAsymmetryError.
ComplexDetunings complex_detunings(const SystemParams& params);

// Rotating-frame Hamiltonian on a three-mode (a, m, b) space; exactly Hermitian.
Operator build_h_r(const SystemParams& params, const FockSpace& space);

// H_r - i (kappa_a a^dag a + kappa_b b^dag b + kappa_m m^dag m) / 2.
Operator build_h_eff(const SystemParams& params, const FockSpace& space);

} // namespace chiralpb
