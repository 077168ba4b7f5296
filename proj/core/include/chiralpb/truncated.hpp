// truncated.hpp: weak-drive two-excitation solution of the driven,
// damped three-mode system.
//
// The pure state is restricted to
//   |psi> = sum C_{n_a n_m n_b} |n_a n_m n_b>,  n_a + n_m + n_b <= 2,
// with C_000 = 1. Two independent routes produce the ten amplitudes:
//   * truncated_solve reads the one- and two-excitation blocks straight off
//     H_eff and solves them as linear systems;
//   * closed_form_amplitudes evaluates the explicit rational expressions in
//     terms of the complex detunings (CoefficientSet).
// They agree to rounding error, which is what the test suite checks.

#pragma once

#include "chiralpb/model.hpp"

#include <array>
#include <string_view>

namespace chiralpb {

struct Amplitudes {
    complex c000{1.0};
    complex c100{}, c010{}, c001{};
    complex c110{}, c101{}, c011{};
    complex c200{}, c020{}, c002{};

    static constexpr std::array<std::string_view, 10> labels = {
        "c000", "c100", "c010", "c001", "c110", "c101", "c011", "c200", "c020", "c002"};

    // Amplitudes in the order of `labels`.
    std::array<complex, 10> as_array() const;
    // Amplitude of |n_a n_m n_b>; throws ShapeError outside the two-excitation set.
    complex at(std::size_t n_a, std::size_t n_m, std::size_t n_b) const;
};

// Polynomial coefficients of the closed-form amplitudes. All are functions of
// (dt_c, dt_m, g_a, g_b, J) only.
struct CoefficientSet {
    complex z, p, q, m_coef, y;
    complex k0, k1, k2;
    complex a0, a1, a2;
    complex b0, b1, b2;
    complex f0, f1, f2;
    complex r0, r1;
    complex l0, l1, l2;
};

struct DriveCondition {
    double e_opt{0.0};
    double phi_opt{0.0};   // in (-pi, pi]
    bool phase_defined{true};  // false when the probe vanishes (e_opt = 0)
};

// Requires kappa_a == kappa_b.
CoefficientSet coefficient_set(const SystemParams& params);

// Direct linear solve of the truncated amplitude equations built from H_eff.
// Throws ResonanceSingularityError when a block is singular.
Amplitudes truncated_solve(const SystemParams& params);

// Closed-form amplitudes. Requires kappa_a == kappa_b and e_l == e_r;
// throws SingularDenominatorError when P or Q vanishes (relative 1e-12).
Amplitudes closed_form_amplitudes(const SystemParams& params);

// 2 |C_2|^2 / |C_1|^4 with (C_1, C_2) = (c100, c200) for mode a and
// (c001, c002) for mode b. Throws UndefinedCorrelationError when C_1 vanishes.
double g2_analytic(const Amplitudes& amps, Mode mode);

// (E, phi) that cancels c200 exactly. Throws NoOptimumError when the
// denominator vanishes.
DriveCondition optimal_drive(const SystemParams& params);

// params with e_l = e_r = drive.e_opt and, when defined, phi = drive.phi_opt.
SystemParams with_drive(SystemParams params, const DriveCondition& drive);

} // namespace chiralpb
