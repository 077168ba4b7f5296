// model.cpp: parameter handling and Hamiltonian assembly.

#include "chiralpb/model.hpp"

#include "chiralpb/errors.hpp"

#include <array>
#include <cmath>
#include <string>
#include <utility>

namespace chiralpb {

namespace {

constexpr std::array<std::string_view, 15> kFieldNames = {
    "delta_c", "delta_m", "j",       "g_a",     "g_b",     "e_l",     "e_r",
    "phi",     "o_drive", "kappa_a", "kappa_b", "kappa_m", "unit_scale_mhz",
    "kappa_c", "e",
};

void require_finite(double value, std::string_view name)
{
    if (!std::isfinite(value)) {
        throw InvalidParameterError("SystemParams: " + std::string(name) + " is not finite");
    }
}

void require_three_mode(const FockSpace& space)
{
    if (space.mode_count() != 3) {
        throw ShapeError("Hamiltonian: expected a three-mode (a, m, b) space");
    }
}

} // namespace

void SystemParams::validate() const
{
    for (std::string_view name : kFieldNames) {
        if (name == "unit_scale_mhz" || name == "kappa_c" || name == "e") {
            continue;
        }
        require_finite(get(name), name);
    }
    if (!(kappa_a > 0.0) || !(kappa_b > 0.0) || !(kappa_m > 0.0)) {
        throw InvalidParameterError("SystemParams: decay rates must be strictly positive");
    }
    if (e_l < 0.0 || e_r < 0.0 || o_drive < 0.0) {
        throw InvalidParameterError(
            "SystemParams: drive amplitudes must be non-negative (the phase lives in phi)");
    }
    if (unit_scale_mhz && !(*unit_scale_mhz > 0.0)) {
        throw InvalidParameterError("SystemParams: unit_scale_mhz must be positive");
    }
}

SystemParams SystemParams::normalized() const
{
    if (!(kappa_m > 0.0)) {
        throw InvalidParameterError("SystemParams: kappa_m must be positive to normalize");
    }
    const double k = kappa_m;
    SystemParams out = *this;
    for (double* field : {&out.delta_c, &out.delta_m, &out.j, &out.g_a, &out.g_b, &out.e_l,
                          &out.e_r, &out.o_drive, &out.kappa_a, &out.kappa_b}) {
        *field /= k;
    }
    out.kappa_m = 1.0;
    if (unit_scale_mhz) {
        out.unit_scale_mhz = *unit_scale_mhz * k;
    }
    return out;
}

SystemParams SystemParams::swapped_ab() const
{
    SystemParams out = *this;
    std::swap(out.g_a, out.g_b);
    std::swap(out.e_l, out.e_r);
    std::swap(out.kappa_a, out.kappa_b);
    return out;
}

std::span<const std::string_view> SystemParams::field_names() { return kFieldNames; }

bool SystemParams::is_field(std::string_view name)
{
    for (std::string_view known : kFieldNames) {
        if (known == name) {
            return true;
        }
    }
    return false;
}

void SystemParams::set(std::string_view name, double value)
{
    if (name == "delta_c") delta_c = value;
    else if (name == "delta_m") delta_m = value;
    else if (name == "j") j = value;
    else if (name == "g_a") g_a = value;
    else if (name == "g_b") g_b = value;
    else if (name == "e_l") e_l = value;
    else if (name == "e_r") e_r = value;
    else if (name == "phi") phi = value;
    else if (name == "o_drive") o_drive = value;
    else if (name == "kappa_a") kappa_a = value;
    else if (name == "kappa_b") kappa_b = value;
    else if (name == "kappa_m") kappa_m = value;
    else if (name == "unit_scale_mhz") unit_scale_mhz = value;
    else if (name == "kappa_c") kappa_a = kappa_b = value;
    else if (name == "e") e_l = e_r = value;
    else throw InvalidParameterError("SystemParams: unknown parameter '" + std::string(name) + "'");
}

double SystemParams::get(std::string_view name) const
{
    if (name == "delta_c") return delta_c;
    if (name == "delta_m") return delta_m;
    if (name == "j") return j;
    if (name == "g_a") return g_a;
    if (name == "g_b") return g_b;
    if (name == "e_l") return e_l;
    if (name == "e_r") return e_r;
    if (name == "phi") return phi;
    if (name == "o_drive") return o_drive;
    if (name == "kappa_a") return kappa_a;
    if (name == "kappa_b") return kappa_b;
    if (name == "kappa_m") return kappa_m;
    if (name == "unit_scale_mhz") return unit_scale_mhz.value_or(std::nan(""));
    if (name == "kappa_c") {
        if (!symmetric_cavity()) {
            throw UnsupportedAsymmetryError("SystemParams: kappa_c undefined when kappa_a != kappa_b");
        }
        return kappa_a;
    }
    if (name == "e") {
        if (!symmetric_drive()) {
            throw UnsupportedAsymmetryError("SystemParams: e undefined when e_l != e_r");
        }
        return e_l;
    }
    throw InvalidParameterError("SystemParams: unknown parameter '" + std::string(name) + "'");
}

ComplexDetunings complex_detunings(const SystemParams& params)
{
    if (!params.symmetric_cavity()) {
        throw UnsupportedAsymmetryError(
            "closed-form expressions assume kappa_a == kappa_b (got " +
            std::to_string(params.kappa_a) + " and " + std::to_string(params.kappa_b) + ")");
    }
    return ComplexDetunings{complex(params.delta_c, -0.5 * params.kappa_a),
                            complex(params.delta_m, -0.5 * params.kappa_m)};
}

Operator build_h_r(const SystemParams& params, const FockSpace& space)
{
    require_three_mode(space);
    const ModeOperators ops = ModeOperators::on(space);
    const Operator ad = ops.a.adjoint();
    const Operator md = ops.m.adjoint();
    const Operator bd = ops.b.adjoint();

    const complex pump = std::polar(1.0, params.phi);
    const complex pump_conj = std::conj(pump);

    Operator h = params.delta_c * (ad * ops.a + bd * ops.b);
    h += params.delta_m * (md * ops.m);
    h += params.j * (ad * ops.b + bd * ops.a);
    h += params.g_a * (ad * ops.m + md * ops.a);
    h += params.g_b * (bd * ops.m + md * ops.b);
    h += params.e_l * (pump * (ad * ad) + pump_conj * (ops.a * ops.a));
    h += params.e_r * (pump * (bd * bd) + pump_conj * (ops.b * ops.b));
    h += params.o_drive * (md + ops.m);
    return h;
}

Operator build_h_eff(const SystemParams& params, const FockSpace& space)
{
    Operator h = build_h_r(params, space);
    const complex minus_half_i(0.0, -0.5);
    h += (minus_half_i * params.kappa_a) * number(Mode::a, space);
    h += (minus_half_i * params.kappa_b) * number(Mode::b, space);
    h += (minus_half_i * params.kappa_m) * number(Mode::m, space);
    return h;
}

} // namespace chiralpb
