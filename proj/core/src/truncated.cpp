// truncated.cpp: two-excitation amplitudes, closed forms, optimal drive.

#include "chiralpb/truncated.hpp"

#include "chiralpb/errors.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <numbers>
#include <string>

namespace chiralpb {

namespace {

constexpr double kSingularThreshold = 1e-12;

double largest(std::initializer_list<complex> terms)
{
    double m = 0.0;
    for (const complex& t : terms) {
        m = std::max(m, std::abs(t));
    }
    return m;
}

// |value| small against the terms it was summed from.
bool cancels(const complex& value, std::initializer_list<complex> terms)
{
    return std::abs(value) <= kSingularThreshold * largest(terms);
}

void require_closed_form_params(const SystemParams& params)
{
    params.validate();
    if (!params.symmetric_drive()) {
        throw UnsupportedAsymmetryError("closed-form amplitudes assume e_l == e_r");
    }
}

complex pair_numerator_a(const CoefficientSet& c, const ComplexDetunings& dt, double g_a,
                         double g_b, double j)
{
    const double ga2 = g_a * g_a;
    return dt.dt_c * ga2 * ga2 - 2.0 * j * g_b * ga2 * g_a + c.k2 * ga2 + c.k1 * g_a + c.k0;
}

void check_p_q(const CoefficientSet& c, const ComplexDetunings& dt, const SystemParams& s)
{
    const double ga = s.g_a, gb = s.g_b, j = s.j;
    const complex dc = dt.dt_c, dm = dt.dt_m;
    if (cancels(c.p, {2.0 * ga * gb * j, ga * ga * dc, gb * gb * dc, (j - dc) * (j + dc) * dm})) {
        throw SingularDenominatorError("P vanishes: one-excitation resonance");
    }
    if (cancels(c.q, {2.0 * ga * gb * j, ga * ga * (dc + dm), gb * gb * (dc + dm),
                      2.0 * dc * (-j + dc + dm) * (j + dc + dm)})) {
        throw SingularDenominatorError("Q vanishes: two-excitation resonance");
    }
}

} // namespace

// ---------------------------------------------------------------- Amplitudes

std::array<complex, 10> Amplitudes::as_array() const
{
    return {c000, c100, c010, c001, c110, c101, c011, c200, c020, c002};
}

complex Amplitudes::at(std::size_t n_a, std::size_t n_m, std::size_t n_b) const
{
    const std::size_t key = n_a * 100 + n_m * 10 + n_b;
    switch (key) {
    case 0: return c000;
    case 100: return c100;
    case 10: return c010;
    case 1: return c001;
    case 110: return c110;
    case 101: return c101;
    case 11: return c011;
    case 200: return c200;
    case 20: return c020;
    case 2: return c002;
    default: break;
    }
    throw ShapeError("Amplitudes::at: state outside the two-excitation subspace");
}

// ------------------------------------------------------------ CoefficientSet

CoefficientSet coefficient_set(const SystemParams& params)
{
    const ComplexDetunings dt = complex_detunings(params);
    const complex dc = dt.dt_c;
    const complex dm = dt.dt_m;
    const double ga = params.g_a;
    const double gb = params.g_b;
    const double j = params.j;
    const double ga2 = ga * ga;
    const double gb2 = gb * gb;
    const double j2 = j * j;
    const complex dc2 = dc * dc;
    const complex s = dc + dm;

    CoefficientSet c;
    c.z = gb * j - ga * dc;
    c.p = -2.0 * ga * gb * j + ga2 * dc + gb2 * dc + (j - dc) * (j + dc) * dm;
    c.q = 2.0 * ga * gb * j + ga2 * s + gb2 * s - 2.0 * dc * (-j + s) * (j + s);
    c.m_coef = -j2 + dc2;
    c.y = ga * j - gb * dc;

    c.k2 = j2 * dm + (gb2 - dc * s) * (2.0 * dc + dm);
    c.k1 = 2.0 * gb * j * (gb2 + 2.0 * dc2);
    c.k0 = gb2 * gb2 * s - gb2 * (j2 * dm + dc * s * (2.0 * dc + 3.0 * dm)) +
           2.0 * dc2 * dm * (-j + s) * (j + s);

    c.a2 = gb * j * (-2.0 * dc + dm);
    c.a1 = dc * dm * (-gb2 + 2.0 * (j2 + dc * s));
    c.a0 = gb * j * (2.0 * dc + dm) * (gb2 - 2.0 * dc * dm);

    c.b2 = ga * j * (-2.0 * dc + dm);
    c.b1 = dc * dm * (-ga2 + 2.0 * (j2 + dc * s));
    c.b0 = ga * j * (2.0 * dc + dm) * (ga2 - 2.0 * dc * dm);

    // F2 carries a single power of J; this is what the amplitude equations give.
    c.f2 = -j * (2.0 * dc2 + 2.0 * dc * dm + dm * dm);
    c.f1 = j2 * (4.0 * dc - 2.0 * dm) - 2.0 * dc * dm * s;
    c.f0 = 2.0 * j * dc * dm * (-j2 + s * s);

    c.r1 = -2.0 * j2 * dc - 2.0 * dc2 * dc - 2.0 * dc2 * dm;
    c.r0 = 8.0 * j * dc2 + 4.0 * j * dc * dm;

    c.l2 = j2 * dm + (ga2 - dc * s) * (2.0 * dc + dm);
    c.l1 = 2.0 * ga * j * (ga2 + 2.0 * dc2);
    c.l0 = ga2 * ga2 * s - ga2 * (j2 * dm + dc * s * (2.0 * dc + 3.0 * dm)) +
           2.0 * dc2 * dm * (-j + s) * (j + s);
    return c;
}

// ----------------------------------------------------------- truncated_solve

Amplitudes truncated_solve(const SystemParams& params)
{
    params.validate();
    const FockSpace space = FockSpace::three_mode(2);
    const Matrix h = build_h_eff(params, space).matrix();

    auto at = [&](std::size_t na, std::size_t nm, std::size_t nb) {
        return static_cast<Eigen::Index>(space.index({na, nm, nb}));
    };
    const Eigen::Index vac = at(0, 0, 0);
    const std::array<Eigen::Index, 3> one = {at(1, 0, 0), at(0, 1, 0), at(0, 0, 1)};
    const std::array<Eigen::Index, 6> two = {at(1, 1, 0), at(1, 0, 1), at(0, 1, 1),
                                             at(2, 0, 0), at(0, 2, 0), at(0, 0, 2)};

    // One-excitation rows: couplings within the block, sourced by C_000 = 1.
    // Terms pulling in two-excitation amplitudes are higher order and dropped.
    Eigen::Matrix3cd block1;
    Eigen::Vector3cd src1;
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
            block1(r, c) = h(one[r], one[c]);
        }
        src1(r) = -h(one[r], vac);
    }
    Eigen::PartialPivLU<Eigen::Matrix3cd> lu1(block1);
    if (!(lu1.rcond() > kSingularThreshold)) {
        throw ResonanceSingularityError("singular amplitude equations", "one-excitation");
    }
    const Eigen::Vector3cd c1 = lu1.solve(src1);

    // Two-excitation rows: sourced by the one-excitation amplitudes (probe)
    // and by C_000 (two-photon drive).
    Eigen::Matrix<complex, 6, 6> block2;
    Eigen::Matrix<complex, 6, 1> src2;
    for (int r = 0; r < 6; ++r) {
        for (int c = 0; c < 6; ++c) {
            block2(r, c) = h(two[r], two[c]);
        }
        complex s = h(two[r], vac);
        for (int c = 0; c < 3; ++c) {
            s += h(two[r], one[c]) * c1(c);
        }
        src2(r) = -s;
    }
    Eigen::PartialPivLU<Eigen::Matrix<complex, 6, 6>> lu2(block2);
    if (!(lu2.rcond() > kSingularThreshold)) {
        throw ResonanceSingularityError("singular amplitude equations", "two-excitation");
    }
    const Eigen::Matrix<complex, 6, 1> c2 = lu2.solve(src2);

    Amplitudes amps;
    amps.c000 = 1.0;
    amps.c100 = c1(0);
    amps.c010 = c1(1);
    amps.c001 = c1(2);
    amps.c110 = c2(0);
    amps.c101 = c2(1);
    amps.c011 = c2(2);
    amps.c200 = c2(3);
    amps.c020 = c2(4);
    amps.c002 = c2(5);
    return amps;
}

// ---------------------------------------------------- closed_form_amplitudes

Amplitudes closed_form_amplitudes(const SystemParams& params)
{
    require_closed_form_params(params);
    const ComplexDetunings dt = complex_detunings(params);
    const CoefficientSet c = coefficient_set(params);
    check_p_q(c, dt, params);

    const complex dc = dt.dt_c;
    const complex dm = dt.dt_m;
    const double ga = params.g_a;
    const double gb = params.g_b;
    const double j = params.j;
    const double ga2 = ga * ga;
    const double gb2 = gb * gb;
    const double o = params.o_drive;
    const double o2 = o * o;
    const complex drive = std::polar(params.e_l, params.phi);
    const double sqrt2 = std::numbers::sqrt2;

    const complex p = c.p;
    const complex p2 = p * p;
    // E e^{i phi} P (poly) / Q, the drive-sourced part of every pair amplitude.
    auto pair = [&](const complex& poly) { return drive * p * poly / c.q; };

    Amplitudes amps;
    amps.c000 = 1.0;
    amps.c100 = o * c.z / p;
    amps.c010 = o * c.m_coef / p;
    amps.c001 = o * c.y / p;

    const complex poly_200 = pair_numerator_a(c, dt, ga, gb, j);
    amps.c200 = (o2 * c.z * c.z - pair(poly_200)) / (sqrt2 * p2);

    const complex poly_110 = -dc * dm * ga2 * ga + c.a2 * ga2 + c.a1 * ga + c.a0;
    amps.c110 = (o2 * c.z * c.m_coef + pair(poly_110)) / p2;

    const complex poly_101 = dm * (ga2 * ga * gb + ga * gb2 * gb) + 4.0 * j * ga2 * gb2 +
                             c.f2 * (ga2 + gb2) + c.f1 * ga * gb + c.f0;
    amps.c101 = (o2 * c.z * c.y + pair(poly_101)) / p2;

    const complex poly_011 = -dc * dm * gb2 * gb + c.b2 * gb2 + c.b1 * gb + c.b0;
    amps.c011 = (o2 * c.y * c.m_coef + pair(poly_011)) / p2;

    const complex poly_020 = dc * (ga2 * ga2 + gb2 * gb2) -
                             2.0 * j * (ga2 * ga * gb + ga * gb2 * gb) +
                             2.0 * dc * ga2 * gb2 + c.r1 * (ga2 + gb2) + c.r0 * ga * gb;
    amps.c020 = (o2 * c.m_coef * c.m_coef + pair(poly_020)) / (sqrt2 * p2);

    const complex poly_002 =
        dc * gb2 * gb2 - 2.0 * j * ga * gb2 * gb + c.l2 * gb2 + c.l1 * gb + c.l0;
    amps.c002 = (o2 * c.y * c.y - pair(poly_002)) / (sqrt2 * p2);
    return amps;
}

// --------------------------------------------------------------- g2_analytic

double g2_analytic(const Amplitudes& amps, Mode mode)
{
    complex c1;
    complex c2;
    switch (mode) {
    case Mode::a:
        c1 = amps.c100;
        c2 = amps.c200;
        break;
    case Mode::b:
        c1 = amps.c001;
        c2 = amps.c002;
        break;
    case Mode::m:
        throw InvalidParameterError("g2_analytic: defined for the cavity modes a and b only");
    }
    const double scale = largest({amps.c100, amps.c010, amps.c001});
    const double mag = std::abs(c1);
    if (mag == 0.0 || mag <= 1e-14 * scale) {
        throw UndefinedCorrelationError("g2_analytic: mode " + std::string(to_string(mode)) +
                                        " is decoupled (no single-excitation amplitude)");
    }
    const double mag2 = mag * mag;
    return 2.0 * std::norm(c2) / (mag2 * mag2);
}

// ------------------------------------------------------------- optimal_drive

DriveCondition optimal_drive(const SystemParams& params)
{
    params.validate();
    const ComplexDetunings dt = complex_detunings(params);
    const CoefficientSet c = coefficient_set(params);

    if (params.o_drive == 0.0) {
        return DriveCondition{0.0, 0.0, false};
    }

    const double ga = params.g_a;
    const double gb = params.g_b;
    const double j = params.j;
    const double ga2 = ga * ga;
    const complex pair_num = pair_numerator_a(c, dt, ga, gb, j);
    const complex denom = c.p * pair_num;
    const bool p_vanishes =
        cancels(c.p, {2.0 * ga * gb * j, ga2 * dt.dt_c, gb * gb * dt.dt_c,
                      (j - dt.dt_c) * (j + dt.dt_c) * dt.dt_m});
    const bool pair_vanishes =
        cancels(pair_num, {dt.dt_c * ga2 * ga2, 2.0 * j * gb * ga2 * ga, c.k2 * ga2, c.k1 * ga,
                           c.k0});
    if (p_vanishes || pair_vanishes || denom == complex(0.0)) {
        throw NoOptimumError("optimal_drive: the two-photon pathway decouples from mode a");
    }

    const double o2 = params.o_drive * params.o_drive;
    const complex rhs = o2 * c.z * c.z * c.q / denom;
    DriveCondition out;
    out.e_opt = std::abs(rhs);
    if (out.e_opt == 0.0) {
        out.phase_defined = false;
        return out;
    }
    out.phi_opt = std::arg(rhs);
    if (out.phi_opt <= -std::numbers::pi) {
        out.phi_opt = std::numbers::pi;
    }
    return out;
}

SystemParams with_drive(SystemParams params, const DriveCondition& drive)
{
    params.e_l = drive.e_opt;
    params.e_r = drive.e_opt;
    if (drive.phase_defined) {
        params.phi = drive.phi_opt;
    }
    return params;
}

} // namespace chiralpb
