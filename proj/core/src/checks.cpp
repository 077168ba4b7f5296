// checks.cpp: invariant suite over random parameter draws.

#include "chiralpb/checks.hpp"

#include "chiralpb/errors.hpp"
#include "chiralpb/liouville.hpp"
#include "chiralpb/truncated.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace chiralpb {

namespace {

std::string sci(double v)
{
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << v;
    return os.str();
}

CheckResult bounded(std::string name, double worst, double tol)
{
    return {std::move(name), worst <= tol, "worst " + sci(worst) + " (tol " + sci(tol) + ")"};
}

double rel(complex x, complex ref, double floor)
{
    return std::abs(x - ref) / std::max(std::abs(ref), floor);
}

CheckResult check_commutator()
{
    const std::size_t n = 6;
    const Matrix a = destroy(n).matrix();
    const Matrix c = a * a.adjoint() - a.adjoint() * a;
    double worst = 0.0;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        const auto i = static_cast<Eigen::Index>(k);
        worst = std::max(worst, std::abs(c(i, i) - 1.0));
    }
    return bounded("[a, a^dag] = 1 below the cutoff", worst, 1e-14);
}

CheckResult check_hermitian(std::mt19937_64& rng)
{
    double worst = 0.0;
    const FockSpace space = FockSpace::three_mode(2);
    for (int t = 0; t < 10; ++t) {
        const Matrix h = build_h_r(random_params(rng), space).matrix();
        worst = std::max(worst, (h - h.adjoint()).cwiseAbs().maxCoeff());
    }
    return bounded("H_r is Hermitian", worst, 1e-14);
}

CheckResult check_trace_preservation(std::mt19937_64& rng)
{
    double worst = 0.0;
    const FockSpace space = FockSpace::three_mode(2);
    const auto side = static_cast<Eigen::Index>(space.dimension());
    for (int t = 0; t < 5; ++t) {
        const Superoperator l = build_model_liouvillian(random_params(rng), space);
        // Tr(L x) = sum of the population rows of L.
        Eigen::RowVectorXcd trace_row = Eigen::RowVectorXcd::Zero(side * side);
        for (Eigen::Index k = 0; k < side; ++k) {
            trace_row(k * side + k) = 1.0;
        }
        const Eigen::RowVectorXcd tr = trace_row * l.matrix();
        worst = std::max(worst, tr.cwiseAbs().maxCoeff() / std::max(1.0, l.max_norm()));
    }
    return bounded("Liouvillian preserves the trace", worst, 1e-12);
}

std::vector<CheckResult> check_steady_states(std::mt19937_64& rng)
{
    double residual = 0.0;
    double herm = 0.0;
    double neg = 0.0;
    double trace = 0.0;
    const FockSpace space = FockSpace::three_mode(2);
    for (int t = 0; t < 5; ++t) {
        const Superoperator l = build_model_liouvillian(random_params(rng), space);
        const DensityMatrix rho = steady_state(l);
        residual = std::max(residual, steady_state_residual(l, rho));
        herm = std::max(herm, rho.hermiticity_error());
        neg = std::max(neg, -rho.min_eigenvalue());
        trace = std::max(trace, std::abs(rho.trace() - 1.0));
    }
    return {bounded("steady-state residual", residual, 1e-10),
            bounded("steady state is Hermitian", herm, 1e-12),
            bounded("steady state is positive", std::max(neg, 0.0), 1e-10),
            bounded("steady state has unit trace", trace, 1e-12)};
}

CheckResult check_closed_form(std::mt19937_64& rng)
{
    double worst = 0.0;
    for (int t = 0; t < 50; ++t) {
        const SystemParams p = random_params(rng);
        const auto direct = truncated_solve(p).as_array();
        const auto closed = closed_form_amplitudes(p).as_array();
        double scale = 0.0;
        for (const complex& c : direct) scale = std::max(scale, std::abs(c));
        for (std::size_t k = 0; k < direct.size(); ++k) {
            worst = std::max(worst, rel(closed[k], direct[k], 1e-14 * scale));
        }
    }
    return bounded("closed-form amplitudes match the direct solve", worst, 1e-8);
}

CheckResult check_optimal_zero(std::mt19937_64& rng)
{
    double worst = 0.0;
    for (int t = 0; t < 20; ++t) {
        SystemParams p = random_params(rng);
        p.e_l = p.e_r = 0.0;
        const complex undriven = closed_form_amplitudes(p).c200;
        const SystemParams driven = with_drive(p, optimal_drive(p));
        worst = std::max(worst, std::abs(closed_form_amplitudes(driven).c200) / std::abs(undriven));
    }
    return bounded("optimal drive cancels c200", worst, 1e-12);
}

CheckResult check_chirality(std::mt19937_64& rng)
{
    double worst = 0.0;
    const FockSpace space = FockSpace::three_mode(2);
    for (int t = 0; t < 3; ++t) {
        const SystemParams p = random_params(rng, 0.05, 0.01);
        const DensityMatrix fwd = steady_state(build_model_liouvillian(p, space));
        const DensityMatrix rev = steady_state(build_model_liouvillian(p.swapped_ab(), space));
        const double ga = g2_zero(fwd, Mode::a);
        worst = std::max(worst, std::abs(ga - g2_zero(rev, Mode::b)) / ga);
    }
    return bounded("a <-> b swap exchanges g2_a and g2_b", worst, 1e-8);
}

CheckResult check_periodicity(std::mt19937_64& rng)
{
    double worst = 0.0;
    for (int t = 0; t < 10; ++t) {
        SystemParams p = random_params(rng);
        const auto base = closed_form_amplitudes(p).as_array();
        p.phi += 2.0 * std::numbers::pi;
        const auto shifted = closed_form_amplitudes(p).as_array();
        for (std::size_t k = 0; k < base.size(); ++k) {
            worst = std::max(worst, rel(shifted[k], base[k], 1e-300));
        }
    }
    return bounded("amplitudes are 2 pi periodic in phi", worst, 1e-12);
}

} // namespace

SystemParams random_params(std::mt19937_64& rng, double o_drive, double e)
{
    std::uniform_real_distribution<double> sym(-5.0, 5.0);
    std::uniform_real_distribution<double> rate(0.5, 5.0);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    SystemParams p;
    p.g_a = sym(rng);
    p.g_b = sym(rng);
    p.j = sym(rng);
    p.delta_c = sym(rng);
    p.delta_m = sym(rng);
    p.kappa_a = p.kappa_b = rate(rng);
    p.kappa_m = 1.0;
    p.phi = angle(rng);
    p.o_drive = o_drive;
    p.e_l = p.e_r = e;
    return p;
}

std::vector<CheckResult> run_invariant_checks(std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<CheckResult> out;
    auto guarded = [&](auto&& fn) {
        try {
            auto r = fn();
            if constexpr (std::is_same_v<decltype(r), CheckResult>) {
                out.push_back(std::move(r));
            } else {
                out.insert(out.end(), r.begin(), r.end());
            }
        } catch (const Error& e) {
            out.push_back({"(check aborted)", false, e.what()});
        }
    };
    guarded([] { return check_commutator(); });
    guarded([&] { return check_hermitian(rng); });
    guarded([&] { return check_trace_preservation(rng); });
    guarded([&] { return check_steady_states(rng); });
    guarded([&] { return check_closed_form(rng); });
    guarded([&] { return check_optimal_zero(rng); });
    guarded([&] { return check_chirality(rng); });
    guarded([&] { return check_periodicity(rng); });
    return out;
}

} // namespace chiralpb
