// main.cpp: the chiralpb command-line tool.
//
//   chiralpb g2         --config run.cfg
//   chiralpb sweep      --config run.cfg --out run.csv --jobs 4
//   chiralpb optimal    --config run.cfg
//   chiralpb amplitudes --config run.cfg
//   chiralpb check
//
// Exit codes: 0 success, 1 validation or I/O error, 2 solver error.

#include "chiralpb/checks.hpp"
#include "chiralpb/config.hpp"
#include "chiralpb/csv.hpp"
#include "chiralpb/errors.hpp"
#include "chiralpb/liouville.hpp"
#include "chiralpb/sweep.hpp"
#include "chiralpb/truncated.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>

namespace {

using namespace chiralpb;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitSolver = 2;

struct Overrides {
    std::string config;
    std::string out;
    std::optional<std::size_t> truncation;
    std::optional<std::string> method;
    bool reverse_field{false};
    std::size_t jobs{1};
};

RunSpec load_spec(const Overrides& o)
{
    RunSpec spec = load_config(o.config);
    if (o.truncation) spec.truncation = *o.truncation;
    if (o.method) {
        if (*o.method == "analytic") spec.method = Method::analytic;
        else if (*o.method == "master") spec.method = Method::master;
        else spec.method = Method::both;
    }
    if (o.reverse_field) spec.reverse_field = true;
    if (!o.out.empty()) spec.output = o.out;
    spec.validate();
    return spec;
}

std::string num(double v)
{
    const std::string s = format_double(v);
    return s.empty() ? "n/a" : s;
}

// Single-point view of a spec: sweep axes are dropped.
RunSpec single_point(RunSpec spec)
{
    if (!spec.axes.empty()) {
        std::cerr << "note: sweep axes ignored, evaluating the base point\n";
        spec.axes.clear();
    }
    return spec.normalized();
}

int cmd_g2(const Overrides& o)
{
    const RunSpec spec = single_point(load_spec(o));
    const ResolvedPoint point = resolve_point(spec, {});
    const SystemParams& p = point.params;
    if (point.drive) {
        std::printf("e_opt      %s\n", num(point.drive->e_opt).c_str());
    }

    std::optional<Amplitudes> amps;
    if (spec.wants_analytic()) {
        amps = (p.symmetric_cavity() && p.symmetric_drive()) ? closed_form_amplitudes(p)
                                                             : truncated_solve(p);
    }
    std::optional<DensityMatrix> rho;
    if (spec.wants_master()) {
        rho = steady_state(build_model_liouvillian(p, FockSpace::three_mode(spec.truncation)));
    }

    for (Mode mode : spec.modes) {
        const std::string x(to_string(mode));
        if (amps) {
            std::string value;
            try {
                value = num(g2_analytic(*amps, mode));
            } catch (const UndefinedCorrelationError&) {
                value = "decoupled";
            }
            std::printf("g2_%s analytic  %s\n", x.c_str(), value.c_str());
        }
        if (rho) {
            std::string value;
            try {
                value = num(g2_zero(*rho, mode));
            } catch (const EmptyModeError&) {
                value = "empty";
            }
            std::printf("g2_%s master    %s  (n_%s = %s, n_max = %zu)\n", x.c_str(), value.c_str(),
                        x.c_str(), num(occupation(*rho, mode)).c_str(), spec.truncation);
        }
    }
    return kExitOk;
}

int cmd_sweep(const Overrides& o)
{
    const RunSpec spec = load_spec(o);
    const ResultTable table = run_sweep(spec, o.jobs);
    if (spec.output.empty() || spec.output == "-") {
        std::cout << to_csv(table);
    } else {
        write_csv(table, spec.output);
        std::fprintf(stderr, "wrote %zu rows to %s\n", table.rows.size(), spec.output.c_str());
    }
    return kExitOk;
}

int cmd_optimal(const Overrides& o)
{
    RunSpec spec = single_point(load_spec(o));
    const DriveCondition d = optimal_drive(spec.base);
    std::printf("e_opt    %s\n", num(d.e_opt).c_str());
    if (d.phase_defined) {
        std::printf("phi_opt  %s  (%.6f pi)\n", num(d.phi_opt).c_str(), d.phi_opt / std::numbers::pi);
    } else {
        std::printf("phi_opt  undefined (no probe)\n");
    }
    return kExitOk;
}

int cmd_amplitudes(const Overrides& o)
{
    const RunSpec spec = single_point(load_spec(o));
    const SystemParams p = resolve_point(spec, {}).params;
    const auto direct = truncated_solve(p).as_array();
    std::optional<std::array<complex, 10>> closed;
    std::string why;
    try {
        closed = closed_form_amplitudes(p).as_array();
    } catch (const Error& e) {
        why = e.what();
    }
    std::printf("%-5s %-50s %-50s %s\n", "", "closed form", "direct solve", "rel diff");
    for (std::size_t k = 0; k < direct.size(); ++k) {
        const std::string d = num(direct[k].real()) + " " + num(direct[k].imag()) + "i";
        std::string c = "n/a";
        std::string diff = "n/a";
        if (closed) {
            const complex ck = (*closed)[k];
            c = num(ck.real()) + " " + num(ck.imag()) + "i";
            const double ref = std::abs(direct[k]);
            diff = ref > 0.0 ? num(std::abs(ck - direct[k]) / ref) : num(std::abs(ck));
        }
        std::printf("%-5s %-50s %-50s %s\n", std::string(Amplitudes::labels[k]).c_str(), c.c_str(),
                    d.c_str(), diff.c_str());
    }
    if (!closed) {
        std::printf("closed form unavailable: %s\n", why.c_str());
    }
    return kExitOk;
}

int cmd_check()
{
    bool ok = true;
    for (const CheckResult& r : run_invariant_checks()) {
        std::printf("%s  %s: %s\n", r.passed ? "PASS" : "FAIL", r.name.c_str(), r.detail.c_str());
        ok = ok && r.passed;
    }
    return ok ? kExitOk : kExitSolver;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Chiral cavity-magnon photon blockade: g2, sweeps, optimal drive"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(library_version()));

    Overrides o;
    auto add_common = [&](CLI::App* sub, bool sweeps) {
        sub->add_option("--config", o.config, "Configuration file")->required()->check(CLI::ExistingFile);
        sub->add_option("--truncation", o.truncation, "Fock cutoff per mode for the master equation")
            ->check(CLI::IsMember({2, 3}));
        sub->add_option("--method", o.method, "analytic, master or both")
            ->check(CLI::IsMember({"analytic", "master", "both"}));
        sub->add_flag("--reverse-field", o.reverse_field, "Swap the roles of modes a and b");
        if (sweeps) {
            sub->add_option("--out", o.out, "CSV output path ('-' for stdout)");
            sub->add_option("--jobs", o.jobs, "Worker threads (0 = all cores)");
        }
    };

    CLI::App* g2 = app.add_subcommand("g2", "Evaluate g2(0) at one point with both methods");
    add_common(g2, false);
    CLI::App* sweep = app.add_subcommand("sweep", "Run a parameter sweep and write CSV");
    add_common(sweep, true);
    CLI::App* optimal = app.add_subcommand("optimal", "Print the optimal two-photon drive");
    add_common(optimal, false);
    CLI::App* amplitudes = app.add_subcommand("amplitudes", "Print the ten amplitudes, both routes");
    add_common(amplitudes, false);
    CLI::App* check = app.add_subcommand("check", "Run the built-in invariant suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitValidation;
    }

    try {
        if (*g2) return cmd_g2(o);
        if (*sweep) return cmd_sweep(o);
        if (*optimal) return cmd_optimal(o);
        if (*amplitudes) return cmd_amplitudes(o);
        if (*check) return cmd_check();
    } catch (const ConfigError& e) {
        std::cerr << "error: " << o.config << ": " << e.what() << '\n';
        return kExitValidation;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const SolverError& e) {
        std::cerr << "solver error: " << e.what() << '\n';
        return kExitSolver;
    }
    return kExitOk;
}
