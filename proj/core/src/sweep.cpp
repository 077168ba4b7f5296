// sweep.cpp: grid evaluation.

#include "chiralpb/sweep.hpp"

#include "chiralpb/errors.hpp"
#include "chiralpb/liouville.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

namespace chiralpb {

namespace {

constexpr double kEmpty = std::numeric_limits<double>::quiet_NaN();

double log10_or_empty(double g2)
{
    return (std::isfinite(g2) && g2 > 0.0) ? std::log10(g2) : kEmpty;
}

std::string mode_tag(Mode mode) { return std::string(to_string(mode)); }

void append_note(std::string* note, const std::string& text)
{
    if (!note) return;
    if (!note->empty()) *note += "; ";
    *note += text;
}

Amplitudes analytic_amplitudes(const SystemParams& p)
{
    if (p.symmetric_cavity() && p.symmetric_drive()) {
        return closed_form_amplitudes(p);
    }
    return truncated_solve(p);
}

} // namespace

ResolvedPoint resolve_point(const RunSpec& spec, std::span<const double> axis_values)
{
    if (axis_values.size() != spec.axes.size()) {
        throw ShapeError("resolve_point: expected " + std::to_string(spec.axes.size()) +
                         " axis values");
    }
    ResolvedPoint point{spec.base, std::nullopt};
    for (std::size_t k = 0; k < spec.axes.size(); ++k) {
        point.params.set(spec.axes[k].name, axis_values[k]);
    }
    if (spec.use_optimal_drive) {
        const DriveCondition drive = optimal_drive(point.params);
        DriveCondition applied = drive;
        applied.phase_defined = drive.phase_defined && spec.use_optimal_phase;
        point.params = with_drive(point.params, applied);
        point.drive = drive;
    }
    if (spec.reverse_field) {
        point.params = point.params.swapped_ab();
    }
    return point;
}

std::vector<std::string> sweep_columns(const RunSpec& spec)
{
    std::vector<std::string> cols;
    for (const SweepAxis& axis : spec.axes) {
        cols.push_back(axis.name);
    }
    if (spec.use_optimal_drive) {
        cols.emplace_back("e_opt");
        cols.emplace_back("phi_opt");
    }
    for (Mode mode : spec.modes) {
        const std::string x = mode_tag(mode);
        if (spec.wants_analytic()) {
            cols.push_back("g2_" + x + "_analytic");
            cols.push_back("log10_g2_" + x + "_analytic");
        }
        if (spec.wants_master()) {
            cols.push_back("g2_" + x + "_master");
            cols.push_back("log10_g2_" + x + "_master");
            cols.push_back("n_" + x + "_master");
        }
    }
    cols.emplace_back("status");
    return cols;
}

std::vector<double> evaluate_point(const RunSpec& spec, std::span<const double> axis_values,
                                   std::string* note)
{
    std::vector<double> row(axis_values.begin(), axis_values.end());
    unsigned status = kStatusOk;

    const std::size_t per_mode =
        (spec.wants_analytic() ? 2u : 0u) + (spec.wants_master() ? 3u : 0u);
    const std::size_t tail = (spec.use_optimal_drive ? 2u : 0u) + per_mode * spec.modes.size();

    ResolvedPoint point;
    try {
        point = resolve_point(spec, axis_values);
    } catch (const NoOptimumError& e) {
        status |= kStatusOptimumFailed;
        append_note(note, e.what());
    } catch (const UnsupportedAsymmetryError& e) {
        status |= kStatusOptimumFailed;
        append_note(note, e.what());
    }
    if (status & kStatusOptimumFailed) {
        row.insert(row.end(), tail, kEmpty);
        row.push_back(static_cast<double>(status));
        return row;
    }

    if (spec.use_optimal_drive) {
        row.push_back(point.drive->e_opt);
        row.push_back(point.drive->phase_defined ? point.drive->phi_opt : kEmpty);
    }

    std::optional<Amplitudes> amps;
    if (spec.wants_analytic()) {
        try {
            amps = analytic_amplitudes(point.params);
        } catch (const SolverError& e) {
            status |= kStatusAnalyticFailed;
            append_note(note, std::string("analytic: ") + e.what());
        }
    }

    std::optional<DensityMatrix> rho;
    if (spec.wants_master()) {
        try {
            const FockSpace space = FockSpace::three_mode(spec.truncation);
            rho = steady_state(build_model_liouvillian(point.params, space));
        } catch (const SolverError& e) {
            status |= kStatusMasterFailed;
            append_note(note, std::string("master: ") + e.what());
        }
    }

    for (Mode mode : spec.modes) {
        if (spec.wants_analytic()) {
            double g2 = kEmpty;
            if (amps) {
                try {
                    g2 = g2_analytic(*amps, mode);
                } catch (const UndefinedCorrelationError&) {
                    status |= kStatusUndefinedG2;
                }
            }
            row.push_back(g2);
            row.push_back(log10_or_empty(g2));
        }
        if (spec.wants_master()) {
            double g2 = kEmpty;
            double n = kEmpty;
            if (rho) {
                n = occupation(*rho, mode);
                try {
                    g2 = g2_zero(*rho, mode);
                } catch (const EmptyModeError&) {
                    status |= kStatusUndefinedG2;
                }
            }
            row.push_back(g2);
            row.push_back(log10_or_empty(g2));
            row.push_back(n);
        }
    }
    row.push_back(static_cast<double>(status));
    return row;
}

ResultTable run_sweep(const RunSpec& raw, std::size_t jobs)
{
    raw.validate();
    const RunSpec spec = raw.normalized();

    ResultTable table;
    table.columns = sweep_columns(spec);
    table.provenance.push_back("chiralpb " + std::string(library_version()));
    {
        const std::string cfg = to_config(spec);
        std::size_t pos = 0;
        while (pos < cfg.size()) {
            const std::size_t nl = cfg.find('\n', pos);
            table.provenance.push_back(cfg.substr(pos, nl - pos));
            pos = nl + 1;
        }
    }

    const std::size_t n_points = spec.point_count();
    std::vector<std::vector<double>> rows(n_points);
    std::vector<std::string> notes(n_points);

    auto axis_values = [&](std::size_t idx) {
        std::vector<double> values(spec.axes.size());
        for (std::size_t k = spec.axes.size(); k-- > 0;) {
            const std::size_t count = spec.axes[k].count;
            values[k] = spec.axes[k].value(idx % count);
            idx /= count;
        }
        return values;
    };

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        while (true) {
            const std::size_t idx = next.fetch_add(1);
            if (idx >= n_points) return;
            try {
                const auto values = axis_values(idx);
                rows[idx] = evaluate_point(spec, values, &notes[idx]);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next.store(n_points);
                return;
            }
        }
    };

    if (jobs == 0) {
        jobs = std::max(1u, std::thread::hardware_concurrency());
    }
    jobs = std::min(jobs, std::max<std::size_t>(n_points, 1));
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(jobs);
        for (std::size_t t = 0; t < jobs; ++t) {
            pool.emplace_back(worker);
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }

    for (std::size_t i = 0; i < n_points; ++i) {
        if (!notes[i].empty()) {
            table.provenance.push_back("row " + std::to_string(i) + ": " + notes[i]);
        }
        table.add_row(std::move(rows[i]));
    }
    return table;
}

} // namespace chiralpb
