// sweep.hpp: grid evaluation of a RunSpec into a ResultTable.
//
// Columns, in order:
//   one per sweep axis (its parameter value),
//   e_opt, phi_opt                             when use_optimal_drive is set,
//   per requested mode x in {a, b}:
//     g2_x_analytic, log10_g2_x_analytic       (analytic method)
//     g2_x_master, log10_g2_x_master, n_x_master   (master method)
//   status: bit mask of per-point failures (see PointStatus).
//
// A failing point leaves its affected columns empty and sets a status bit;
// the sweep itself carries on.

#pragma once

#include "chiralpb/config.hpp"
#include "chiralpb/csv.hpp"
#include "chiralpb/truncated.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace chiralpb {

enum PointStatus : unsigned {
    kStatusOk = 0,
    kStatusAnalyticFailed = 1,   // singular amplitude equations
    kStatusOptimumFailed = 2,    // no optimal drive; nothing else evaluated
    kStatusMasterFailed = 4,     // steady-state solve failed
    kStatusUndefinedG2 = 8,      // a mode is empty or decoupled, g2 left empty
};

struct ResolvedPoint {
    SystemParams params;                  // what the solvers see
    std::optional<DriveCondition> drive;  // set under use_optimal_drive
};

// Parameters at one grid point of a normalized spec: axes applied, then the
// optimal drive (computed on the forward parameters), then the field reversal.
// Propagates NoOptimumError and friends from optimal_drive.
ResolvedPoint resolve_point(const RunSpec& spec, std::span<const double> axis_values);

std::vector<std::string> sweep_columns(const RunSpec& spec);

// One table row; `note` receives a description of any failure.
std::vector<double> evaluate_point(const RunSpec& spec, std::span<const double> axis_values,
                                   std::string* note = nullptr);

// Normalizes the spec, then evaluates every grid point. jobs = 0 uses every
// hardware thread. The result does not depend on jobs.
ResultTable run_sweep(const RunSpec& spec, std::size_t jobs = 1);

} // namespace chiralpb
