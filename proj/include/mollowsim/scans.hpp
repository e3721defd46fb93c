#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mollowsim/scenario.hpp"

namespace mollowsim {

/// Tabular result of a parameter sweep. Missing values are NaN and are
/// written as "nan" tokens.
struct ScanResult {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    std::string scenario_echo; // normalized scenario, for the header block
};

/// Renders the table with a '#'-prefixed header block recording the full
/// scenario. Deterministic: identical scenarios produce identical bytes.
std::string format_table(const ScanResult& result, const OutputSpec& output);

/// Sideband-asymmetry sweep at theta = pi/4, zeta = 0: columns
/// [eta, v_cb_pipeline, v_cb_closed_form, abs_diff].
ScanResult run_scan_eta(const Scenario& scenario);

/// Chain interference pattern: columns [alpha, intensity_over_n2].
ScanResult run_pattern(const Scenario& scenario);

/// Second-order correlations. Diagonal mode emits
/// [delta, g2_strong, g2_weak]; map mode the delta1 x delta2 surface of the
/// configured band; weak_field mode [delta, g2_weak].
ScanResult run_g2(const Scenario& scenario);

/// Time evolution of the Bloch vector: columns [t, x, y, z].
ScanResult run_evolve(const Scenario& scenario);

/// Point evaluation of the steady state: one row with the Bloch vector,
/// populations, visibilities and eta.
ScanResult run_steady(const Scenario& scenario);

/// Human-readable validity report for the configured scenario.
std::string run_validate(const Scenario& scenario);

/// Runs the oracle equivalence suite, printing one pass/fail line per check.
/// Returns the number of failed checks.
int run_verify(std::ostream& out);

/// Number of worker threads scans may use: SIM_THREADS when set, otherwise
/// the hardware concurrency.
int scan_thread_count();

} // namespace mollowsim
