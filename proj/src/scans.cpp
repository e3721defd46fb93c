#include "mollowsim/scans.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <functional>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include "mollowsim/dynamics.hpp"
#include "mollowsim/errors.hpp"
#include "mollowsim/observables.hpp"

namespace mollowsim {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

std::vector<double> make_grid(double min, double max, int points, bool log) {
    std::vector<double> grid(points);
    if (log) {
        const double lmin = std::log(min);
        const double lmax = std::log(max);
        for (int i = 0; i < points; ++i)
            grid[i] = std::exp(lmin + (lmax - lmin) * i / (points - 1));
    } else {
        for (int i = 0; i < points; ++i)
            grid[i] = min + (max - min) * i / (points - 1);
    }
    return grid;
}

ScanSpec scan_or_default(const Scenario& scenario, const std::string& axis,
                         const ScanSpec& fallback) {
    if (!scenario.scan)
        return fallback;
    if (scenario.scan->axis != axis)
        throw ConfigError("this command scans axis \"" + axis +
                          "\" but the scenario configures axis \"" +
                          scenario.scan->axis + "\"");
    return *scenario.scan;
}

// Evaluates fn(i) for i in [0, n) on up to scan_thread_count() workers.
// Results must be written into per-index slots; rows stay in axis order.
void parallel_for(int n, const std::function<void(int)>& fn) {
    const int workers = std::min(scan_thread_count(), n);
    if (workers <= 1) {
        for (int i = 0; i < n; ++i)
            fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::mutex failure_mutex;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (int i = w; i < n; i += workers)
                    fn(i);
            } catch (...) {
                const std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        });
    }
    for (auto& t : pool)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
}

CollectivePopulations pipeline_populations(const Scenario& scenario,
                                           const DressedFrame& frame) {
    const BlochCoefficients coeffs = coefficients(
        frame, scenario.reservoir, scenario.coupling, scenario.geometry);
    return populations_from_xyz(steady_state(coeffs));
}

} // namespace

int scan_thread_count() {
    if (const char* env = std::getenv("SIM_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1)
            return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

std::string format_table(const ScanResult& result, const OutputSpec& output) {
    const char sep = output.format == "tsv" ? '\t' : ',';
    std::ostringstream out;
    out << "# mollowsim table\n";
    out << "# scenario: " << result.scenario_echo << "\n";
    out << "# columns: ";
    for (std::size_t i = 0; i < result.columns.size(); ++i)
        out << (i ? "," : "") << result.columns[i];
    out << "\n";
    if (output.format == "csv") {
        for (std::size_t i = 0; i < result.columns.size(); ++i)
            out << (i ? "," : "") << result.columns[i];
        out << "\n";
    }
    for (const auto& row : result.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i)
                out << sep;
            out << format_double(row[i]);
        }
        out << "\n";
    }
    return out.str();
}

ScanResult run_scan_eta(const Scenario& scenario) {
    const ScanSpec spec = scan_or_default(
        scenario, "eta", {"eta", 1e-3, 1e3, 200, /*log_spacing=*/true});
    if (!(spec.min > 0.0))
        throw ConfigError("scan-eta requires min > 0");
    const std::vector<double> grid =
        make_grid(spec.min, spec.max, spec.points, spec.log_spacing);

    ScanResult result;
    result.scenario_echo = "command=scan-eta " + scenario.normalized;
    result.columns = {"eta", "v_cb_pipeline", "v_cb_closed_form", "abs_diff"};
    result.rows.resize(grid.size());
    parallel_for(static_cast<int>(grid.size()), [&](int i) {
        const double value = grid[i];
        const BlochCoefficients coeffs = coefficients_from_rates(
            1.0, value, 1.0, 0.0, 0.0, 0.0, pi / 4);
        const VisibilitySet vis =
            visibilities(populations_from_xyz(steady_state(coeffs)));
        const double closed = eta_visibility_closed_form(value);
        result.rows[i] = {value, vis.cb, closed, std::abs(vis.cb - closed)};
    });
    return result;
}

ScanResult run_pattern(const Scenario& scenario) {
    const ScanSpec spec =
        scan_or_default(scenario, "alpha", {"alpha", 0.0, pi, 2001, false});
    const DressedFrame frame = dressed_frame(scenario.drive);
    const Geometry& geom = scenario.geometry;
    const int n = geom.n_atoms;

    ScanResult result;
    result.scenario_echo = "command=pattern " + scenario.normalized;
    result.columns = {"alpha", "intensity_over_n2"};
    result.rows.resize(spec.points);
    const std::vector<double> grid =
        make_grid(spec.min, spec.max, spec.points, spec.log_spacing);

    if (scenario.pattern.band == BandId::CB) {
        double z;
        if (scenario.pattern.z) {
            z = *scenario.pattern.z;
        } else {
            const BlochState steady = steady_state(coefficients(
                frame, scenario.reservoir, scenario.coupling, geom));
            populations_from_xyz(steady); // physicality gate
            z = steady.z;
        }
        parallel_for(spec.points, [&](int i) {
            const double delta =
                detection_phase_at(geom, BandId::CB, frame, grid[i]);
            result.rows[i] = {grid[i],
                              chain_intensity(n, z, delta) / (n * n)};
        });
        return result;
    }

    // Sideband patterns follow the two-atom intensities.
    if (n != 2)
        throw ConfigError("pattern: LB/RB bands are defined for n_atoms = 2");
    if (scenario.pattern.z)
        throw ConfigError(
            "pattern: explicit z applies to the CB band only; sidebands need "
            "the full steady-state populations");
    const CollectivePopulations pops = pipeline_populations(scenario, frame);
    parallel_for(spec.points, [&](int i) {
        const double value = band_intensity_two_atom(
            scenario.pattern.band, pops, frame, geom, grid[i]);
        result.rows[i] = {grid[i], value / (n * n)};
    });
    return result;
}

ScanResult run_g2(const Scenario& scenario) {
    const ScanSpec spec = scan_or_default(
        scenario, "delta", {"delta", 0.0, 4.0 * pi, 801, false});
    const std::vector<double> grid =
        make_grid(spec.min, spec.max, spec.points, spec.log_spacing);

    ScanResult result;
    result.scenario_echo = "command=g2 " + scenario.normalized;

    const CollectivePopulations uniform{0.25, 0.25, 0.25, 0.25};
    const VisibilitySet uniform_vis = visibilities(uniform);
    const double gamma_center =
        scenario.reservoir.gamma_at(scenario.drive.carrier);
    const double drive_ratio = scenario.drive.rabi / gamma_center;

    switch (scenario.g2.mode) {
    case G2Spec::Mode::Diagonal: {
        result.columns = {"delta", "g2_strong", "g2_weak"};
        result.rows.resize(spec.points);
        parallel_for(spec.points, [&](int i) {
            double strong = kNan, weak = kNan;
            try {
                strong = g2_band(BandId::CB, uniform, uniform_vis, grid[i],
                                 grid[i]);
            } catch (const SingularCorrelationError&) {
            }
            try {
                weak = g2_weak_field(drive_ratio, grid[i]);
            } catch (const SingularCorrelationError&) {
            }
            result.rows[i] = {grid[i], strong, weak};
        });
        return result;
    }
    case G2Spec::Mode::WeakField: {
        result.columns = {"delta", "g2_weak"};
        result.rows.resize(spec.points);
        parallel_for(spec.points, [&](int i) {
            double weak = kNan;
            try {
                weak = g2_weak_field(drive_ratio, grid[i]);
            } catch (const SingularCorrelationError&) {
            }
            result.rows[i] = {grid[i], weak};
        });
        return result;
    }
    case G2Spec::Mode::Map: {
        if (static_cast<long long>(spec.points) * spec.points > 1000000)
            throw ConfigError(
                "g2 map: points^2 rows exceed 1000000; reduce scan.points");
        const DressedFrame frame = dressed_frame(scenario.drive);
        const CollectivePopulations pops =
            pipeline_populations(scenario, frame);
        const VisibilitySet vis = visibilities(pops);
        result.columns = {"delta_1", "delta_2", "g2"};
        result.rows.resize(static_cast<std::size_t>(spec.points) *
                           spec.points);
        parallel_for(spec.points, [&](int i) {
            for (int j = 0; j < spec.points; ++j) {
                double value = kNan;
                try {
                    value = g2_band(scenario.g2.band, pops, vis, grid[i],
                                    grid[j]);
                } catch (const SingularCorrelationError&) {
                }
                result.rows[static_cast<std::size_t>(i) * spec.points + j] = {
                    grid[i], grid[j], value};
            }
        });
        return result;
    }
    }
    throw ConfigError("g2: unknown mode");
}

ScanResult run_evolve(const Scenario& scenario) {
    const DressedFrame frame = dressed_frame(scenario.drive);
    const BlochCoefficients coeffs = coefficients(
        frame, scenario.reservoir, scenario.coupling, scenario.geometry);
    populations_from_xyz(scenario.evolve.initial); // physicality gate
    const double dt =
        scenario.evolve.dt > 0.0 ? scenario.evolve.dt : default_step(coeffs);

    const int samples = scenario.evolve.samples;
    const double t_final = scenario.evolve.t_final;

    ScanResult result;
    result.scenario_echo = "command=evolve " + scenario.normalized;
    result.columns = {"t", "x", "y", "z"};
    result.rows.reserve(samples);
    BlochState state = scenario.evolve.initial;
    double t_prev = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double t = t_final * i / (samples - 1);
        state = evolve(state, coeffs, t - t_prev, dt);
        t_prev = t;
        result.rows.push_back({t, state.x, state.y, state.z});
    }
    return result;
}

ScanResult run_steady(const Scenario& scenario) {
    const DressedFrame frame = dressed_frame(scenario.drive);
    const BlochCoefficients coeffs = coefficients(
        frame, scenario.reservoir, scenario.coupling, scenario.geometry);
    const BlochState steady = steady_state(coeffs);
    const CollectivePopulations pops = populations_from_xyz(steady);
    const VisibilitySet vis = visibilities(pops);

    ScanResult result;
    result.scenario_echo = "command=steady " + scenario.normalized;
    result.columns = {"x",        "y",        "z",        "sigma_ee",
                      "sigma_ss", "sigma_aa", "sigma_gg", "v_cb",
                      "v_lb",     "v_rb",     "eta"};
    result.rows.push_back({steady.x, steady.y, steady.z, pops.ee, pops.ss,
                           pops.aa, pops.gg, vis.cb, vis.lb, vis.rb,
                           eta(scenario.reservoir, frame)});
    return result;
}

std::string run_validate(const Scenario& scenario) {
    const DressedFrame frame = dressed_frame(scenario.drive);
    const ValidityReport report =
        validity_check(frame, scenario.reservoir, scenario.coupling,
                       scenario.geometry);
    std::ostringstream out;
    out << "theta = " << format_double(frame.theta) << "\n";
    out << "tilde_omega = " << format_double(frame.tilde_omega) << "\n";
    out << "omega_minus = " << format_double(frame.omega_minus) << "\n";
    out << "omega_plus = " << format_double(frame.omega_plus) << "\n";
    out << "eta = " << format_double(eta(scenario.reservoir, frame)) << "\n";
    for (const auto& [name, value] : report.ratios)
        out << "ratio " << name << " = " << format_double(value) << "\n";
    out << "strong_field_ok = " << (report.strong_field_ok ? "yes" : "no")
        << "\n";
    out << "dipole_dipole_warning = "
        << (report.dipole_dipole_warning ? "yes" : "no") << "\n";
    const double carrier_ratio = 2.0 * frame.tilde_omega / frame.carrier();
    out << "sideband_carrier_ratio = " << format_double(carrier_ratio) << "\n";
    if (carrier_ratio > 0.1)
        out << "warning: 2*tilde_omega/carrier = "
            << format_double(carrier_ratio)
            << " > 0.1; sideband wavevector corrections are significant\n";
    if (!report.strong_field_ok)
        out << "warning: strong-field (secular) conditions not met; "
               "band-resolved observables are unreliable\n";
    if (report.dipole_dipole_warning)
        out << "warning: k_r < 2*pi; dipole-dipole interaction may split "
               "spectral lines\n";
    return out.str();
}

} // namespace mollowsim
