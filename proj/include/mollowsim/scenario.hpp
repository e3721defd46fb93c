#pragma once

#include <optional>
#include <string>

#include "mollowsim/core.hpp"
#include "mollowsim/reservoir.hpp"

namespace mollowsim {

/// One scan axis: "eta" (sideband asymmetry), "alpha" (detection angle),
/// "delta" (detection phase) or "time".
struct ScanSpec {
    std::string axis;
    double min = 0.0;
    double max = 0.0;
    int points = 2;
    bool log_spacing = false;
};

struct PatternSpec {
    BandId band = BandId::CB;
    std::optional<double> z; // explicit fringe contrast; empty = steady state
};

struct G2Spec {
    enum class Mode { Diagonal, Map, WeakField };
    Mode mode = Mode::Diagonal;
    BandId band = BandId::CB;
};

struct EvolveSpec {
    double t_final = 10.0;
    double dt = 0.0; // 0 = integrator default
    BlochState initial;
    int samples = 101;
};

struct OutputSpec {
    std::string format = "csv"; // csv | tsv (gnuplot-friendly)
};

/// A fully resolved run configuration. Parsed from strict JSON: unknown keys
/// are errors, so typos in physics parameters cannot pass silently.
struct Scenario {
    DriveParams drive{100.0, 0.0, 1e8};
    ReservoirProfile reservoir = ReservoirProfile::flat(1.0);
    CouplingModel coupling = CouplingModel::Off;
    Geometry geometry;
    std::optional<ScanSpec> scan;
    PatternSpec pattern;
    G2Spec g2;
    EvolveSpec evolve;
    OutputSpec output;
    std::string normalized; // canonical single-line form, echoed into outputs
};

/// Parses a scenario from JSON text. Throws ConfigError with key/line
/// context on malformed input.
Scenario parse_scenario(const std::string& json_text);

/// Loads and parses a scenario file.
Scenario load_scenario(const std::string& path);

} // namespace mollowsim
