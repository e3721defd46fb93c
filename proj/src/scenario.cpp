#include "mollowsim/scenario.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "mollowsim/errors.hpp"

namespace mollowsim {

namespace {

using nlohmann::ordered_json;

void check_keys(const ordered_json& obj, const std::string& context,
                const std::set<std::string>& allowed) {
    for (const auto& item : obj.items())
        if (allowed.find(item.key()) == allowed.end())
            throw ConfigError("unknown key \"" + item.key() + "\" in " +
                              context);
}

double get_number(const ordered_json& obj, const std::string& context,
                  const std::string& key, double fallback) {
    if (!obj.contains(key))
        return fallback;
    if (!obj[key].is_number())
        throw ConfigError(context + "." + key + " must be a number");
    return obj[key].get<double>();
}

double require_number(const ordered_json& obj, const std::string& context,
                      const std::string& key) {
    if (!obj.contains(key))
        throw ConfigError(context + " requires key \"" + key + "\"");
    if (!obj[key].is_number())
        throw ConfigError(context + "." + key + " must be a number");
    return obj[key].get<double>();
}

std::string get_string(const ordered_json& obj, const std::string& context,
                       const std::string& key, const std::string& fallback) {
    if (!obj.contains(key))
        return fallback;
    if (!obj[key].is_string())
        throw ConfigError(context + "." + key + " must be a string");
    return obj[key].get<std::string>();
}

BandId parse_band(const std::string& name, const std::string& context) {
    if (name == "CB")
        return BandId::CB;
    if (name == "LB")
        return BandId::LB;
    if (name == "RB")
        return BandId::RB;
    throw ConfigError(context + ": band must be CB, LB or RB, got \"" + name +
                      "\"");
}

DriveParams parse_drive(const ordered_json& obj) {
    check_keys(obj, "drive", {"rabi", "detuning", "carrier"});
    DriveParams drive;
    drive.rabi = get_number(obj, "drive", "rabi", 100.0);
    drive.detuning = get_number(obj, "drive", "detuning", 0.0);
    drive.carrier = get_number(obj, "drive", "carrier", 1e8);
    return drive;
}

ReservoirProfile parse_reservoir(const ordered_json& obj) {
    const std::string kind = get_string(obj, "reservoir", "kind", "flat");
    if (kind == "flat") {
        check_keys(obj, "reservoir(flat)", {"kind", "gamma0"});
        return ReservoirProfile::flat(
            get_number(obj, "reservoir", "gamma0", 1.0));
    }
    if (kind == "lorentzian_cavity") {
        check_keys(obj, "reservoir(lorentzian_cavity)",
                   {"kind", "gamma0", "coupling", "center", "width"});
        return ReservoirProfile::lorentzian_cavity(
            get_number(obj, "reservoir", "gamma0", 1.0),
            require_number(obj, "reservoir", "coupling"),
            require_number(obj, "reservoir", "center"),
            require_number(obj, "reservoir", "width"));
    }
    if (kind == "band_gap_step") {
        check_keys(obj, "reservoir(band_gap_step)",
                   {"kind", "gamma_low", "gamma_high", "edge"});
        return ReservoirProfile::band_gap_step(
            require_number(obj, "reservoir", "gamma_low"),
            require_number(obj, "reservoir", "gamma_high"),
            require_number(obj, "reservoir", "edge"));
    }
    if (kind == "tabulated") {
        check_keys(obj, "reservoir(tabulated)", {"kind", "omega", "gamma"});
        if (!obj.contains("omega") || !obj["omega"].is_array() ||
            !obj.contains("gamma") || !obj["gamma"].is_array())
            throw ConfigError(
                "reservoir(tabulated) requires omega and gamma arrays");
        return ReservoirProfile::tabulated(
            obj["omega"].get<std::vector<double>>(),
            obj["gamma"].get<std::vector<double>>());
    }
    throw ConfigError("reservoir.kind must be flat, lorentzian_cavity, "
                      "band_gap_step or tabulated, got \"" +
                      kind + "\"");
}

CouplingModel parse_coupling(const ordered_json& obj) {
    check_keys(obj, "coupling", {"model"});
    const std::string model = get_string(obj, "coupling", "model", "off");
    if (model == "off")
        return CouplingModel::Off;
    if (model == "scalar_sinc")
        return CouplingModel::ScalarSinc;
    throw ConfigError("coupling.model must be off or scalar_sinc, got \"" +
                      model + "\"");
}

Geometry parse_geometry(const ordered_json& obj) {
    check_keys(obj, "geometry", {"k_r", "n_atoms", "alpha_1", "alpha_2"});
    Geometry geom;
    geom.k_r = get_number(obj, "geometry", "k_r", 20.0 * pi);
    geom.alpha_1 = get_number(obj, "geometry", "alpha_1", pi / 2);
    geom.alpha_2 = get_number(obj, "geometry", "alpha_2", pi / 2);
    const double n = get_number(obj, "geometry", "n_atoms", 2.0);
    if (n < 2.0 || n != static_cast<int>(n))
        throw ConfigError("geometry.n_atoms must be an integer >= 2");
    geom.n_atoms = static_cast<int>(n);
    if (!(geom.k_r > 0.0))
        throw ConfigError("geometry.k_r must be > 0");
    if (geom.alpha_1 < 0.0 || geom.alpha_1 > pi || geom.alpha_2 < 0.0 ||
        geom.alpha_2 > pi)
        throw ConfigError("geometry.alpha_1/alpha_2 must lie in [0, pi]");
    return geom;
}

ScanSpec parse_scan(const ordered_json& obj) {
    check_keys(obj, "scan", {"axis", "min", "max", "points", "spacing"});
    ScanSpec scan;
    scan.axis = get_string(obj, "scan", "axis", "");
    if (scan.axis != "eta" && scan.axis != "alpha" && scan.axis != "delta" &&
        scan.axis != "time")
        throw ConfigError(
            "scan.axis must be eta, alpha, delta or time, got \"" + scan.axis +
            "\"");
    scan.min = require_number(obj, "scan", "min");
    scan.max = require_number(obj, "scan", "max");
    if (!(scan.max > scan.min))
        throw ConfigError("scan.max must be > scan.min");
    const double points = require_number(obj, "scan", "points");
    if (points < 2 || points > 1e6 || points != static_cast<int>(points))
        throw ConfigError("scan.points must be an integer in [2, 1000000]");
    scan.points = static_cast<int>(points);
    const std::string spacing = get_string(obj, "scan", "spacing", "linear");
    if (spacing == "log") {
        if (!(scan.min > 0.0))
            throw ConfigError("scan with log spacing requires min > 0");
        scan.log_spacing = true;
    } else if (spacing != "linear") {
        throw ConfigError("scan.spacing must be linear or log");
    }
    return scan;
}

PatternSpec parse_pattern(const ordered_json& obj) {
    check_keys(obj, "pattern", {"band", "z"});
    PatternSpec spec;
    spec.band = parse_band(get_string(obj, "pattern", "band", "CB"), "pattern");
    if (obj.contains("z")) {
        const double z = require_number(obj, "pattern", "z");
        if (std::abs(z) > 1.0)
            throw ConfigError("pattern.z must lie in [-1, 1]");
        spec.z = z;
    }
    return spec;
}

G2Spec parse_g2(const ordered_json& obj) {
    check_keys(obj, "g2", {"mode", "band"});
    G2Spec spec;
    const std::string mode = get_string(obj, "g2", "mode", "diagonal");
    if (mode == "diagonal")
        spec.mode = G2Spec::Mode::Diagonal;
    else if (mode == "map")
        spec.mode = G2Spec::Mode::Map;
    else if (mode == "weak_field")
        spec.mode = G2Spec::Mode::WeakField;
    else
        throw ConfigError("g2.mode must be diagonal, map or weak_field");
    spec.band = parse_band(get_string(obj, "g2", "band", "CB"), "g2");
    return spec;
}

EvolveSpec parse_evolve(const ordered_json& obj) {
    check_keys(obj, "evolve", {"t_final", "dt", "initial", "samples"});
    EvolveSpec spec;
    spec.t_final = get_number(obj, "evolve", "t_final", 10.0);
    if (!(spec.t_final > 0.0))
        throw ConfigError("evolve.t_final must be > 0");
    spec.dt = get_number(obj, "evolve", "dt", 0.0);
    if (spec.dt < 0.0)
        throw ConfigError("evolve.dt must be >= 0 (0 = automatic)");
    if (obj.contains("initial")) {
        if (!obj["initial"].is_array() || obj["initial"].size() != 3)
            throw ConfigError("evolve.initial must be an [x, y, z] array");
        spec.initial = {obj["initial"][0].get<double>(),
                        obj["initial"][1].get<double>(),
                        obj["initial"][2].get<double>()};
    }
    const double samples = get_number(obj, "evolve", "samples", 101.0);
    if (samples < 2 || samples > 1e6 || samples != static_cast<int>(samples))
        throw ConfigError("evolve.samples must be an integer in [2, 1000000]");
    spec.samples = static_cast<int>(samples);
    return spec;
}

OutputSpec parse_output(const ordered_json& obj) {
    check_keys(obj, "output", {"format"});
    OutputSpec spec;
    spec.format = get_string(obj, "output", "format", "csv");
    if (spec.format != "csv" && spec.format != "tsv")
        throw ConfigError("output.format must be csv or tsv");
    return spec;
}

} // namespace

Scenario parse_scenario(const std::string& json_text) {
    ordered_json root;
    try {
        root = ordered_json::parse(json_text);
    } catch (const nlohmann::json::parse_error& err) {
        // Recover the line number from the byte offset for the report.
        std::size_t line = 1;
        for (std::size_t i = 0; i < err.byte && i < json_text.size(); ++i)
            if (json_text[i] == '\n')
                ++line;
        throw ConfigError("scenario is not valid JSON (line " +
                          std::to_string(line) + "): " + err.what());
    }
    if (!root.is_object())
        throw ConfigError("scenario root must be a JSON object");
    check_keys(root, "scenario",
               {"drive", "reservoir", "coupling", "geometry", "scan",
                "pattern", "g2", "evolve", "output"});

    Scenario scenario;
    if (root.contains("drive"))
        scenario.drive = parse_drive(root["drive"]);
    if (root.contains("reservoir"))
        scenario.reservoir = parse_reservoir(root["reservoir"]);
    if (root.contains("coupling"))
        scenario.coupling = parse_coupling(root["coupling"]);
    if (root.contains("geometry"))
        scenario.geometry = parse_geometry(root["geometry"]);
    if (root.contains("scan"))
        scenario.scan = parse_scan(root["scan"]);
    if (root.contains("pattern"))
        scenario.pattern = parse_pattern(root["pattern"]);
    if (root.contains("g2"))
        scenario.g2 = parse_g2(root["g2"]);
    if (root.contains("evolve"))
        scenario.evolve = parse_evolve(root["evolve"]);
    if (root.contains("output"))
        scenario.output = parse_output(root["output"]);
    scenario.normalized = root.dump();
    return scenario;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open scenario file: " + path);
    std::ostringstream text;
    text << in.rdbuf();
    return parse_scenario(text.str());
}

} // namespace mollowsim
