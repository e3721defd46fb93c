#include <cmath>
#include <sstream>

#include <doctest.h>

#include "mollowsim/errors.hpp"
#include "mollowsim/observables.hpp"
#include "mollowsim/scans.hpp"
#include "mollowsim/scenario.hpp"

using namespace mollowsim;

TEST_CASE("scenario parsing accepts a full configuration") {
    const Scenario s = parse_scenario(R"({
        "drive": {"rabi": 50.0, "detuning": 2.0, "carrier": 1e8},
        "reservoir": {"kind": "lorentzian_cavity", "gamma0": 1.0,
                      "coupling": 99.0, "center": 100000200.0, "width": 10.0},
        "coupling": {"model": "scalar_sinc"},
        "geometry": {"k_r": 62.8, "n_atoms": 8, "alpha_1": 1.0, "alpha_2": 2.0},
        "scan": {"axis": "alpha", "min": 0.0, "max": 3.14, "points": 100},
        "pattern": {"band": "CB", "z": 0.9},
        "output": {"format": "tsv"}
    })");
    CHECK(s.drive.rabi == 50.0);
    CHECK(s.geometry.n_atoms == 8);
    CHECK(s.coupling == CouplingModel::ScalarSinc);
    CHECK(s.scan.has_value());
    CHECK(s.scan->points == 100);
    CHECK(s.pattern.z.has_value());
    CHECK(s.output.format == "tsv");
}

TEST_CASE("scenario parsing rejects typos and bad values") {
    CHECK_THROWS_AS(parse_scenario(R"({"drvie": {}})"), ConfigError);
    CHECK_THROWS_AS(parse_scenario(R"({"drive": {"rabbi": 1.0}})"),
                    ConfigError);
    CHECK_THROWS_AS(
        parse_scenario(R"({"scan": {"axis": "banana", "min": 0, "max": 1,
                                    "points": 5}})"),
        ConfigError);
    CHECK_THROWS_AS(
        parse_scenario(R"({"scan": {"axis": "eta", "min": 1, "max": 2,
                                    "points": 1}})"),
        ConfigError);
    CHECK_THROWS_AS(
        parse_scenario(R"({"scan": {"axis": "eta", "min": -1, "max": 2,
                                    "points": 5, "spacing": "log"}})"),
        ConfigError);
    CHECK_THROWS_AS(parse_scenario(R"({"geometry": {"n_atoms": 1}})"),
                    ConfigError);
    CHECK_THROWS_AS(parse_scenario("not json"), ConfigError);
    CHECK_THROWS_AS(parse_scenario(R"({"pattern": {"band": "XX"}})"),
                    ConfigError);
}

TEST_CASE("parse errors carry line context") {
    try {
        parse_scenario("{\n  \"drive\": {\n  \"rabi\" 1.0\n }\n}");
        FAIL("expected ConfigError");
    } catch (const ConfigError& err) {
        CHECK(std::string(err.what()).find("line 3") != std::string::npos);
    }
}

TEST_CASE("eta scan rows") {
    Scenario scenario;
    scenario.scan = ScanSpec{"eta", 0.01, 100.0, 5, true};
    const ScanResult table = run_scan_eta(scenario);
    REQUIRE(table.rows.size() == 5);
    REQUIRE(table.columns.size() == 4);

    // eta = 0.01: (0.99/1.01)^2.
    CHECK(table.rows[0][0] == doctest::Approx(0.01).epsilon(1e-12));
    CHECK(table.rows[0][1] ==
          doctest::Approx(0.9607881580237231).epsilon(1e-12));
    // eta = 1 sits in the middle of the symmetric log grid.
    CHECK(table.rows[2][0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(table.rows[2][1]) <= 1e-15);
    // eta = 100 mirrors eta = 0.01.
    CHECK(std::abs(table.rows[4][1] - table.rows[0][1]) <= 1e-14);
    for (const auto& row : table.rows)
        CHECK(row[3] <= 1e-12);
}

TEST_CASE("pattern rows reproduce the chain curve") {
    Scenario scenario;
    scenario.pattern.z = 0.9;
    scenario.geometry.n_atoms = 2;
    scenario.scan = ScanSpec{"alpha", 0.0, pi, 9, false};
    const ScanResult two = run_pattern(scenario);
    REQUIRE(two.rows.size() == 9);
    CHECK(two.rows[4][0] == doctest::Approx(pi / 2));
    CHECK(two.rows[4][1] == doctest::Approx(0.95).epsilon(1e-12));

    scenario.geometry.n_atoms = 8;
    const ScanResult eight = run_pattern(scenario);
    CHECK(eight.rows[4][1] == doctest::Approx(0.9125).epsilon(1e-12));

    scenario.pattern.z = 0.0;
    const ScanResult flat = run_pattern(scenario);
    for (const auto& row : flat.rows)
        CHECK(row[1] == doctest::Approx(1.0 / 8.0).epsilon(1e-14));
}

TEST_CASE("pattern falls back to the steady-state contrast") {
    Scenario scenario = parse_scenario(R"({
        "drive": {"rabi": 100.0},
        "scan": {"axis": "alpha", "min": 0.0, "max": 3.141592653589793,
                 "points": 17}
    })");
    // Flat bath at resonance: z = 0, so the pattern is flat at 1/N^2 * N.
    const ScanResult table = run_pattern(scenario);
    for (const auto& row : table.rows)
        CHECK(row[1] == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("g2 diagonal rows") {
    Scenario scenario;
    scenario.drive.rabi = 0.9;
    scenario.scan = ScanSpec{"delta", 0.0, pi, 3, false};
    const ScanResult table = run_g2(scenario);
    REQUIRE(table.rows.size() == 3);
    CHECK(table.rows[0][1] == doctest::Approx(2.0));
    CHECK(table.rows[0][2] ==
          doctest::Approx(0.5238240590946552).epsilon(1e-12));
    CHECK(table.rows[1][0] == doctest::Approx(pi / 2));
    CHECK(table.rows[1][1] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(table.rows[2][1] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(table.rows[2][2] ==
          doctest::Approx(2.6156073769242489).epsilon(1e-12));
}

TEST_CASE("g2 map reproduces the correlation surface") {
    // Flat resonant bath: uniform populations, so the surface is
    // 1 + cos(d1) cos(d2).
    Scenario scenario;
    scenario.g2.mode = G2Spec::Mode::Map;
    scenario.scan = ScanSpec{"delta", 0.0, 2.0 * pi, 9, false};
    const ScanResult table = run_g2(scenario);
    REQUIRE(table.rows.size() == 81);
    for (const auto& row : table.rows)
        CHECK(row[2] == doctest::Approx(1.0 + std::cos(row[0]) *
                                                  std::cos(row[1]))
                            .epsilon(1e-12));
    // Rows come out in axis order.
    CHECK(table.rows[1][0] == 0.0);
    CHECK(table.rows[1][1] == doctest::Approx(pi / 4));
}

TEST_CASE("evolve table runs to the steady state") {
    Scenario scenario = parse_scenario(R"({
        "drive": {"rabi": 100.0},
        "reservoir": {"kind": "flat", "gamma0": 1.0},
        "evolve": {"t_final": 40.0, "samples": 5, "initial": [0.4, 0.1, -0.2]}
    })");
    const ScanResult table = run_evolve(scenario);
    REQUIRE(table.rows.size() == 5);
    CHECK(table.rows[0][0] == 0.0);
    CHECK(table.rows[0][1] == doctest::Approx(0.4));
    const auto& last = table.rows.back();
    CHECK(std::abs(last[1]) <= 1e-8);
    CHECK(std::abs(last[2]) <= 1e-8);
    CHECK(std::abs(last[3]) <= 1e-8);
}

TEST_CASE("steady table matches the closed form") {
    Scenario scenario = parse_scenario(R"({
        "drive": {"rabi": 100.0},
        "reservoir": {"kind": "tabulated",
                      "omega": [99999000.0, 100000000.0, 100001000.0],
                      "gamma": [1.0, 2.0, 3.0]}
    })");
    const ScanResult table = run_steady(scenario);
    REQUIRE(table.rows.size() == 1);
    const double eta_value = table.rows[0][10];
    // gamma(omega_minus = 1e8 - 200) and gamma(omega_plus = 1e8 + 200).
    CHECK(eta_value == doctest::Approx((2.0 + 0.2 * 1.0) / (2.0 - 0.2 * 1.0))
                           .epsilon(1e-12));
    CHECK(table.rows[0][2] ==
          doctest::Approx(eta_visibility_closed_form(eta_value))
              .epsilon(1e-10));
}

TEST_CASE("tables are byte-identical across runs") {
    const std::string text = R"({
        "scan": {"axis": "eta", "min": 0.001, "max": 1000.0, "points": 50,
                 "spacing": "log"},
        "output": {"format": "csv"}
    })";
    const Scenario a = parse_scenario(text);
    const Scenario b = parse_scenario(text);
    const std::string ta = format_table(run_scan_eta(a), a.output);
    const std::string tb = format_table(run_scan_eta(b), b.output);
    CHECK(ta == tb);
    CHECK(ta.find("# scenario:") != std::string::npos);
    CHECK(ta.find("eta,v_cb_pipeline,v_cb_closed_form,abs_diff") !=
          std::string::npos);
}

TEST_CASE("nan values serialize as nan tokens") {
    ScanResult result;
    result.columns = {"a"};
    result.rows = {{std::nan("")}};
    const std::string text = format_table(result, OutputSpec{});
    CHECK(text.find("nan") != std::string::npos);
}

TEST_CASE("validate report flags the weak-drive regime") {
    Scenario scenario = parse_scenario(R"({"drive": {"rabi": 3.0}})");
    const std::string report = run_validate(scenario);
    CHECK(report.find("strong_field_ok = no") != std::string::npos);
    CHECK(report.find("dipole_dipole_warning = no") != std::string::npos);

    Scenario nearby = parse_scenario(
        R"({"drive": {"rabi": 100.0}, "geometry": {"k_r": 3.0}})");
    const std::string report2 = run_validate(nearby);
    CHECK(report2.find("dipole_dipole_warning = yes") != std::string::npos);
}

TEST_CASE("verify battery passes") {
    std::ostringstream out;
    CHECK(run_verify(out) == 0);
    CHECK(out.str().find("FAIL") == std::string::npos);
}
