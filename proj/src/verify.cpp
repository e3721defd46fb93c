#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "mollowsim/dynamics.hpp"
#include "mollowsim/observables.hpp"
#include "mollowsim/oracle.hpp"
#include "mollowsim/scans.hpp"

namespace mollowsim {

namespace {

struct Check {
    std::string name;
    double metric = 0.0;
    double limit = 0.0;
    bool ok = false;
};

double log_uniform(std::mt19937& rng, double lo, double hi) {
    std::uniform_real_distribution<double> dist(std::log(lo), std::log(hi));
    return std::exp(dist(rng));
}

BlochCoefficients random_coefficients(std::mt19937& rng, double rate_lo,
                                      double rate_hi, bool with_coupling) {
    std::uniform_real_distribution<double> chi(-1.0, 1.0);
    std::uniform_real_distribution<double> angle(0.05, pi / 2 - 0.05);
    return coefficients_from_rates(
        log_uniform(rng, rate_lo, rate_hi), log_uniform(rng, rate_lo, rate_hi),
        log_uniform(rng, rate_lo, rate_hi), with_coupling ? chi(rng) : 0.0,
        with_coupling ? chi(rng) : 0.0, with_coupling ? chi(rng) : 0.0,
        angle(rng));
}

BlochState random_state(std::mt19937& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double p[4] = {unit(rng), unit(rng), unit(rng), unit(rng)};
    const double sum = p[0] + p[1] + p[2] + p[3];
    for (double& v : p)
        v /= sum;
    return xyz_from_populations({p[0], p[1], p[2], p[3]});
}

CollectivePopulations random_populations(std::mt19937& rng) {
    return populations_from_xyz(random_state(rng));
}

Check check_propagator_equivalence() {
    std::mt19937 rng(7101);
    double worst = 0.0;
    for (int i = 0; i < 25; ++i) {
        const BlochCoefficients c = random_coefficients(rng, 1e-2, 1e2, true);
        const BlochState v0 = random_state(rng);
        const double t = 10.0 / c.xi_plus;
        const BlochState a = evolve(v0, c, t);
        const BlochState b = oracle::expm_propagate(v0, c, t);
        worst = std::max({worst, std::abs(a.x - b.x), std::abs(a.y - b.y),
                          std::abs(a.z - b.z)});
    }
    return {"rk4 vs matrix-exponential propagator", worst, 1e-8,
            worst <= 1e-8};
}

Check check_steady_closed_form() {
    std::mt19937 rng(7102);
    std::uniform_real_distribution<double> angle(0.05, pi / 2 - 0.05);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        const BlochCoefficients c = coefficients_from_rates(
            1.0, log_uniform(rng, 1e-3, 1e3), 1.0, 0.0, 0.0, 0.0, angle(rng));
        const BlochState solved = steady_state(c);
        const BlochState closed = steady_state_closed_form(c);
        worst = std::max({worst, std::abs(solved.x - closed.x),
                          std::abs(solved.y - closed.y),
                          std::abs(solved.z - closed.z)});
    }
    return {"steady state vs zeta-free closed form", worst, 1e-13,
            worst <= 1e-13};
}

Check check_steady_physicality() {
    std::mt19937 rng(7103);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const BlochCoefficients c = random_coefficients(rng, 1e-2, 1e2, true);
        const CollectivePopulations pops =
            populations_from_xyz(steady_state(c));
        for (double p : {pops.ee, pops.ss, pops.aa, pops.gg})
            worst = std::max(worst, std::max(-p, p - 1.0));
    }
    return {"steady-state populations physical", worst, 1e-9, worst <= 1e-9};
}

Check check_chain_double_sum() {
    std::mt19937 rng(7104);
    std::uniform_int_distribution<int> atoms(1, 32);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::uniform_real_distribution<double> phase(0.0, 4.0 * pi);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        const int n = atoms(rng);
        const double z = unit(rng);
        const double delta = phase(rng);
        worst = std::max(worst, std::abs(chain_intensity(n, z, delta) -
                                         oracle::brute_force_chain(n, z,
                                                                   delta)));
    }
    return {"chain closed form vs double sum", worst, 1e-10, worst <= 1e-10};
}

Check check_fringe_visibility() {
    std::mt19937 rng(7105);
    const DressedFrame frame = dressed_frame({1.0, 0.0, 1e8});
    const Geometry geom{20.0 * pi, 2, pi / 2, pi / 2};
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        const CollectivePopulations pops = random_populations(rng);
        const auto curve = [&](double alpha) {
            return band_intensity_two_atom(BandId::CB, pops, frame, geom,
                                           alpha);
        };
        const double scanned = oracle::fringe_scan(curve).visibility;
        worst =
            std::max(worst, std::abs(scanned - std::abs(visibilities(pops).cb)));
    }
    return {"scanned visibility vs population formula", worst, 1e-6,
            worst <= 1e-6};
}

Check check_fringe_canonical() {
    const auto flat = oracle::fringe_scan([](double) { return 3.0; });
    const auto unit = oracle::fringe_scan([](double alpha) {
        return 1.0 + std::cos(20.0 * pi * std::cos(alpha));
    });
    const auto fig = oracle::fringe_scan([](double alpha) {
        return 2.0 + 1.8 * std::cos(20.0 * pi * std::cos(alpha));
    });
    const double worst =
        std::max({std::abs(flat.visibility), std::abs(unit.visibility - 1.0),
                  std::abs(fig.visibility - 0.9)});
    return {"fringe scan canonical curves", worst, 1e-9, worst <= 1e-9};
}

Check check_uniform_g2_identities() {
    const CollectivePopulations uniform{0.25, 0.25, 0.25, 0.25};
    const VisibilitySet vis = visibilities(uniform);
    double worst = 0.0;
    for (int i = 0; i <= 40; ++i) {
        for (int j = 0; j <= 40; ++j) {
            const double d1 = 2.0 * pi * i / 40;
            const double d2 = 2.0 * pi * j / 40;
            worst = std::max(
                worst, std::abs(g2_band(BandId::CB, uniform, vis, d1, d2) -
                                (1.0 + std::cos(d1) * std::cos(d2))));
            worst = std::max(
                worst, std::abs(g2_band(BandId::LB, uniform, vis, d1, d2) -
                                0.5 * (1.0 + std::cos(d1 - d2))));
            worst = std::max(
                worst, std::abs(g2_band(BandId::RB, uniform, vis, d1, d2) -
                                0.5 * (1.0 + std::cos(d1 - d2))));
        }
    }
    return {"uniform-population g2 identities", worst, 1e-14, worst <= 1e-14};
}

Check check_long_time_convergence() {
    std::mt19937 rng(7106);
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
        const BlochCoefficients c = random_coefficients(rng, 1e-1, 1e1, true);
        const BlochState v0 = random_state(rng);
        const double t = 20.0 / oracle::slowest_decay_rate(c);
        const BlochState late = evolve(v0, c, t);
        const BlochState steady = steady_state(c);
        worst = std::max({worst, std::abs(late.x - steady.x),
                          std::abs(late.y - steady.y),
                          std::abs(late.z - steady.z)});
    }
    return {"long-time evolve vs steady state", worst, 1e-6, worst <= 1e-6};
}

Check check_scan_row_invariants() {
    Scenario scenario;
    scenario.scan = ScanSpec{"eta", 1e-2, 1e2, 41, true};
    const ScanResult table = run_scan_eta(scenario);
    double worst = 0.0;
    for (const auto& row : table.rows) {
        worst = std::max(worst, row[3]);
        worst = std::max(worst, std::max(-row[1], row[1] - 1.0));
    }
    return {"scan-eta row invariants", worst, 1e-12, worst <= 1e-12};
}

} // namespace

int run_verify(std::ostream& out) {
    const std::vector<std::function<Check()>> checks = {
        check_propagator_equivalence, check_steady_closed_form,
        check_steady_physicality,     check_chain_double_sum,
        check_fringe_visibility,      check_fringe_canonical,
        check_uniform_g2_identities,  check_long_time_convergence,
        check_scan_row_invariants,
    };
    int failures = 0;
    for (const auto& runner : checks) {
        const Check check = runner();
        if (!check.ok)
            ++failures;
        char metric[64];
        std::snprintf(metric, sizeof metric, "%.3e <= %.0e", check.metric,
                      check.limit);
        out << (check.ok ? "PASS" : "FAIL") << "  " << check.name << " ("
            << metric << ")\n";
    }
    out << (failures == 0 ? "verify: all checks passed\n"
                          : "verify: " + std::to_string(failures) +
                                " check(s) failed\n");
    return failures;
}

} // namespace mollowsim
