#include <cmath>
#include <random>

#include <doctest.h>

#include "mollowsim/dynamics.hpp"
#include "mollowsim/errors.hpp"
#include "mollowsim/oracle.hpp"

using namespace mollowsim;

TEST_CASE("expm propagation identity at t = 0") {
    const BlochCoefficients c =
        coefficients_from_rates(1.0, 2.0, 1.0, 0.1, -0.3, 0.5, 0.8);
    const BlochState v0{0.4, -0.2, 0.1};
    const BlochState v = oracle::expm_propagate(v0, c, 0.0);
    CHECK(v.x == doctest::Approx(v0.x).epsilon(1e-14));
    CHECK(v.y == doctest::Approx(v0.y).epsilon(1e-14));
    CHECK(v.z == doctest::Approx(v0.z).epsilon(1e-14));
}

TEST_CASE("expm reproduces the decoupled y decay") {
    // With zeta = 0 the y equation is a scalar exponential.
    const BlochCoefficients c =
        coefficients_from_rates(1.0, 3.0, 2.0, 0.0, 0.0, 0.0, pi / 4);
    const double rate = 2.0 * (c.c0 + c.xi_plus);
    for (double t : {0.1, 0.5, 2.0}) {
        const BlochState v = oracle::expm_propagate({0.0, 0.7, 0.0}, c, t);
        CHECK(v.y == doctest::Approx(0.7 * std::exp(-rate * t)).epsilon(1e-10));
    }
}

TEST_CASE("expm long-time limit is the steady state") {
    const BlochCoefficients c =
        coefficients_from_rates(1.0, 4.0, 1.5, 0.2, 0.3, -0.4, 1.1);
    const BlochState late =
        oracle::expm_propagate({0.5, 0.2, -0.3}, c, 200.0 / c.xi_plus);
    const BlochState steady = steady_state(c);
    CHECK(std::abs(late.x - steady.x) <= 1e-10);
    CHECK(std::abs(late.y - steady.y) <= 1e-10);
    CHECK(std::abs(late.z - steady.z) <= 1e-10);
}

TEST_CASE("brute-force chain sums") {
    CHECK(oracle::brute_force_chain(1, 0.3, 1.0) == 1.0);
    CHECK(oracle::brute_force_chain(2, 1.0, 0.0) == doctest::Approx(4.0));
    CHECK(oracle::brute_force_chain(8, 0.9, 0.0) ==
          doctest::Approx(58.4).epsilon(1e-14));
    CHECK_THROWS_AS(oracle::brute_force_chain(65, 0.5, 0.0),
                    InvalidParameterError);
}

TEST_CASE("brute-force chain equals the closed form") {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<int> atoms(1, 32);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::uniform_real_distribution<double> phase(0.0, 4.0 * pi);
    for (int i = 0; i < 300; ++i) {
        const int n = atoms(rng);
        const double z = unit(rng);
        const double delta = phase(rng);
        CHECK(std::abs(chain_intensity(n, z, delta) -
                       oracle::brute_force_chain(n, z, delta)) <= 1e-10);
    }
}

TEST_CASE("fringe scan of canonical curves") {
    const auto flat = oracle::fringe_scan([](double) { return 3.0; });
    CHECK(flat.visibility == 0.0);

    const auto unit = oracle::fringe_scan([](double alpha) {
        return 1.0 + std::cos(20.0 * pi * std::cos(alpha));
    });
    CHECK(unit.visibility == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(unit.i_max == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(unit.i_min == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));

    const auto fig = oracle::fringe_scan([](double alpha) {
        return 2.0 + 1.8 * std::cos(20.0 * pi * std::cos(alpha));
    });
    CHECK(fig.visibility == doctest::Approx(0.9).epsilon(1e-12));
    CHECK(fig.i_max == doctest::Approx(3.8).epsilon(1e-12));
}

TEST_CASE("fringe scan rejects a coarse grid") {
    CHECK_THROWS_AS(oracle::fringe_scan([](double a) { return a; }, 512),
                    InvalidParameterError);
}

TEST_CASE("fringe scan refines extrema off the grid") {
    // Minimum at an irrational angle, far from any sample point.
    const double target = 1.0 / std::sqrt(2.0);
    const auto scan = oracle::fringe_scan([&](double alpha) {
        const double d = alpha - target;
        return 1.0 + d * d;
    });
    CHECK(scan.arg_min == doctest::Approx(target).epsilon(1e-7));
    CHECK(scan.i_min == doctest::Approx(1.0).epsilon(1e-14));
}
