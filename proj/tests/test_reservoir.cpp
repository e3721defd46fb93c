#include <cmath>

#include <doctest.h>

#include "mollowsim/errors.hpp"
#include "mollowsim/reservoir.hpp"

using namespace mollowsim;

TEST_CASE("flat profile") {
    const auto profile = ReservoirProfile::flat(1.0);
    CHECK(profile.gamma_at(1.0) == 1.0);
    CHECK(profile.gamma_at(1e8) == 1.0);
    CHECK_THROWS_AS(ReservoirProfile::flat(0.0), InvalidParameterError);
    CHECK_THROWS_AS(profile.gamma_at(-1.0), InvalidParameterError);
}

TEST_CASE("lorentzian cavity profile") {
    const double center = 1e8 + 200.0;
    const auto profile =
        ReservoirProfile::lorentzian_cavity(1.0, 9.0, center, 5.0);
    CHECK(profile.gamma_at(center) == doctest::Approx(10.0).epsilon(1e-15));
    CHECK(profile.gamma_at(center + 5.0) ==
          doctest::Approx(1.0 + 4.5).epsilon(1e-15));
    CHECK(profile.gamma_at(center - 5.0) ==
          doctest::Approx(1.0 + 4.5).epsilon(1e-15));
}

TEST_CASE("lorentzian cavity is smooth on a fine grid") {
    const auto profile = ReservoirProfile::lorentzian_cavity(1.0, 9.0, 50.0,
                                                             2.0);
    double prev = profile.gamma_at(30.0);
    for (int i = 1; i <= 4000; ++i) {
        const double omega = 30.0 + 40.0 * i / 4000.0;
        const double value = profile.gamma_at(omega);
        CHECK(std::abs(value - prev) < 5e-2); // bounded slope * step
        prev = value;
    }
}

TEST_CASE("band gap step profile") {
    const auto profile = ReservoirProfile::band_gap_step(0.1, 2.0, 100.0);
    CHECK(profile.gamma_at(99.999) == 0.1);
    CHECK(profile.gamma_at(100.0) == 2.0);
    CHECK(profile.gamma_at(150.0) == 2.0);
}

TEST_CASE("tabulated profile interpolates and rejects extrapolation") {
    const auto profile =
        ReservoirProfile::tabulated({1.0, 2.0, 4.0}, {1.0, 3.0, 3.0});
    CHECK(profile.gamma_at(1.0) == 1.0);
    CHECK(profile.gamma_at(1.5) == doctest::Approx(2.0));
    CHECK(profile.gamma_at(3.0) == doctest::Approx(3.0));
    CHECK(profile.gamma_at(4.0) == 3.0);
    CHECK_THROWS_AS(profile.gamma_at(0.5), TabulatedRangeError);
    CHECK_THROWS_AS(profile.gamma_at(4.5), TabulatedRangeError);
    CHECK_THROWS_AS(ReservoirProfile::tabulated({1.0, 1.0}, {1.0, 2.0}),
                    InvalidParameterError);
    CHECK_THROWS_AS(ReservoirProfile::tabulated({1.0, 2.0}, {1.0, 0.0}),
                    InvalidParameterError);
}

TEST_CASE("eta of a flat bath is one") {
    const DressedFrame frame = dressed_frame({100.0, 0.0, 1e8});
    CHECK(eta(ReservoirProfile::flat(1.0), frame) == 1.0);
}

TEST_CASE("eta of a cavity peaked at a sideband") {
    const DressedFrame frame = dressed_frame({100.0, 0.0, 1e8});
    const auto at_plus = ReservoirProfile::lorentzian_cavity(
        1.0, 99.0, frame.omega_plus, 0.1);
    const auto at_minus = ReservoirProfile::lorentzian_cavity(
        1.0, 99.0, frame.omega_minus, 0.1);
    CHECK(eta(at_plus, frame) == doctest::Approx(100.0).epsilon(1e-4));
    CHECK(eta(at_minus, frame) == doctest::Approx(0.01).epsilon(1e-4));
    // Mirroring the cavity about the carrier inverts eta exactly: the two
    // sideband evaluations swap.
    CHECK(eta(at_plus, frame) * eta(at_minus, frame) ==
          doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("collective coupling limits") {
    const auto off = collective_chi(CouplingModel::Off, 1e8, 20.0 * pi, 1e8);
    CHECK(off.chi == 0.0);
    CHECK(off.omega_shift == 0.0);

    const auto small =
        collective_chi(CouplingModel::ScalarSinc, 1e8, 1e-8, 1e8);
    CHECK(small.chi == doctest::Approx(1.0).epsilon(1e-14));

    // sin(20 pi) vanishes: the large-distance regime decouples the pair.
    const auto far =
        collective_chi(CouplingModel::ScalarSinc, 1e8, 20.0 * pi, 1e8);
    CHECK(std::abs(far.chi) <= 1e-15);
    CHECK(far.omega_shift ==
          doctest::Approx(-1.0 / (20.0 * pi)).epsilon(1e-12));
}

TEST_CASE("collective coupling is bounded") {
    for (int i = 1; i <= 2000; ++i) {
        const double u = 1e4 * i / 2000.0;
        const auto c = collective_chi(CouplingModel::ScalarSinc, 1.0, u, 1.0);
        CHECK(std::abs(c.chi) <= 1.0);
    }
}
