#include <cmath>
#include <random>

#include <doctest.h>

#include "mollowsim/core.hpp"
#include "mollowsim/errors.hpp"

using namespace mollowsim;

TEST_CASE("dressed frame on resonance") {
    const DressedFrame f = dressed_frame({1.0, 0.0, 1e8});
    CHECK(f.theta == doctest::Approx(pi / 4).epsilon(1e-15));
    CHECK(f.tilde_omega == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(f.omega_plus == doctest::Approx(1e8 + 2.0));
    CHECK(f.omega_minus == doctest::Approx(1e8 - 2.0));
}

TEST_CASE("dressed frame off resonance") {
    // 3-4-5 triple: rabi 3, detuning 8 gives tilde_omega 5.
    const DressedFrame f = dressed_frame({3.0, 8.0, 1e8});
    CHECK(f.tilde_omega == 5.0);
    CHECK(f.omega_plus - f.omega_minus == doctest::Approx(20.0));

    // cot(2 theta) = 1 inverts to theta = pi/8.
    const DressedFrame g = dressed_frame({1.0, 2.0, 1e8});
    CHECK(g.theta == doctest::Approx(pi / 8).epsilon(1e-15));
}

TEST_CASE("dressed frame rejects bad drives") {
    CHECK_THROWS_AS(dressed_frame({0.0, 0.0, 1e8}), InvalidParameterError);
    CHECK_THROWS_AS(dressed_frame({-1.0, 0.0, 1e8}), InvalidParameterError);
    CHECK_THROWS_AS(dressed_frame({1.0, 0.0, 0.0}), InvalidParameterError);
}

TEST_CASE("dressed frame scale consistency") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> unit(0.1, 10.0);
    for (int i = 0; i < 50; ++i) {
        const double rabi = unit(rng);
        const double detuning = unit(rng) - 5.0;
        const double lambda = unit(rng);
        const DressedFrame a = dressed_frame({rabi, detuning, 1e8});
        const DressedFrame b =
            dressed_frame({lambda * rabi, lambda * detuning, 1e8});
        CHECK(std::abs(a.theta - b.theta) <= 1e-14);
        CHECK(b.tilde_omega ==
              doctest::Approx(lambda * a.tilde_omega).epsilon(1e-14));
    }
}

TEST_CASE("theta decreases with detuning") {
    double prev = pi / 2;
    for (double detuning = -30.0; detuning <= 30.0; detuning += 0.5) {
        const double theta = dressed_frame({2.0, detuning, 1e8}).theta;
        CHECK(theta > 0.0);
        CHECK(theta < pi / 2);
        CHECK(theta < prev);
        prev = theta;
    }
}

TEST_CASE("detection phase basics") {
    const DressedFrame f = dressed_frame({1.0, 0.0, 1e8});
    const Geometry g{20.0 * pi, 2, pi / 2, 0.0};
    CHECK(detection_phase_at(g, BandId::CB, f, pi / 2) ==
          doctest::Approx(0.0).epsilon(1e-13));
    CHECK(detection_phase_at(g, BandId::CB, f, 0.0) ==
          doctest::Approx(20.0 * pi));
    // Sideband wavevector correction k_+ = k_L (1 + 2 tilde_omega/omega_L).
    CHECK(detection_phase_at(g, BandId::RB, f, 0.0) ==
          doctest::Approx(20.0 * pi * (1.0 + 2.0 / 1e8)).epsilon(1e-15));
    CHECK(detection_phase(g, BandId::CB, f, 1) ==
          detection_phase_at(g, BandId::CB, f, pi / 2));
    CHECK(detection_phase(g, BandId::CB, f, 2) ==
          detection_phase_at(g, BandId::CB, f, 0.0));
    CHECK_THROWS_AS(detection_phase(g, BandId::CB, f, 3),
                    InvalidParameterError);
}

TEST_CASE("detection phase is odd about alpha = pi/2") {
    const DressedFrame f = dressed_frame({1.0, 0.0, 1e8});
    const Geometry g{1.0, 2, pi / 2, pi / 2};
    const Geometry wide{20.0 * pi, 2, pi / 2, pi / 2};
    for (int i = 0; i <= 64; ++i) {
        const double alpha = pi * i / 64;
        const double d = detection_phase_at(g, BandId::CB, f, alpha);
        const double m = detection_phase_at(g, BandId::CB, f, pi - alpha);
        CHECK(std::abs(d + m) <= 1e-14);
        const double dw = detection_phase_at(wide, BandId::CB, f, alpha);
        const double mw = detection_phase_at(wide, BandId::CB, f, pi - alpha);
        CHECK(std::abs(dw + mw) <= 1e-14 * wide.k_r);
    }
}

TEST_CASE("populations from the Bloch vector") {
    const CollectivePopulations uniform = populations_from_xyz({0, 0, 0});
    CHECK(uniform.ee == doctest::Approx(0.25));
    CHECK(uniform.ss == doctest::Approx(0.25));
    CHECK(uniform.aa == doctest::Approx(0.25));
    CHECK(uniform.gg == doctest::Approx(0.25));

    const CollectivePopulations top = populations_from_xyz({2, 0, 1});
    CHECK(top.ee == doctest::Approx(1.0));
    CHECK(top.ss + top.aa + top.gg == doctest::Approx(0.0));

    const CollectivePopulations bottom = populations_from_xyz({-2, 0, 1});
    CHECK(bottom.gg == doctest::Approx(1.0));
    CHECK(bottom.ee == doctest::Approx(0.0));

    CHECK_THROWS_AS(populations_from_xyz({3.0, 0.0, 0.0}),
                    UnphysicalStateError);
    CHECK_THROWS_AS(populations_from_xyz({0.0, 0.0, 1.5}),
                    UnphysicalStateError);
}

TEST_CASE("population round trip") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        double p[4] = {unit(rng), unit(rng), unit(rng), unit(rng)};
        const double sum = p[0] + p[1] + p[2] + p[3];
        for (double& v : p)
            v /= sum;
        const BlochState state =
            xyz_from_populations({p[0], p[1], p[2], p[3]});
        const CollectivePopulations back = populations_from_xyz(state);
        CHECK(std::abs(back.ee - p[0]) <= 1e-14);
        CHECK(std::abs(back.ss - p[1]) <= 1e-14);
        CHECK(std::abs(back.aa - p[2]) <= 1e-14);
        CHECK(std::abs(back.gg - p[3]) <= 1e-14);
        const double total = back.ee + back.ss + back.aa + back.gg;
        CHECK(total == doctest::Approx(1.0).epsilon(1e-14));
    }
}
