#include "mollowsim/core.hpp"

#include <cmath>
#include <string>

#include "mollowsim/errors.hpp"

namespace mollowsim {

DressedFrame dressed_frame(const DriveParams& drive) {
    if (!(drive.rabi > 0.0))
        throw InvalidParameterError("dressed_frame: rabi must be > 0");
    if (!(drive.carrier > 0.0))
        throw InvalidParameterError("dressed_frame: carrier must be > 0");

    DressedFrame frame;
    frame.tilde_omega = std::hypot(drive.rabi, 0.5 * drive.detuning);
    // cot(2 theta) = detuning/(2 rabi) with 2 theta = atan2(2 rabi, detuning)
    // in (0, pi), which pins theta to (0, pi/2).
    frame.theta = 0.5 * std::atan2(2.0 * drive.rabi, drive.detuning);
    frame.omega_plus = drive.carrier + 2.0 * frame.tilde_omega;
    frame.omega_minus = drive.carrier - 2.0 * frame.tilde_omega;
    if (!(frame.omega_minus > 0.0))
        throw InvalidParameterError(
            "dressed_frame: carrier too small, omega_minus is not positive");
    return frame;
}

double band_frequency(const DressedFrame& frame, BandId band) {
    switch (band) {
    case BandId::CB: return frame.carrier();
    case BandId::LB: return frame.omega_minus;
    case BandId::RB: return frame.omega_plus;
    }
    throw InvalidParameterError("band_frequency: unknown band");
}

double detection_phase_at(const Geometry& geometry, BandId band,
                          const DressedFrame& frame, double alpha) {
    if (!(geometry.k_r > 0.0))
        throw InvalidParameterError("detection_phase: k_r must be > 0");
    const double ratio = band_frequency(frame, band) / frame.carrier();
    return geometry.k_r * ratio * std::cos(alpha);
}

double detection_phase(const Geometry& geometry, BandId band,
                       const DressedFrame& frame, int detector) {
    if (detector != 1 && detector != 2)
        throw InvalidParameterError("detection_phase: detector must be 1 or 2");
    const double alpha = detector == 1 ? geometry.alpha_1 : geometry.alpha_2;
    return detection_phase_at(geometry, band, frame, alpha);
}

namespace {

constexpr double kPopulationTol = 1e-9;

void check_population(double value, const char* name) {
    if (!(value >= -kPopulationTol && value <= 1.0 + kPopulationTol))
        throw UnphysicalStateError(std::string("population sigma_") + name +
                                   " = " + std::to_string(value) +
                                   " outside [0, 1]");
}

} // namespace

CollectivePopulations populations_from_xyz(const BlochState& state) {
    CollectivePopulations pops;
    pops.ee = 0.25 * (1.0 + state.z) + 0.25 * state.x;
    pops.gg = 0.25 * (1.0 + state.z) - 0.25 * state.x;
    pops.ss = 0.25 * (1.0 - state.z) + 0.5 * state.y;
    pops.aa = 0.25 * (1.0 - state.z) - 0.5 * state.y;
    check_population(pops.ee, "ee");
    check_population(pops.ss, "ss");
    check_population(pops.aa, "aa");
    check_population(pops.gg, "gg");
    return pops;
}

BlochState xyz_from_populations(const CollectivePopulations& pops) {
    check_population(pops.ee, "ee");
    check_population(pops.ss, "ss");
    check_population(pops.aa, "aa");
    check_population(pops.gg, "gg");
    const double sum = pops.ee + pops.ss + pops.aa + pops.gg;
    if (std::abs(sum - 1.0) > 1e-9)
        throw UnphysicalStateError("populations sum to " + std::to_string(sum) +
                                   ", expected 1");
    BlochState state;
    state.x = 2.0 * (pops.ee - pops.gg);
    state.y = pops.ss - pops.aa;
    state.z = pops.ee + pops.gg - pops.ss - pops.aa;
    return state;
}

} // namespace mollowsim
