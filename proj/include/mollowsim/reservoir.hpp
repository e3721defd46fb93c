#pragma once

#include <vector>

#include "mollowsim/core.hpp"

namespace mollowsim {

/// Engineered density-of-states model: the frequency-dependent decay rate
/// gamma(omega) seen by the dressed transitions. Immutable after
/// construction; evaluations are pure.
class ReservoirProfile {
public:
    enum class Kind { Flat, LorentzianCavity, BandGapStep, Tabulated };

    /// gamma(omega) = gamma0 everywhere (free space).
    static ReservoirProfile flat(double gamma0 = 1.0);

    /// gamma(omega) = gamma0 + coupling * width^2 / ((omega-center)^2 + width^2).
    static ReservoirProfile lorentzian_cavity(double gamma0, double coupling,
                                              double center, double width);

    /// gamma(omega) = gamma_low below the band edge, gamma_high at and above it.
    static ReservoirProfile band_gap_step(double gamma_low, double gamma_high,
                                          double edge);

    /// Linear interpolation of (omega, gamma) samples; omega must be strictly
    /// increasing and gamma positive. Queries outside the sampled range throw
    /// TabulatedRangeError (no extrapolation).
    static ReservoirProfile tabulated(std::vector<double> omega,
                                      std::vector<double> gamma);

    Kind kind() const { return kind_; }

    /// Decay rate at frequency omega (> 0).
    double gamma_at(double omega) const;

private:
    ReservoirProfile() = default;

    Kind kind_ = Kind::Flat;
    // Flat / LorentzianCavity / BandGapStep parameters.
    double gamma0_ = 1.0;
    double coupling_ = 0.0;
    double center_ = 0.0;
    double width_ = 1.0;
    double gamma_low_ = 1.0;
    double gamma_high_ = 1.0;
    double edge_ = 0.0;
    // Tabulated samples.
    std::vector<double> tab_omega_;
    std::vector<double> tab_gamma_;
};

/// Sideband rate asymmetry eta = gamma(omega_plus) / gamma(omega_minus),
/// which is 1 in free space.
double eta(const ReservoirProfile& profile, const DressedFrame& frame);

/// Inter-atom coupling model for the collective parameters chi_ab and
/// Omega_ab. ScalarSinc is the scalar-photon form chi = sin(u)/u,
/// Omega = -cos(u)/u with u = (omega/carrier) * k_r; Off sets both to zero.
enum class CouplingModel { Off, ScalarSinc };

struct CollectiveCoupling {
    double chi = 0.0;
    double omega_shift = 0.0; // Omega_ab, enters only the validity check
};

CollectiveCoupling collective_chi(CouplingModel model, double omega,
                                  double k_r, double carrier);

} // namespace mollowsim
