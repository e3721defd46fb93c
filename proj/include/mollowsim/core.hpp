#pragma once

#include <numbers>

namespace mollowsim {

inline constexpr double pi = std::numbers::pi;

/// Spectral bands of the strong-field fluorescence triplet: the central band
/// at the laser frequency and the two sidebands split off by 2*tilde_omega.
enum class BandId { CB, LB, RB };

/// Laser drive. All rates and frequencies are measured in units of the
/// reference free-space decay rate gamma0; lengths enter only through the
/// dimensionless separation phase Geometry::k_r.
struct DriveParams {
    double rabi = 1.0;     // Omega
    double detuning = 0.0; // Delta = omega_0 - omega_L
    double carrier = 1e8;  // omega_L, large enough that sideband wavevector
                           // corrections are negligible unless configured
};

/// Dressed-frame parameters derived from a DriveParams.
struct DressedFrame {
    double theta = 0.0;       // mixing angle, in (0, pi/2)
    double tilde_omega = 0.0; // generalized Rabi frequency
    double omega_plus = 0.0;  // carrier + 2*tilde_omega
    double omega_minus = 0.0; // carrier - 2*tilde_omega

    double carrier() const { return 0.5 * (omega_plus + omega_minus); }
};

/// Linear chain of emitters with the laser perpendicular to the chain axis,
/// so no laser-phase gradient appears along the chain.
struct Geometry {
    double k_r = 20.0 * pi; // k_L * r_ab, separation phase of adjacent atoms
    int n_atoms = 2;
    double alpha_1 = pi / 2; // angle between chain axis and detector 1
    double alpha_2 = pi / 2; // angle between chain axis and detector 2
};

/// Reduced two-atom configuration in the collective dressed basis:
///   x = 2(sigma_ee - sigma_gg), y = sigma_ss - sigma_aa,
///   z = sigma_ee + sigma_gg - sigma_ss - sigma_aa.
struct BlochState {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

/// Populations of the collective dressed states |e>, |s>, |a>, |g>.
struct CollectivePopulations {
    double ee = 0.0;
    double ss = 0.0;
    double aa = 0.0;
    double gg = 0.0;
};

/// Dressed-frame transform. theta solves cot(2 theta) = detuning/(2 rabi)
/// on the branch theta in (0, pi/2); tilde_omega = sqrt(rabi^2 +
/// (detuning/2)^2); omega_pm = carrier +- 2 tilde_omega.
DressedFrame dressed_frame(const DriveParams& drive);

/// Frequency of a spectral band in the dressed frame.
double band_frequency(const DressedFrame& frame, BandId band);

/// Detection phase delta = k_n * r_ab * cos(alpha) at an explicit
/// observation angle, with k_n/k_L = omega_n/omega_L.
double detection_phase_at(const Geometry& geometry, BandId band,
                          const DressedFrame& frame, double alpha);

/// Detection phase for detector 1 or 2 of the geometry.
double detection_phase(const Geometry& geometry, BandId band,
                       const DressedFrame& frame, int detector);

/// Inverts the (x, y, z) definitions under the normalization
/// sum(sigma) = 1. Throws UnphysicalStateError if any population falls
/// outside [-1e-9, 1 + 1e-9].
CollectivePopulations populations_from_xyz(const BlochState& state);

/// Forward map from populations to (x, y, z). Validates the populations.
BlochState xyz_from_populations(const CollectivePopulations& pops);

} // namespace mollowsim
