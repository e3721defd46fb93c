#pragma once

#include "mollowsim/core.hpp"

namespace mollowsim {

/// Fringe visibilities of the three spectral bands:
///   V_CB = sigma_ee + sigma_gg - sigma_ss - sigma_aa
///   V_LB = (sigma_ss - sigma_aa) / (1 - sigma_ee + sigma_gg)
///   V_RB = (sigma_ss - sigma_aa) / (1 + sigma_ee - sigma_gg)
struct VisibilitySet {
    double cb = 0.0;
    double lb = 0.0;
    double rb = 0.0;
};

/// Two-atom angular intensity of one spectral band, in units of the detector
/// prefactor Psi_R(omega_n):
///   CB: (sin^2(2 theta)/4) [2 + 2 z cos(delta_0)]
///   LB: sin^4(theta) [2 (sigma_gg + (sigma_ss+sigma_aa)/2)
///                     + (sigma_ss - sigma_aa) cos(delta_-)]
///   RB: cos^4(theta) [2 (sigma_ee + (sigma_ss+sigma_aa)/2)
///                     + (sigma_ss - sigma_aa) cos(delta_+)]
/// with delta_n the detection phase of the band at angle alpha.
double band_intensity_two_atom(BandId band, const CollectivePopulations& pops,
                               const DressedFrame& frame,
                               const Geometry& geometry, double alpha);

/// Band visibilities from the collective populations. An identically dark
/// sideband (vanishing numerator and denominator) reports visibility 0.
VisibilitySet visibilities(const CollectivePopulations& pops);

/// Central-band visibility of the symmetric-drive large-distance pipeline,
/// [(1 - eta)/(1 + eta)]^2.
double eta_visibility_closed_form(double eta);

/// Two-detector second-order correlation of one band, evaluated at the
/// band's detection phases delta1, delta2:
///   CB:     1 + (1 - V^2) cos(delta1) cos(delta2) / D
///   LB/RB:  p [1 + cos(delta1 - delta2)] / D
/// with D = prod_m (1 + V cos(delta_m)), p_L = 2 sigma_gg/(1-sigma_ee+
/// sigma_gg)^2 and p_R = 2 sigma_ee/(1+sigma_ee-sigma_gg)^2. Throws
/// SingularCorrelationError at a dark fringe of fully coherent light.
double g2_band(BandId band, const CollectivePopulations& pops,
               const VisibilitySet& vis, double delta1, double delta2);

/// Weak-field single-detector correlation [s/(s + cos delta)]^2 with
/// s = 1 + 2 (Omega/gamma)^2.
double g2_weak_field(double omega_over_gamma, double delta);

/// N-emitter array factor sin^2(N x/2)/sin^2(x/2), with the removable
/// singularity F(2 pi n) = N^2 handled analytically.
double array_factor(int n_atoms, double delta);

/// Central-band intensity of a uniform chain, in units of
/// sin^2(2 theta) Psi_R(omega_L)/4:  N (1 - z) + z F(delta).
double chain_intensity(int n_atoms, double z, double delta);

enum class PhotonStatistics { SubPoissonian, Poissonian, SuperPoissonian };

/// Classifies a g2 value against 1 with tolerance 1e-9.
PhotonStatistics photon_statistics_class(double g2_value);

} // namespace mollowsim
