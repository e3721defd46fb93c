#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "mollowsim/core.hpp"
#include "mollowsim/reservoir.hpp"

namespace mollowsim {

/// Rates of the dressed-correlator equations of motion:
///   dx/dt = -2 xi_plus x + 4 zeta_minus y + 4 xi_minus
///   dy/dt = -zeta_minus x - 2 (c0 + xi_plus) y + 2 zeta_plus z
///   dz/dt =  2 xi_minus x + 4 zeta_plus y - 4 xi_plus z
struct BlochCoefficients {
    double xi_plus = 0.0;
    double xi_minus = 0.0;
    double zeta_plus = 0.0;
    double zeta_minus = 0.0;
    double c0 = 0.0;
};

/// Assembles the coefficients from explicit sideband/center rates and
/// collective couplings:
///   xi_pm   = gm s^4 +- gp c^4
///   zeta_pm = gm chi_m s^4 +- gp chi_p c^4
///   c0      = gc (1 - chi_c) sin^2(2 theta)
/// with s = sin(theta), c = cos(theta).
BlochCoefficients coefficients_from_rates(double gamma_minus,
                                          double gamma_plus,
                                          double gamma_center,
                                          double chi_minus, double chi_plus,
                                          double chi_center, double theta);

/// Coefficients for a dressed frame embedded in a reservoir profile with the
/// given inter-atom coupling model and geometry.
BlochCoefficients coefficients(const DressedFrame& frame,
                               const ReservoirProfile& profile,
                               CouplingModel coupling,
                               const Geometry& geometry);

/// Integration step that keeps the fixed-step integrator both accurate and
/// stable for the stiffest decay channel of the system.
double default_step(const BlochCoefficients& coeffs);

/// Fixed-step classical 4th-order propagation of the Bloch vector over
/// duration t. Throws NumericalBlowupError on non-finite intermediates.
BlochState evolve(const BlochState& state0, const BlochCoefficients& coeffs,
                  double t, double dt);
BlochState evolve(const BlochState& state0, const BlochCoefficients& coeffs,
                  double t);

/// Stationary Bloch vector by direct 3x3 solve with partial pivoting.
/// Throws DegenerateSystemError if the system matrix is singular.
BlochState steady_state(const BlochCoefficients& coeffs);

/// Stationary solution in the large-distance regime zeta_pm = 0:
///   x = 2 xi_minus/xi_plus, y = 0, z = (xi_minus/xi_plus)^2.
BlochState steady_state_closed_form(const BlochCoefficients& coeffs);

/// Strong-field validity diagnostics. Reports, never blocks.
struct ValidityReport {
    bool strong_field_ok = true;
    bool dipole_dipole_warning = false;
    std::vector<std::pair<std::string, double>> ratios;
};

/// strong_field_ok requires tilde_omega >= threshold * r for every rate
/// r in {gamma(omega_n), gamma(omega_n)*|Omega_ab(omega_n)|} over the three
/// band frequencies; dipole_dipole_warning flags k_r < 2 pi, where
/// dipole-dipole line splittings invalidate the band-resolved picture.
ValidityReport validity_check(const DressedFrame& frame,
                              const ReservoirProfile& profile,
                              CouplingModel coupling,
                              const Geometry& geometry,
                              double threshold = 50.0);

} // namespace mollowsim
