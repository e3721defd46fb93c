#include "mollowsim/observables.hpp"

#include <cmath>
#include <string>

#include "mollowsim/errors.hpp"

namespace mollowsim {

double band_intensity_two_atom(BandId band, const CollectivePopulations& pops,
                               const DressedFrame& frame,
                               const Geometry& geometry, double alpha) {
    const double delta = detection_phase_at(geometry, band, frame, alpha);
    const double cross = pops.ss - pops.aa;
    switch (band) {
    case BandId::CB: {
        const double z = pops.ee + pops.gg - pops.ss - pops.aa;
        const double s2t = std::sin(2.0 * frame.theta);
        return 0.25 * s2t * s2t * (2.0 + 2.0 * z * std::cos(delta));
    }
    case BandId::LB: {
        const double diag = pops.gg + 0.5 * (pops.ss + pops.aa);
        const double s = std::sin(frame.theta);
        const double s4 = s * s * s * s;
        return s4 * (2.0 * diag + cross * std::cos(delta));
    }
    case BandId::RB: {
        const double diag = pops.ee + 0.5 * (pops.ss + pops.aa);
        const double c = std::cos(frame.theta);
        const double c4 = c * c * c * c;
        return c4 * (2.0 * diag + cross * std::cos(delta));
    }
    }
    throw InvalidParameterError("band_intensity_two_atom: unknown band");
}

namespace {

double sideband_visibility(double numerator, double denominator) {
    if (denominator == 0.0) {
        if (numerator == 0.0)
            return 0.0; // dark band, zero fringe by convention
        throw UndefinedVisibilityError(
            "visibilities: vanishing denominator with nonzero numerator");
    }
    return numerator / denominator;
}

} // namespace

VisibilitySet visibilities(const CollectivePopulations& pops) {
    const double num = pops.ss - pops.aa;
    VisibilitySet vis;
    vis.cb = pops.ee + pops.gg - pops.ss - pops.aa;
    vis.lb = sideband_visibility(num, 1.0 - pops.ee + pops.gg);
    vis.rb = sideband_visibility(num, 1.0 + pops.ee - pops.gg);
    return vis;
}

double eta_visibility_closed_form(double eta) {
    if (!(eta > 0.0))
        throw InvalidParameterError(
            "eta_visibility_closed_form: eta must be > 0");
    const double r = (1.0 - eta) / (1.0 + eta);
    return r * r;
}

double g2_band(BandId band, const CollectivePopulations& pops,
               const VisibilitySet& vis, double delta1, double delta2) {
    const double c1 = std::cos(delta1);
    const double c2 = std::cos(delta2);
    switch (band) {
    case BandId::CB: {
        const double d = (1.0 + vis.cb * c1) * (1.0 + vis.cb * c2);
        if (d == 0.0)
            throw SingularCorrelationError(
                "g2_band: detector at a dark fringe of fully coherent "
                "central-band light");
        return 1.0 + (1.0 - vis.cb * vis.cb) * c1 * c2 / d;
    }
    case BandId::LB:
    case BandId::RB: {
        const bool left = band == BandId::LB;
        const double pden =
            left ? 1.0 - pops.ee + pops.gg : 1.0 + pops.ee - pops.gg;
        if (pden == 0.0)
            throw SingularCorrelationError(
                "g2_band: sideband carries no light for these populations");
        const double p =
            2.0 * (left ? pops.gg : pops.ee) / (pden * pden);
        const double v = left ? vis.lb : vis.rb;
        const double d = (1.0 + v * c1) * (1.0 + v * c2);
        if (d == 0.0)
            throw SingularCorrelationError(
                "g2_band: detector at a dark fringe of fully coherent "
                "sideband light");
        return p * (1.0 + std::cos(delta1 - delta2)) / d;
    }
    }
    throw InvalidParameterError("g2_band: unknown band");
}

double g2_weak_field(double omega_over_gamma, double delta) {
    if (!(omega_over_gamma >= 0.0))
        throw InvalidParameterError(
            "g2_weak_field: omega_over_gamma must be >= 0");
    const double s = 1.0 + 2.0 * omega_over_gamma * omega_over_gamma;
    const double den = s + std::cos(delta);
    if (den == 0.0)
        throw SingularCorrelationError(
            "g2_weak_field: s + cos(delta) vanishes");
    const double r = s / den;
    return r * r;
}

double array_factor(int n_atoms, double delta) {
    if (n_atoms < 1)
        throw InvalidParameterError("array_factor: n_atoms must be >= 1");
    const double n = static_cast<double>(n_atoms);
    const double half = std::sin(0.5 * delta);
    if (half == 0.0)
        return n * n;
    const double top = std::sin(0.5 * n * delta);
    return top * top / (half * half);
}

double chain_intensity(int n_atoms, double z, double delta) {
    if (n_atoms < 1)
        throw InvalidParameterError("chain_intensity: n_atoms must be >= 1");
    if (!(std::abs(z) <= 1.0 + 1e-12))
        throw InvalidParameterError("chain_intensity: |z| must be <= 1");
    const double n = static_cast<double>(n_atoms);
    return n * (1.0 - z) + z * array_factor(n_atoms, delta);
}

PhotonStatistics photon_statistics_class(double g2_value) {
    if (!(g2_value >= 0.0))
        throw InvalidParameterError(
            "photon_statistics_class: g2 must be >= 0, got " +
            std::to_string(g2_value));
    constexpr double tol = 1e-9;
    if (g2_value < 1.0 - tol)
        return PhotonStatistics::SubPoissonian;
    if (g2_value > 1.0 + tol)
        return PhotonStatistics::SuperPoissonian;
    return PhotonStatistics::Poissonian;
}

} // namespace mollowsim
