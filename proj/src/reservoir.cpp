#include "mollowsim/reservoir.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "mollowsim/errors.hpp"

namespace mollowsim {

ReservoirProfile ReservoirProfile::flat(double gamma0) {
    if (!(gamma0 > 0.0))
        throw InvalidParameterError("flat profile: gamma0 must be > 0");
    ReservoirProfile p;
    p.kind_ = Kind::Flat;
    p.gamma0_ = gamma0;
    return p;
}

ReservoirProfile ReservoirProfile::lorentzian_cavity(double gamma0,
                                                     double coupling,
                                                     double center,
                                                     double width) {
    if (!(gamma0 > 0.0))
        throw InvalidParameterError("lorentzian cavity: gamma0 must be > 0");
    if (!(coupling >= 0.0))
        throw InvalidParameterError("lorentzian cavity: coupling must be >= 0");
    if (!(width > 0.0))
        throw InvalidParameterError("lorentzian cavity: width must be > 0");
    ReservoirProfile p;
    p.kind_ = Kind::LorentzianCavity;
    p.gamma0_ = gamma0;
    p.coupling_ = coupling;
    p.center_ = center;
    p.width_ = width;
    return p;
}

ReservoirProfile ReservoirProfile::band_gap_step(double gamma_low,
                                                 double gamma_high,
                                                 double edge) {
    if (!(gamma_low > 0.0) || !(gamma_high > 0.0))
        throw InvalidParameterError("band gap step: rates must be > 0");
    ReservoirProfile p;
    p.kind_ = Kind::BandGapStep;
    p.gamma_low_ = gamma_low;
    p.gamma_high_ = gamma_high;
    p.edge_ = edge;
    return p;
}

ReservoirProfile ReservoirProfile::tabulated(std::vector<double> omega,
                                             std::vector<double> gamma) {
    if (omega.size() != gamma.size() || omega.size() < 2)
        throw InvalidParameterError(
            "tabulated profile: need matching omega/gamma arrays of size >= 2");
    for (std::size_t i = 0; i < omega.size(); ++i) {
        if (i > 0 && !(omega[i] > omega[i - 1]))
            throw InvalidParameterError(
                "tabulated profile: omega must be strictly increasing");
        if (!(gamma[i] > 0.0))
            throw InvalidParameterError(
                "tabulated profile: gamma values must be > 0");
    }
    ReservoirProfile p;
    p.kind_ = Kind::Tabulated;
    p.tab_omega_ = std::move(omega);
    p.tab_gamma_ = std::move(gamma);
    return p;
}

double ReservoirProfile::gamma_at(double omega) const {
    if (!(omega > 0.0))
        throw InvalidParameterError("gamma_at: omega must be > 0");
    switch (kind_) {
    case Kind::Flat:
        return gamma0_;
    case Kind::LorentzianCavity: {
        const double d = omega - center_;
        return gamma0_ + coupling_ * width_ * width_ / (d * d + width_ * width_);
    }
    case Kind::BandGapStep:
        return omega < edge_ ? gamma_low_ : gamma_high_;
    case Kind::Tabulated: {
        if (omega < tab_omega_.front() || omega > tab_omega_.back())
            throw TabulatedRangeError(
                "gamma_at: omega = " + std::to_string(omega) +
                " outside tabulated range [" +
                std::to_string(tab_omega_.front()) + ", " +
                std::to_string(tab_omega_.back()) + "]");
        const auto it = std::upper_bound(tab_omega_.begin(), tab_omega_.end(),
                                         omega);
        if (it == tab_omega_.end())
            return tab_gamma_.back();
        const auto hi = static_cast<std::size_t>(it - tab_omega_.begin());
        if (hi == 0)
            return tab_gamma_.front();
        const double w =
            (omega - tab_omega_[hi - 1]) / (tab_omega_[hi] - tab_omega_[hi - 1]);
        return tab_gamma_[hi - 1] + w * (tab_gamma_[hi] - tab_gamma_[hi - 1]);
    }
    }
    throw InvalidParameterError("gamma_at: unknown profile kind");
}

double eta(const ReservoirProfile& profile, const DressedFrame& frame) {
    return profile.gamma_at(frame.omega_plus) /
           profile.gamma_at(frame.omega_minus);
}

CollectiveCoupling collective_chi(CouplingModel model, double omega,
                                  double k_r, double carrier) {
    if (!(k_r >= 0.0))
        throw InvalidParameterError("collective_chi: k_r must be >= 0");
    if (model == CouplingModel::Off)
        return {0.0, 0.0};
    if (!(carrier > 0.0))
        throw InvalidParameterError("collective_chi: carrier must be > 0");
    const double u = (omega / carrier) * k_r;
    if (u == 0.0)
        return {1.0, -std::numeric_limits<double>::infinity()};
    return {std::sin(u) / u, -std::cos(u) / u};
}

} // namespace mollowsim
