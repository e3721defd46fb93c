#include "mollowsim/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "mollowsim/errors.hpp"

namespace mollowsim {

namespace {

void validate(const BlochCoefficients& c) {
    if (!(c.xi_plus > 0.0))
        throw InvalidParameterError("coefficients: xi_plus must be > 0");
    const double slack = 1e-12 * c.xi_plus;
    if (std::abs(c.xi_minus) > c.xi_plus + slack ||
        std::abs(c.zeta_plus) > c.xi_plus + slack ||
        std::abs(c.zeta_minus) > c.xi_plus + slack)
        throw InvalidParameterError(
            "coefficients: |xi_minus| and |zeta_pm| must not exceed xi_plus");
    if (!(c.c0 >= 0.0))
        throw InvalidParameterError("coefficients: c0 must be >= 0");
}

struct Deriv {
    double x, y, z;
};

inline Deriv rhs(const BlochCoefficients& c, double x, double y, double z) {
    return {-2.0 * c.xi_plus * x + 4.0 * c.zeta_minus * y + 4.0 * c.xi_minus,
            -c.zeta_minus * x - 2.0 * (c.c0 + c.xi_plus) * y +
                2.0 * c.zeta_plus * z,
            2.0 * c.xi_minus * x + 4.0 * c.zeta_plus * y - 4.0 * c.xi_plus * z};
}

} // namespace

BlochCoefficients coefficients_from_rates(double gamma_minus,
                                          double gamma_plus,
                                          double gamma_center,
                                          double chi_minus, double chi_plus,
                                          double chi_center, double theta) {
    if (!(gamma_minus >= 0.0) || !(gamma_plus >= 0.0) || !(gamma_center >= 0.0))
        throw InvalidParameterError("coefficients: rates must be >= 0");
    if (gamma_minus == 0.0 && gamma_plus == 0.0)
        throw InvalidParameterError(
            "coefficients: gamma(omega_minus) and gamma(omega_plus) are both "
            "zero; no dissipation channel");
    const double s2 = std::sin(theta) * std::sin(theta);
    const double c2 = std::cos(theta) * std::cos(theta);
    const double s4 = s2 * s2;
    const double c4 = c2 * c2;
    const double sin2t = std::sin(2.0 * theta);

    BlochCoefficients c;
    c.xi_plus = gamma_minus * s4 + gamma_plus * c4;
    c.xi_minus = gamma_minus * s4 - gamma_plus * c4;
    c.zeta_plus = gamma_minus * chi_minus * s4 + gamma_plus * chi_plus * c4;
    c.zeta_minus = gamma_minus * chi_minus * s4 - gamma_plus * chi_plus * c4;
    c.c0 = gamma_center * (1.0 - chi_center) * sin2t * sin2t;
    validate(c);
    return c;
}

BlochCoefficients coefficients(const DressedFrame& frame,
                               const ReservoirProfile& profile,
                               CouplingModel coupling,
                               const Geometry& geometry) {
    const double carrier = frame.carrier();
    const double gm = profile.gamma_at(frame.omega_minus);
    const double gp = profile.gamma_at(frame.omega_plus);
    const double gc = profile.gamma_at(carrier);
    const double chi_m =
        collective_chi(coupling, frame.omega_minus, geometry.k_r, carrier).chi;
    const double chi_p =
        collective_chi(coupling, frame.omega_plus, geometry.k_r, carrier).chi;
    const double chi_c =
        collective_chi(coupling, carrier, geometry.k_r, carrier).chi;
    return coefficients_from_rates(gm, gp, gc, chi_m, chi_p, chi_c,
                                   frame.theta);
}

double default_step(const BlochCoefficients& coeffs) {
    return 1e-3 / std::max(coeffs.xi_plus, coeffs.c0 + coeffs.xi_plus);
}

BlochState evolve(const BlochState& state0, const BlochCoefficients& coeffs,
                  double t, double dt) {
    validate(coeffs);
    if (!(t >= 0.0))
        throw InvalidParameterError("evolve: t must be >= 0");
    if (!(dt > 0.0))
        throw InvalidParameterError("evolve: dt must be > 0");
    if (t == 0.0)
        return state0;

    const auto steps = static_cast<long long>(std::ceil(t / dt));
    const double h = t / static_cast<double>(steps);

    double x = state0.x, y = state0.y, z = state0.z;
    for (long long i = 0; i < steps; ++i) {
        const Deriv k1 = rhs(coeffs, x, y, z);
        const Deriv k2 = rhs(coeffs, x + 0.5 * h * k1.x, y + 0.5 * h * k1.y,
                             z + 0.5 * h * k1.z);
        const Deriv k3 = rhs(coeffs, x + 0.5 * h * k2.x, y + 0.5 * h * k2.y,
                             z + 0.5 * h * k2.z);
        const Deriv k4 = rhs(coeffs, x + h * k3.x, y + h * k3.y, z + h * k3.z);
        x += h / 6.0 * (k1.x + 2.0 * k2.x + 2.0 * k3.x + k4.x);
        y += h / 6.0 * (k1.y + 2.0 * k2.y + 2.0 * k3.y + k4.y);
        z += h / 6.0 * (k1.z + 2.0 * k2.z + 2.0 * k3.z + k4.z);
        if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(z))
            throw NumericalBlowupError(
                "evolve: non-finite state after step " + std::to_string(i + 1) +
                "; reduce dt");
    }
    return {x, y, z};
}

BlochState evolve(const BlochState& state0, const BlochCoefficients& coeffs,
                  double t) {
    return evolve(state0, coeffs, t, default_step(coeffs));
}

namespace {

// Partial-pivot Gaussian elimination for the 3x3 stationary system.
// Returns false when a pivot degenerates.
bool solve3(double a[3][3], double rhs[3], double out[3]) {
    int perm[3] = {0, 1, 2};
    double scale = 0.0;
    for (auto& row : a)
        for (double v : row)
            scale = std::max(scale, std::abs(v));
    if (scale == 0.0)
        return false;

    for (int col = 0; col < 3; ++col) {
        int pivot = col;
        for (int r = col + 1; r < 3; ++r)
            if (std::abs(a[perm[r]][col]) > std::abs(a[perm[pivot]][col]))
                pivot = r;
        std::swap(perm[col], perm[pivot]);
        const double p = a[perm[col]][col];
        if (std::abs(p) <= 1e-14 * scale)
            return false;
        for (int r = col + 1; r < 3; ++r) {
            const double m = a[perm[r]][col] / p;
            a[perm[r]][col] = 0.0;
            for (int c = col + 1; c < 3; ++c)
                a[perm[r]][c] -= m * a[perm[col]][c];
            rhs[perm[r]] -= m * rhs[perm[col]];
        }
    }
    for (int row = 2; row >= 0; --row) {
        double v = rhs[perm[row]];
        for (int c = row + 1; c < 3; ++c)
            v -= a[perm[row]][c] * out[c];
        out[row] = v / a[perm[row]][row];
    }
    return true;
}

} // namespace

BlochState steady_state(const BlochCoefficients& coeffs) {
    if (coeffs.xi_plus == 0.0 && coeffs.xi_minus == 0.0 &&
        coeffs.zeta_plus == 0.0 && coeffs.zeta_minus == 0.0)
        throw DegenerateSystemError(
            "steady_state: all sideband rates are zero; no unique steady "
            "state");
    validate(coeffs);
    const double a0[3][3] = {
        {-2.0 * coeffs.xi_plus, 4.0 * coeffs.zeta_minus, 0.0},
        {-coeffs.zeta_minus, -2.0 * (coeffs.c0 + coeffs.xi_plus),
         2.0 * coeffs.zeta_plus},
        {2.0 * coeffs.xi_minus, 4.0 * coeffs.zeta_plus,
         -4.0 * coeffs.xi_plus}};
    const double b[3] = {4.0 * coeffs.xi_minus, 0.0, 0.0};

    double a[3][3];
    double rhs[3];
    for (int r = 0; r < 3; ++r) {
        rhs[r] = -b[r];
        for (int c = 0; c < 3; ++c)
            a[r][c] = a0[r][c];
    }
    double v[3] = {0.0, 0.0, 0.0};
    if (!solve3(a, rhs, v))
        throw DegenerateSystemError(
            "steady_state: singular stationary system");

    // One step of iterative refinement, then verify the residual.
    double resid[3];
    double bnorm = 0.0;
    for (int r = 0; r < 3; ++r) {
        resid[r] = b[r];
        for (int c = 0; c < 3; ++c)
            resid[r] += a0[r][c] * v[c];
        bnorm = std::max(bnorm, std::abs(b[r]));
    }
    double a2[3][3];
    double rhs2[3];
    for (int r = 0; r < 3; ++r) {
        rhs2[r] = -resid[r];
        for (int c = 0; c < 3; ++c)
            a2[r][c] = a0[r][c];
    }
    double dv[3] = {0.0, 0.0, 0.0};
    if (solve3(a2, rhs2, dv))
        for (int r = 0; r < 3; ++r)
            v[r] += dv[r];

    double rnorm = 0.0;
    for (int r = 0; r < 3; ++r) {
        double res = b[r];
        for (int c = 0; c < 3; ++c)
            res += a0[r][c] * v[c];
        rnorm = std::max(rnorm, std::abs(res));
    }
    if (rnorm > 1e-12 * std::max(1.0, bnorm))
        throw DegenerateSystemError(
            "steady_state: stationary solve residual " + std::to_string(rnorm) +
            " exceeds tolerance; system is near-singular");
    return {v[0], v[1], v[2]};
}

BlochState steady_state_closed_form(const BlochCoefficients& coeffs) {
    validate(coeffs);
    const double r = coeffs.xi_minus / coeffs.xi_plus;
    return {2.0 * r, 0.0, r * r};
}

ValidityReport validity_check(const DressedFrame& frame,
                              const ReservoirProfile& profile,
                              CouplingModel coupling,
                              const Geometry& geometry, double threshold) {
    if (!(threshold > 0.0))
        throw InvalidParameterError("validity_check: threshold must be > 0");
    ValidityReport report;
    report.dipole_dipole_warning = geometry.k_r < 2.0 * pi;

    const struct {
        const char* name;
        double omega;
    } bands[] = {{"omega_plus", frame.omega_plus},
                 {"omega_minus", frame.omega_minus},
                 {"omega_L", frame.carrier()}};

    double min_ratio = std::numeric_limits<double>::infinity();
    for (const auto& b : bands) {
        const double g = profile.gamma_at(b.omega);
        const double r = frame.tilde_omega / g;
        report.ratios.emplace_back(std::string("tilde_omega/gamma(") + b.name +
                                       ")",
                                   r);
        min_ratio = std::min(min_ratio, r);
        const double shift =
            collective_chi(coupling, b.omega, geometry.k_r, frame.carrier())
                .omega_shift;
        if (std::abs(shift) > 0.0) {
            const double rs = frame.tilde_omega / (g * std::abs(shift));
            report.ratios.emplace_back(std::string("tilde_omega/(gamma(") +
                                           b.name + ")*|Omega_ab|)",
                                       rs);
            min_ratio = std::min(min_ratio, rs);
        }
    }
    report.strong_field_ok = min_ratio >= threshold;
    return report;
}

} // namespace mollowsim
