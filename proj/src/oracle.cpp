#include "mollowsim/oracle.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "mollowsim/errors.hpp"

namespace mollowsim::oracle {

namespace {

// Own assembly of the system matrix so the oracle does not share code with
// the production solver.
Eigen::Matrix3d system_matrix(const BlochCoefficients& c) {
    Eigen::Matrix3d a;
    a << -2.0 * c.xi_plus, 4.0 * c.zeta_minus, 0.0,
        -c.zeta_minus, -2.0 * (c.c0 + c.xi_plus), 2.0 * c.zeta_plus,
        2.0 * c.xi_minus, 4.0 * c.zeta_plus, -4.0 * c.xi_plus;
    return a;
}

} // namespace

BlochState expm_propagate(const BlochState& state0,
                          const BlochCoefficients& coeffs, double t) {
    if (!(t >= 0.0))
        throw InvalidParameterError("expm_propagate: t must be >= 0");
    const Eigen::Matrix3d a = system_matrix(coeffs);
    const Eigen::Vector3d b(4.0 * coeffs.xi_minus, 0.0, 0.0);
    const Eigen::Vector3d v0(state0.x, state0.y, state0.z);

    const Eigen::FullPivLU<Eigen::Matrix3d> lu(a);
    if (lu.isInvertible()) {
        const Eigen::Vector3d vstar = lu.solve(-b);
        const Eigen::Matrix3d propagator = (a * t).exp();
        const Eigen::Vector3d v = propagator * (v0 - vstar) + vstar;
        return {v(0), v(1), v(2)};
    }

    // Augmented homogeneous form: d/dt (v, 1) = [[A, b], [0, 0]] (v, 1).
    Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
    m.topLeftCorner<3, 3>() = a;
    m.topRightCorner<3, 1>() = b;
    Eigen::Vector4d w(state0.x, state0.y, state0.z, 1.0);
    w = (m * t).exp() * w;
    return {w(0), w(1), w(2)};
}

double slowest_decay_rate(const BlochCoefficients& coeffs) {
    const Eigen::Matrix3d a = system_matrix(coeffs);
    const Eigen::EigenSolver<Eigen::Matrix3d> es(a);
    double slowest = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 3; ++i)
        slowest = std::min(slowest, -es.eigenvalues()(i).real());
    return slowest;
}

double brute_force_chain(int n_atoms, double z, double delta) {
    if (n_atoms < 1 || n_atoms > 64)
        throw InvalidParameterError(
            "brute_force_chain: n_atoms must be in [1, 64]");
    double sum = 0.0;
    for (int j = 0; j < n_atoms; ++j)
        for (int l = 0; l < n_atoms; ++l)
            sum += j == l ? 1.0 : z * std::cos((j - l) * delta);
    return sum;
}

namespace {

// Iterated three-point parabolic refinement of a bracketed extremum, with a
// golden-section fallback when the fit degenerates.
double refine_extremum(const std::function<double(double)>& f, double a,
                       double b, double c, bool maximize) {
    const double sign = maximize ? 1.0 : -1.0;
    double fa = sign * f(a), fb = sign * f(b), fc = sign * f(c);
    constexpr double inv_golden = 0.381966011250105; // 2 - golden ratio

    for (int iter = 0; iter < 200 && c - a > 1e-15 * (1.0 + std::abs(b));
         ++iter) {
        double u = a + b + c; // sentinel outside (a, c)
        if (iter % 2 == 0) {
            // Vertex of the parabola through (a, fa), (b, fb), (c, fc).
            const double d1 = (b - a) * (fb - fc);
            const double d2 = (b - c) * (fb - fa);
            const double denom = 2.0 * (d1 - d2);
            if (denom != 0.0)
                u = b - ((b - a) * d1 - (b - c) * d2) / denom;
        }
        // Golden step into the wider side guarantees bracket shrinkage.
        if (!(u > a && u < c) || u == b)
            u = b - a > c - b ? b - inv_golden * (b - a)
                              : b + inv_golden * (c - b);
        const double fu = sign * f(u);
        if (fu >= fb) {
            if (u < b) {
                c = b;
                fc = fb;
            } else {
                a = b;
                fa = fb;
            }
            b = u;
            fb = fu;
        } else {
            if (u < b) {
                a = u;
                fa = fu;
            } else {
                c = u;
                fc = fu;
            }
        }
    }
    return b;
}

} // namespace

FringeScan fringe_scan(const std::function<double(double)>& curve, int grid,
                       double lo, double hi) {
    if (grid < 1024)
        throw InvalidParameterError("fringe_scan: grid must be >= 1024");
    if (!(hi > lo))
        throw InvalidParameterError("fringe_scan: empty scan interval");

    const int n = grid + 1;
    std::vector<double> arg(n), val(n);
    const double h = (hi - lo) / grid;
    for (int i = 0; i < n; ++i) {
        arg[i] = lo + i * h;
        val[i] = curve(arg[i]);
    }

    int imax = 0, imin = 0;
    for (int i = 1; i < n; ++i) {
        if (val[i] > val[imax])
            imax = i;
        if (val[i] < val[imin])
            imin = i;
    }

    FringeScan scan;
    scan.arg_max = arg[imax];
    scan.i_max = val[imax];
    if (imax > 0 && imax < n - 1) {
        scan.arg_max =
            refine_extremum(curve, arg[imax - 1], arg[imax], arg[imax + 1],
                            /*maximize=*/true);
        scan.i_max = std::max(scan.i_max, curve(scan.arg_max));
    }
    scan.arg_min = arg[imin];
    scan.i_min = val[imin];
    if (imin > 0 && imin < n - 1) {
        scan.arg_min =
            refine_extremum(curve, arg[imin - 1], arg[imin], arg[imin + 1],
                            /*maximize=*/false);
        scan.i_min = std::min(scan.i_min, curve(scan.arg_min));
    }

    const double spread = scan.i_max - scan.i_min;
    if (spread < 1e-12 * std::abs(scan.i_max) || scan.i_max + scan.i_min == 0.0)
        scan.visibility = 0.0;
    else
        scan.visibility = spread / (scan.i_max + scan.i_min);
    return scan;
}

} // namespace mollowsim::oracle
