#pragma once

#include <functional>

#include "mollowsim/core.hpp"
#include "mollowsim/dynamics.hpp"

namespace mollowsim::oracle {

/// Extrema of a sampled angular intensity curve and the visibility
/// (i_max - i_min)/(i_max + i_min) they define.
struct FringeScan {
    double i_max = 0.0;
    double i_min = 0.0;
    double arg_max = 0.0;
    double arg_min = 0.0;
    double visibility = 0.0;
};

/// Exact propagation of the affine Bloch system by matrix exponential,
/// v(t) = exp(A t)(v0 - v*) + v*. Falls back to the augmented homogeneous
/// 4x4 form when A is singular. Reference accuracy 1e-12; independent of
/// the fixed-step integrator it checks.
BlochState expm_propagate(const BlochState& state0,
                          const BlochCoefficients& coeffs, double t);

/// Slowest decay rate of the Bloch system, min(-Re lambda_i) over the
/// eigenvalues of the system matrix.
double slowest_decay_rate(const BlochCoefficients& coeffs);

/// Termwise double sum behind the chain formula:
/// sum_{j,l} (j == l ? 1 : z cos((j-l) delta)).
double brute_force_chain(int n_atoms, double z, double delta);

/// Scans a curve on [lo, hi], refines each extremum by local quadratic fit,
/// and reports the fringe visibility. A flat curve (spread below
/// 1e-12 * i_max) reports visibility 0.
FringeScan fringe_scan(const std::function<double(double)>& curve,
                       int grid = 4096, double lo = 0.0, double hi = pi);

} // namespace mollowsim::oracle
