// Derivative-free maximization of the CHSH combination over the four
// measurement directions.
#pragma once

#include <array>
#include <cstdint>

#include "relbell/execution.hpp"
#include "relbell/observables.hpp"

namespace relbell {

struct OptimizationResult {
    ChshSettings settings;
    double value = 0.0;
    int iterations = 0;    ///< iterations of the winning restart
    int restarts_used = 0;
    bool converged = false; ///< final polytope diameter of the winning restart < tol
};

struct OptimizerOptions {
    int restarts = 32;
    double tol = 1e-9;
    int max_iterations = 2000;
    std::uint64_t seed = 0;
    Execution execution = Execution::parallel;
};

/// Each direction is (theta, phi) on the unit sphere, eight angles in all.
using SettingsAngles = std::array<double, 8>;
ChshSettings settings_from_angles(SettingsAngles const& x);

/// Nelder-Mead on the 8 angles, `restarts` independent random starts. Restart k
/// draws its start from mt19937_64 seeded with (seed, k). The best value wins;
/// values within tol of the best go to the lowest restart index.
///
/// Throws std::invalid_argument for beta outside [0, 1), restarts < 1 or
/// tol <= 0. Running out of iterations is reported through `converged`.
OptimizationResult maximize_chsh(TwoQubitState const& s, double beta, Vec3 const& e,
                                 OptimizerOptions const& opts = {});

} // namespace relbell
