// Grid scans and randomized sweeps. Every kernel has a serial reference path
// and an OpenMP path selected by Execution; results are ordered by grid or
// sample index in both, so the two are bit-identical.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "relbell/bell_states.hpp"
#include "relbell/execution.hpp"
#include "relbell/optimizer.hpp"

namespace relbell {

/// Largest beta admitted by matrix-backed computations.
inline constexpr double matrix_beta_cap = 1.0 - 1e-12;

/// `steps` evenly spaced points from lo to hi inclusive; the last point is hi
/// exactly. Throws std::invalid_argument unless 0 <= lo < hi <= 1, steps >= 2.
std::vector<double> beta_grid(double lo, double hi, int steps);

/// Deterministic per-index stream seed derived from a master seed.
std::uint64_t stream_seed(std::uint64_t master, std::uint64_t index);

using SampleRng = std::mt19937_64;

/// Uniformly distributed unit vector.
Vec3 random_unit(SampleRng& rng);
double random_uniform(SampleRng& rng, double lo, double hi);

struct WignerRow {
    double beta = 0.0;
    double e_over_m = 1.0;
    double omega = 0.0;
};

/// Rows ordered series-major: for each E/m, every beta. beta = 1 uses
/// wigner_angle_limit.
std::vector<WignerRow> wigner_scan(std::vector<double> const& betas, std::vector<double> const& e_over_m_list,
                                   Execution exec = Execution::parallel);

enum class VectorChoice { case1, case2, matched, optimal };

struct ChshScanSpec {
    BellIndex state{1, 0};
    VectorChoice vectors = VectorChoice::case2;
    double e_over_m = 10.0;
    std::vector<double> betas;
    OptimizerOptions optimizer{};
};

struct ChshRow {
    double beta = 0.0; ///< as evaluated, after clamping to matrix_beta_cap
    double chsh = 0.0;
    std::optional<double> omega; ///< empty when the state's spin sector is boost invariant
};

/// The Bell state (idx) with momentum along +z at the given E/m, boosted along
/// +x with speed beta.
TwoQubitState boosted_bell_state(BellIndex idx, double beta, double e_over_m);

/// Matrix-path CHSH per grid point. With VectorChoice::optimal each row runs
/// maximize_chsh serially; rows are distributed across threads.
std::vector<ChshRow> chsh_scan(ChshScanSpec const& spec, Execution exec = Execution::parallel);

struct SweepResult {
    double max_residual = 0.0;
    std::int64_t worst_index = -1;
    /// Lowest sample index whose residual exceeded the tolerance (or was NaN).
    std::int64_t first_failure = -1;
};

/// Evaluates residual(index, rng) for index in [0, samples), each with its own
/// stream seeded by stream_seed(seed, index).
SweepResult residual_sweep(std::int64_t samples, std::uint64_t seed, double tolerance,
                           std::function<double(std::int64_t, SampleRng&)> const& residual,
                           Execution exec = Execution::parallel);

/// Max elementwise |closed - oracle| of the spin-1/2 little-group element over
/// random boosts (beta in [0, 0.99]) and momenta (E/m in [1, 1000]).
SweepResult little_group_oracle_sweep(std::int64_t samples, std::uint64_t seed,
                                      Execution exec = Execution::parallel);

} // namespace relbell
