// Randomized invariant suite behind `relbell verify`.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "relbell/execution.hpp"
#include "relbell/wigner.hpp"

namespace relbell {

struct VerifyConfig {
    std::uint64_t seed = 42;
    std::int64_t samples = 10000;
    Execution execution = Execution::parallel;
};

/// Replaceable implementations, so a deliberately broken closed form can be
/// fed through the suite.
struct VerifyHooks {
    WignerRotation (*little_group)(BoostSpec const&, FourMomentum const&) = &little_group_closed;
};

struct CheckReport {
    std::string name;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    /// Inputs of the first failing sample; empty when the check passed.
    std::string failing_input;
};

std::vector<CheckReport> run_verification(VerifyConfig const& cfg, VerifyHooks const& hooks = {});

} // namespace relbell
