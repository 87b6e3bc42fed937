// Command-line front end: wigner-scan, chsh-scan, verify, optimize, eval.
#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "relbell/verify.hpp"

namespace relbell::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_verification_failed = 1;
inline constexpr int exit_usage = 2;

/// Runs the CLI on `args` (args[0] is the program name). `env_seed` is the
/// value of RELBELL_SEED, if set; an explicit --seed takes precedence.
/// `hooks` is forwarded to the verify subcommand.
int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err,
        std::optional<std::string> const& env_seed = std::nullopt, VerifyHooks const& hooks = {});

} // namespace relbell::cli
