#include "relbell/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include "relbell/format.hpp"
#include "relbell/kernels.hpp"
#include "relbell/observables.hpp"
#include "relbell/optimizer.hpp"
#include "relbell/verify.hpp"
#include "relbell/wigner.hpp"

namespace relbell::cli {

namespace {

constexpr std::uint64_t default_seed = 42;

/// Invalid configuration detected after parsing; maps to exit_usage.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    double beta_min = 0.0;
    std::optional<double> beta_max;
    std::optional<int> steps;
    std::vector<double> e_over_m;
    std::string state = "10";
    std::string vectors = "case2";
    std::string out = "-";
    std::optional<std::uint64_t> seed;
    std::int64_t samples = 10000;
    int restarts = 32;
    double tol = 1e-9;
    double beta = 0.0;
    bool dump = false;
};

std::uint64_t resolve_seed(Options const& o, std::optional<std::string> const& env_seed)
{
    if (o.seed) return *o.seed;
    if (env_seed && !env_seed->empty()) {
        try {
            std::size_t used = 0;
            unsigned long long const v = std::stoull(*env_seed, &used);
            if (used != env_seed->size()) throw std::invalid_argument("trailing characters");
            return v;
        } catch (std::exception const&) {
            throw UsageError("RELBELL_SEED is not an unsigned integer: '" + *env_seed + "'");
        }
    }
    return default_seed;
}

VectorChoice parse_vectors(std::string const& v)
{
    if (v == "case1") return VectorChoice::case1;
    if (v == "case2") return VectorChoice::case2;
    if (v == "matched") return VectorChoice::matched;
    if (v == "optimal") return VectorChoice::optimal;
    throw UsageError("--vectors must be one of case1, case2, matched, optimal");
}

ChshSettings fixed_settings(VectorChoice v, BellIndex idx)
{
    switch (v) {
    case VectorChoice::case1:
        return case1_settings();
    case VectorChoice::case2:
        return case2_settings();
    default:
        return matched_settings(idx);
    }
}

BellIndex parse_state(std::string const& s)
{
    try {
        return parse_bell_index(s);
    } catch (std::invalid_argument const& ex) {
        throw UsageError(ex.what());
    }
}

std::vector<double> grid_or_usage(Options const& o, double default_max, int default_steps)
{
    try {
        return beta_grid(o.beta_min, o.beta_max.value_or(default_max), o.steps.value_or(default_steps));
    } catch (std::invalid_argument const& ex) {
        throw UsageError(ex.what());
    }
}

double e_over_m_or_usage(Options const& o)
{
    if (o.e_over_m.empty()) return 10.0;
    if (o.e_over_m.size() != 1) {
        throw UsageError("this command takes a single --e-over-m value");
    }
    if (!(o.e_over_m.front() > 1.0)) {
        throw UsageError("--e-over-m must exceed 1 (the pair needs |p| > 0)");
    }
    return o.e_over_m.front();
}

/// Writes through `body` to stdout ("-") or to a file; an unopenable path is a
/// usage error.
template <class Body>
void with_output(std::string const& path, std::ostream& out, Body&& body)
{
    if (path == "-") {
        body(out);
        return;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw UsageError("cannot open output file '" + path + "'");
    body(file);
    file.flush();
    if (!file) throw UsageError("failed writing output file '" + path + "'");
}

std::string vec_text(Vec3 const& v)
{
    return format_double(v.x) + "," + format_double(v.y) + "," + format_double(v.z);
}

int cmd_wigner_scan(Options const& o, std::ostream& out)
{
    std::vector<double> const betas = grid_or_usage(o, 0.99, 100);
    std::vector<double> series = o.e_over_m.empty() ? std::vector<double>{10.0, 100.0, 1000.0} : o.e_over_m;
    for (double r : series) {
        if (!(r >= 1.0)) throw UsageError("--e-over-m values must be >= 1");
    }
    std::vector<WignerRow> const rows = wigner_scan(betas, series);
    with_output(o.out, out, [&](std::ostream& os) {
        os << "beta,e_over_m,omega_rad\n";
        for (WignerRow const& r : rows) {
            os << format_double(r.beta) << ',' << format_double(r.e_over_m) << ',' << format_double(r.omega) << '\n';
        }
    });
    return exit_ok;
}

int cmd_chsh_scan(Options const& o, std::uint64_t seed, std::ostream& out)
{
    ChshScanSpec spec;
    spec.state = parse_state(o.state);
    spec.vectors = parse_vectors(o.vectors);
    spec.e_over_m = e_over_m_or_usage(o);
    spec.betas = grid_or_usage(o, 1.0, 101);
    spec.optimizer.restarts = o.restarts;
    spec.optimizer.tol = o.tol;
    spec.optimizer.seed = seed;
    if (o.restarts < 1 || !(o.tol > 0.0)) throw UsageError("--restarts must be >= 1 and --tol > 0");

    std::vector<ChshRow> const rows = chsh_scan(spec);
    with_output(o.out, out, [&](std::ostream& os) {
        os << "beta,chsh,omega_rad\n";
        for (ChshRow const& r : rows) {
            os << format_double(r.beta) << ',' << format_double(r.chsh) << ',';
            if (r.omega) os << format_double(*r.omega);
            os << '\n';
        }
    });
    return exit_ok;
}

int cmd_verify(Options const& o, std::uint64_t seed, VerifyHooks const& hooks, std::ostream& out)
{
    if (o.samples < 1) throw UsageError("--samples must be >= 1");
    std::vector<CheckReport> const reports = run_verification({seed, o.samples, Execution::parallel}, hooks);
    std::size_t passed = 0;
    for (CheckReport const& r : reports) {
        out << (r.passed ? "PASS " : "FAIL ") << r.name << "  max_residual=" << format_double(r.max_residual)
            << " tol=" << format_double(r.tolerance) << '\n';
        if (!r.passed) out << "  failing input: " << r.failing_input << '\n';
        passed += r.passed ? 1 : 0;
    }
    out << "verify: " << passed << '/' << reports.size() << " checks passed (seed " << seed << ", samples "
        << o.samples << ")\n";
    if (o.dump) {
        for (int k = 0; k < 4; ++k) {
            BellIndex const idx{k / 2, k % 2};
            out << "# state " << idx.i << idx.j << " boosted: beta=0.6 e_over_m=10\n";
            dump_state(out, boosted_bell_state(idx, 0.6, 10.0));
        }
    }
    return passed == reports.size() ? exit_ok : exit_verification_failed;
}

int cmd_optimize(Options const& o, std::uint64_t seed, std::ostream& out)
{
    if (!(o.beta >= 0.0 && o.beta < 1.0)) throw UsageError("--beta must lie in [0, 1) for optimize");
    if (o.restarts < 1 || !(o.tol > 0.0)) throw UsageError("--restarts must be >= 1 and --tol > 0");
    BellIndex const idx = parse_state(o.state);
    double const r = e_over_m_or_usage(o);
    Vec3 const e{1.0, 0.0, 0.0};

    TwoQubitState const s = boosted_bell_state(idx, o.beta, r);
    OptimizerOptions opts;
    opts.restarts = o.restarts;
    opts.tol = o.tol;
    opts.seed = seed;
    OptimizationResult const res = maximize_chsh(s, o.beta, e, opts);
    double const baseline = chsh(s, matched_settings(idx), o.beta, e);

    out << "state=" << o.state << '\n'
        << "beta=" << format_double(o.beta) << '\n'
        << "e_over_m=" << format_double(r) << '\n'
        << "seed=" << seed << '\n'
        << "value=" << format_double(res.value) << '\n'
        << "iterations=" << res.iterations << '\n'
        << "restarts_used=" << res.restarts_used << '\n'
        << "converged=" << (res.converged ? "true" : "false") << '\n'
        << "a=" << vec_text(res.settings.a.vec()) << '\n'
        << "a_prime=" << vec_text(res.settings.a_prime.vec()) << '\n'
        << "b=" << vec_text(res.settings.b.vec()) << '\n'
        << "b_prime=" << vec_text(res.settings.b_prime.vec()) << '\n'
        << "baseline_vectors=matched\n"
        << "baseline_value=" << format_double(baseline) << '\n'
        << "universal_closed_form=" << format_double(chsh_universal(o.beta)) << '\n';
    if (!res.converged) {
        out << "warning: optimizer stopped before the polytope diameter fell below tol\n";
    }
    return exit_ok;
}

int cmd_eval(Options const& o, std::ostream& out)
{
    if (!(o.beta >= 0.0 && o.beta <= 1.0)) throw UsageError("--beta must lie in [0, 1]");
    BellIndex const idx = parse_state(o.state);
    VectorChoice const vc = parse_vectors(o.vectors);
    if (vc == VectorChoice::optimal) throw UsageError("eval takes fixed vectors; use optimize for optimal");
    double const r = e_over_m_or_usage(o);
    double const beta = std::min(o.beta, matrix_beta_cap);
    Vec3 const e{1.0, 0.0, 0.0};

    TwoQubitState const s = boosted_bell_state(idx, beta, r);
    double const omega = wigner_angle(beta, r);
    out << "state=" << o.state << '\n'
        << "vectors=" << o.vectors << '\n'
        << "beta=" << format_double(beta) << '\n'
        << "e_over_m=" << format_double(r) << '\n'
        << "omega_rad=" << format_double(omega) << '\n'
        << "chsh=" << format_double(chsh(s, fixed_settings(vc, idx), beta, e)) << '\n'
        << "chsh_universal=" << format_double(chsh_universal(o.beta)) << '\n'
        << "chsh_case1_closed=" << format_double(chsh_case1_closed(beta, omega)) << '\n'
        << "chsh_case1_exact=" << format_double(chsh_case1_exact(beta, omega)) << '\n';
    if (o.dump) dump_state(out, s);
    return exit_ok;
}

} // namespace

int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err,
        std::optional<std::string> const& env_seed, VerifyHooks const& hooks)
{
    CLI::App app{"Wigner rotations, boosted Bell states and relativistic CHSH values"};
    app.require_subcommand(1);
    Options o;

    auto add_grid = [&](CLI::App* sub, char const* max_default, char const* steps_default) {
        sub->add_option("--beta-min", o.beta_min, "Smallest beta on the grid (default 0)");
        sub->add_option("--beta-max", o.beta_max, std::string("Largest beta on the grid (default ") + max_default + ")");
        sub->add_option("--steps", o.steps, std::string("Grid points including both ends (default ") + steps_default + ")");
        sub->add_option("--out", o.out, "Output CSV path, '-' for stdout (default -)");
    };
    auto add_seed = [&](CLI::App* sub) {
        sub->add_option("--seed", o.seed, "Master seed (overrides RELBELL_SEED)");
    };
    auto add_opt = [&](CLI::App* sub) {
        sub->add_option("--restarts", o.restarts, "Optimizer restarts")->capture_default_str();
        sub->add_option("--tol", o.tol, "Optimizer polytope-diameter tolerance")->capture_default_str();
    };

    CLI::App* wigner = app.add_subcommand("wigner-scan", "Wigner angle vs beta for p along z, boost along x");
    add_grid(wigner, "0.99", "100");
    wigner->add_option("--e-over-m", o.e_over_m, "E/m series (default 10 100 1000)");
    add_seed(wigner);

    CLI::App* chsh_cmd = app.add_subcommand("chsh-scan", "CHSH value of a boosted Bell state vs beta");
    add_grid(chsh_cmd, "1", "101");
    chsh_cmd->add_option("--e-over-m", o.e_over_m, "E/m of the pair (default 10)");
    chsh_cmd->add_option("--state", o.state, "Bell state 00, 01, 10 or 11")->capture_default_str();
    chsh_cmd->add_option("--vectors", o.vectors, "case1, case2, matched or optimal")->capture_default_str();
    add_seed(chsh_cmd);
    add_opt(chsh_cmd);

    CLI::App* verify = app.add_subcommand("verify", "Run the randomized invariant suite");
    verify->add_option("--samples", o.samples, "Samples per check")->capture_default_str();
    verify->add_flag("--dump", o.dump, "Also dump the boosted Bell states");
    add_seed(verify);

    CLI::App* optimize = app.add_subcommand("optimize", "Maximize CHSH over measurement directions");
    optimize->add_option("--state", o.state, "Bell state 00, 01, 10 or 11")->capture_default_str();
    optimize->add_option("--beta", o.beta, "Observer speed")->capture_default_str();
    optimize->add_option("--e-over-m", o.e_over_m, "E/m of the pair (default 10)");
    add_seed(optimize);
    add_opt(optimize);

    CLI::App* eval = app.add_subcommand("eval", "Single-point Wigner angle and CHSH values");
    eval->add_option("--state", o.state, "Bell state 00, 01, 10 or 11")->capture_default_str();
    eval->add_option("--vectors", o.vectors, "case1, case2 or matched")->capture_default_str();
    eval->add_option("--beta", o.beta, "Observer speed")->capture_default_str();
    eval->add_option("--e-over-m", o.e_over_m, "E/m of the pair (default 10)");
    eval->add_flag("--dump", o.dump, "Dump the boosted state");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();
    try {
        app.parse(reversed);
    } catch (CLI::CallForHelp const& e) {
        return app.exit(e, out, err);
    } catch (CLI::CallForAllHelp const& e) {
        return app.exit(e, out, err);
    } catch (CLI::ParseError const& e) {
        app.exit(e, out, err);
        return exit_usage;
    }

    try {
        std::uint64_t const seed = resolve_seed(o, env_seed);
        if (wigner->parsed()) return cmd_wigner_scan(o, out);
        if (chsh_cmd->parsed()) return cmd_chsh_scan(o, seed, out);
        if (verify->parsed()) return cmd_verify(o, seed, hooks, out);
        if (optimize->parsed()) return cmd_optimize(o, seed, out);
        if (eval->parsed()) return cmd_eval(o, out);
    } catch (UsageError const& ex) {
        err << "error: " << ex.what() << '\n';
        return exit_usage;
    } catch (std::invalid_argument const& ex) {
        err << "error: " << ex.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

} // namespace relbell::cli
