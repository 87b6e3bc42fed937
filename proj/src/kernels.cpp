#include "relbell/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "parallel_for.hpp"
#include "relbell/wigner.hpp"

namespace relbell {

std::vector<double> beta_grid(double lo, double hi, int steps)
{
    if (!(lo >= 0.0 && lo < hi && hi <= 1.0)) {
        throw std::invalid_argument("beta grid requires 0 <= beta_min < beta_max <= 1");
    }
    if (steps < 2) {
        throw std::invalid_argument("beta grid requires at least 2 steps");
    }
    std::vector<double> out(static_cast<std::size_t>(steps));
    double const h = (hi - lo) / (steps - 1);
    for (int i = 0; i < steps; ++i) out[static_cast<std::size_t>(i)] = lo + i * h;
    out.back() = hi;
    return out;
}

std::uint64_t stream_seed(std::uint64_t master, std::uint64_t index)
{
    std::seed_seq seq{static_cast<std::uint32_t>(master), static_cast<std::uint32_t>(master >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    std::array<std::uint32_t, 2> words{};
    seq.generate(words.begin(), words.end());
    return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

Vec3 random_unit(SampleRng& rng)
{
    std::normal_distribution<double> n(0.0, 1.0);
    for (;;) {
        Vec3 const v{n(rng), n(rng), n(rng)};
        double const len = norm(v);
        if (len > 1e-8) return v / len;
    }
}

double random_uniform(SampleRng& rng, double lo, double hi)
{
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

std::vector<WignerRow> wigner_scan(std::vector<double> const& betas, std::vector<double> const& e_over_m_list,
                                   Execution exec)
{
    std::int64_t const nb = static_cast<std::int64_t>(betas.size());
    std::vector<WignerRow> rows(betas.size() * e_over_m_list.size());
    detail::parallel_for(static_cast<std::int64_t>(rows.size()), exec, [&](std::int64_t k) {
        double const r = e_over_m_list[static_cast<std::size_t>(k / nb)];
        double const beta = betas[static_cast<std::size_t>(k % nb)];
        double const omega = beta >= 1.0 ? wigner_angle_limit(r) : wigner_angle(beta, r);
        rows[static_cast<std::size_t>(k)] = {beta, r, omega};
    });
    return rows;
}

TwoQubitState boosted_bell_state(BellIndex idx, double beta, double e_over_m)
{
    TwoQubitState const s = bell_state(idx, FourMomentum::from_e_over_m({0.0, 0.0, 1.0}, e_over_m));
    return boost_two_particle(s, BoostSpec::from_beta({1.0, 0.0, 0.0}, beta));
}

std::vector<ChshRow> chsh_scan(ChshScanSpec const& spec, Execution exec)
{
    Vec3 const e{1.0, 0.0, 0.0};
    bool const invariant_sector = spec.state.i != spec.state.j;
    std::vector<ChshRow> rows(spec.betas.size());

    detail::parallel_for(static_cast<std::int64_t>(rows.size()), exec, [&](std::int64_t k) {
        double const beta = std::min(spec.betas[static_cast<std::size_t>(k)], matrix_beta_cap);
        TwoQubitState const s = boosted_bell_state(spec.state, beta, spec.e_over_m);

        ChshRow row;
        row.beta = beta;
        switch (spec.vectors) {
        case VectorChoice::case1:
            row.chsh = chsh(s, case1_settings(), beta, e);
            break;
        case VectorChoice::case2:
            row.chsh = chsh(s, case2_settings(), beta, e);
            break;
        case VectorChoice::matched:
            row.chsh = chsh(s, matched_settings(spec.state), beta, e);
            break;
        case VectorChoice::optimal: {
            OptimizerOptions opts = spec.optimizer;
            opts.execution = Execution::serial;
            row.chsh = maximize_chsh(s, beta, e, opts).value;
            break;
        }
        }
        if (!invariant_sector) {
            row.omega = wigner_angle(beta, spec.e_over_m);
        }
        rows[static_cast<std::size_t>(k)] = row;
    });
    return rows;
}

SweepResult residual_sweep(std::int64_t samples, std::uint64_t seed, double tolerance,
                           std::function<double(std::int64_t, SampleRng&)> const& residual, Execution exec)
{
    std::vector<double> values(static_cast<std::size_t>(std::max<std::int64_t>(samples, 0)));
    detail::parallel_for(samples, exec, [&](std::int64_t i) {
        SampleRng rng(stream_seed(seed, static_cast<std::uint64_t>(i)));
        values[static_cast<std::size_t>(i)] = residual(i, rng);
    });

    SweepResult out;
    for (std::int64_t i = 0; i < samples; ++i) {
        double const v = values[static_cast<std::size_t>(i)];
        bool const bad = !(v <= tolerance);
        if (bad && out.first_failure < 0) out.first_failure = i;
        if (std::isnan(v)) {
            if (!std::isnan(out.max_residual)) {
                out.max_residual = v;
                out.worst_index = i;
            }
        } else if (out.worst_index < 0 || v > out.max_residual) {
            out.max_residual = v;
            out.worst_index = i;
        }
    }
    return out;
}

SweepResult little_group_oracle_sweep(std::int64_t samples, std::uint64_t seed, Execution exec)
{
    return residual_sweep(
        samples, seed, 1e-10,
        [](std::int64_t, SampleRng& rng) {
            BoostSpec const b = BoostSpec::from_beta(random_unit(rng), random_uniform(rng, 0.0, 0.99));
            FourMomentum const p = FourMomentum::from_e_over_m(random_unit(rng), random_uniform(rng, 1.0, 1000.0));
            return max_abs_diff(little_group_closed(b, p).su2, little_group_oracle(b, p));
        },
        exec);
}

} // namespace relbell
