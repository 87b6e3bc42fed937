#include "relbell/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "parallel_for.hpp"
#include "relbell/kernels.hpp"

namespace relbell {

namespace {

constexpr std::size_t dim = 8;
using Point = SettingsAngles;

MeasurementDirection direction_from(double theta, double phi)
{
    double const st = std::sin(theta);
    return MeasurementDirection({st * std::cos(phi), st * std::sin(phi), std::cos(theta)});
}

struct RestartOutcome {
    Point best{};
    double value = 0.0;
    int iterations = 0;
    bool converged = false;
};

template <class Objective>
RestartOutcome nelder_mead(Objective const& f, Point const& start, double tol, int max_iterations)
{
    constexpr double reflect = 1.0;
    constexpr double expand = 2.0;
    constexpr double contract = 0.5;
    constexpr double shrink = 0.5;
    constexpr double initial_step = 0.5;

    std::array<Point, dim + 1> simplex{};
    std::array<double, dim + 1> fv{};
    simplex[0] = start;
    for (std::size_t i = 0; i < dim; ++i) {
        simplex[i + 1] = start;
        simplex[i + 1][i] += initial_step;
    }
    for (std::size_t i = 0; i <= dim; ++i) fv[i] = f(simplex[i]);

    std::array<std::size_t, dim + 1> order{};
    auto sort_simplex = [&] {
        for (std::size_t i = 0; i <= dim; ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) { return fv[l] < fv[r]; });
        auto s2 = simplex;
        auto f2 = fv;
        for (std::size_t i = 0; i <= dim; ++i) {
            simplex[i] = s2[order[i]];
            fv[i] = f2[order[i]];
        }
    };
    auto diameter = [&] {
        double d = 0.0;
        for (std::size_t i = 1; i <= dim; ++i)
            for (std::size_t k = 0; k < dim; ++k) d = std::max(d, std::abs(simplex[i][k] - simplex[0][k]));
        return d;
    };
    auto along = [](Point const& c, Point const& w, double t) {
        Point out{};
        for (std::size_t k = 0; k < dim; ++k) out[k] = c[k] + t * (c[k] - w[k]);
        return out;
    };

    RestartOutcome out;
    sort_simplex();
    int it = 0;
    for (; it < max_iterations; ++it) {
        if (diameter() < tol) {
            out.converged = true;
            break;
        }
        Point centroid{};
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t k = 0; k < dim; ++k) centroid[k] += simplex[i][k] / static_cast<double>(dim);

        Point const& worst = simplex[dim];
        Point const xr = along(centroid, worst, reflect);
        double const fr = f(xr);
        if (fr < fv[0]) {
            Point const xe = along(centroid, worst, reflect * expand);
            double const fe = f(xe);
            if (fe < fr) {
                simplex[dim] = xe;
                fv[dim] = fe;
            } else {
                simplex[dim] = xr;
                fv[dim] = fr;
            }
        } else if (fr < fv[dim - 1]) {
            simplex[dim] = xr;
            fv[dim] = fr;
        } else {
            bool const outside = fr < fv[dim];
            Point const xc = outside ? along(centroid, worst, reflect * contract) : along(centroid, worst, -contract);
            double const fc = f(xc);
            if (fc < (outside ? fr : fv[dim])) {
                simplex[dim] = xc;
                fv[dim] = fc;
            } else {
                for (std::size_t i = 1; i <= dim; ++i) {
                    for (std::size_t k = 0; k < dim; ++k)
                        simplex[i][k] = simplex[0][k] + shrink * (simplex[i][k] - simplex[0][k]);
                    fv[i] = f(simplex[i]);
                }
            }
        }
        sort_simplex();
    }
    if (!out.converged && diameter() < tol) out.converged = true;
    out.best = simplex[0];
    out.value = -fv[0];
    out.iterations = it;
    return out;
}

} // namespace

ChshSettings settings_from_angles(SettingsAngles const& x)
{
    return {direction_from(x[0], x[1]), direction_from(x[2], x[3]), direction_from(x[4], x[5]),
            direction_from(x[6], x[7])};
}

OptimizationResult maximize_chsh(TwoQubitState const& s, double beta, Vec3 const& e, OptimizerOptions const& opts)
{
    if (!(beta >= 0.0 && beta < 1.0)) {
        throw std::invalid_argument("optimizer requires 0 <= beta < 1");
    }
    if (opts.restarts < 1) {
        throw std::invalid_argument("optimizer requires at least one restart");
    }
    if (!(opts.tol > 0.0)) {
        throw std::invalid_argument("optimizer tolerance must be positive");
    }
    if (opts.max_iterations < 1) {
        throw std::invalid_argument("optimizer needs a positive iteration budget");
    }

    auto const objective = [&](Point const& x) { return -chsh(s, settings_from_angles(x), beta, e); };

    std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(opts.restarts));
    auto run_restart = [&](int k) {
        SampleRng rng(stream_seed(opts.seed, static_cast<std::uint64_t>(k)));
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        Point start{};
        for (std::size_t d = 0; d < dim; d += 2) {
            start[d] = std::numbers::pi * unit(rng);
            start[d + 1] = 2.0 * std::numbers::pi * unit(rng);
        }
        outcomes[static_cast<std::size_t>(k)] = nelder_mead(objective, start, opts.tol, opts.max_iterations);
    };

    detail::parallel_for(opts.restarts, opts.execution, [&](std::int64_t k) { run_restart(static_cast<int>(k)); });

    double best_value = outcomes.front().value;
    for (auto const& o : outcomes) best_value = std::max(best_value, o.value);
    auto const winner = std::find_if(outcomes.begin(), outcomes.end(),
                                     [&](RestartOutcome const& o) { return o.value >= best_value - opts.tol; });

    return {settings_from_angles(winner->best), winner->value, winner->iterations, opts.restarts,
            winner->converged};
}

} // namespace relbell
