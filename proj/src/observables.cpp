#include "relbell/observables.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace relbell {

namespace {

double one_minus_beta_sq(double beta) { return (1.0 - beta) * (1.0 + beta); }

void check_closed_beta(double beta)
{
    if (!(beta >= 0.0 && beta <= 1.0)) {
        throw std::invalid_argument("beta must lie in [0, 1], got " + std::to_string(beta));
    }
}

/// sqrt(1 + beta^2 (ax^2 - 1)) for a boost along x.
double x_boost_normalizer(double ax, double beta)
{
    double const n2 = 1.0 + beta * beta * (ax * ax - 1.0);
    if (!(n2 > 0.0)) {
        throw std::domain_error("observable normalizer vanishes (direction perpendicular to the boost at beta = 1)");
    }
    return std::sqrt(n2);
}

} // namespace

MeasurementDirection::MeasurementDirection(Vec3 const& a) : a_(a)
{
    if (!is_finite(a) || std::abs(norm(a) - 1.0) > 1e-12) {
        throw std::invalid_argument("measurement direction must be a unit vector");
    }
}

MeasurementDirection MeasurementDirection::along(Vec3 const& v) { return MeasurementDirection(normalized(v)); }

SpinObservable rel_spin_observable(MeasurementDirection const& d, double beta, Vec3 const& e)
{
    check_closed_beta(beta);
    if (!is_finite(e) || std::abs(norm(e) - 1.0) > 1e-12) {
        throw std::invalid_argument("boost direction must be a unit vector");
    }
    Vec3 const& a = d.vec();
    double const ea = dot(e, a);
    Vec3 const par = ea * e;
    Vec3 const perp = a - par;

    double const denom2 = 1.0 + beta * beta * (ea * ea - 1.0);
    if (!(denom2 > 0.0)) {
        throw std::domain_error("observable undefined: direction perpendicular to the boost at beta = 1");
    }
    Vec3 const w = (std::sqrt(one_minus_beta_sq(beta)) * perp + par) / std::sqrt(denom2);
    return {sigma_dot(w), d, beta, e};
}

double joint_expectation(TwoQubitState const& s, SpinObservable const& A, SpinObservable const& B)
{
    Complex const v = inner(s.amps, tensor(A.m, B.m) * s.amps);
    if (std::abs(v.imag()) > 1e-12) {
        throw std::domain_error("joint expectation has an imaginary part " + std::to_string(v.imag()));
    }
    return v.real();
}

double expectation_case1_closed(MeasurementDirection const& a, MeasurementDirection const& b, double beta,
                                double omega)
{
    check_closed_beta(beta);
    auto const [ax, ay, az] = a.vec();
    auto const [bx, by, bz] = b.vec();
    double const g = one_minus_beta_sq(beta);
    double const num = (ax * bx + g * az * bz) * std::cos(2.0 * omega) - g * ay * by -
                       std::sqrt(g) * (az * bx - bz * ax) * std::sin(2.0 * omega);
    return num / (x_boost_normalizer(ax, beta) * x_boost_normalizer(bx, beta));
}

double expectation_case2_closed(MeasurementDirection const& a, MeasurementDirection const& b, double beta)
{
    check_closed_beta(beta);
    auto const [ax, ay, az] = a.vec();
    auto const [bx, by, bz] = b.vec();
    double const g = one_minus_beta_sq(beta);
    return (ax * bx + g * (ay * by - az * bz)) / (x_boost_normalizer(ax, beta) * x_boost_normalizer(bx, beta));
}

double chsh(TwoQubitState const& s, ChshSettings const& c, double beta, Vec3 const& e)
{
    SpinObservable const A = rel_spin_observable(c.a, beta, e);
    SpinObservable const Ap = rel_spin_observable(c.a_prime, beta, e);
    SpinObservable const B = rel_spin_observable(c.b, beta, e);
    SpinObservable const Bp = rel_spin_observable(c.b_prime, beta, e);
    return joint_expectation(s, A, B) + joint_expectation(s, A, Bp) + joint_expectation(s, Ap, B) -
           joint_expectation(s, Ap, Bp);
}

double chsh_universal(double beta)
{
    check_closed_beta(beta);
    return 2.0 / std::sqrt(2.0 - beta * beta) * (1.0 + std::sqrt(one_minus_beta_sq(beta)));
}

double chsh_case1_closed(double beta, double omega)
{
    check_closed_beta(beta);
    return 2.0 / std::sqrt(2.0 - beta * beta) * (std::sqrt(one_minus_beta_sq(beta)) + std::cos(omega));
}

double chsh_case1_exact(double beta, double omega)
{
    check_closed_beta(beta);
    return 2.0 / std::sqrt(2.0 - beta * beta) * (std::sqrt(one_minus_beta_sq(beta)) + std::cos(2.0 * omega));
}

ChshSettings case1_settings() { return matched_settings({0, 0}); }

ChshSettings case2_settings() { return matched_settings({1, 0}); }

ChshSettings matched_settings(BellIndex idx)
{
    double const r = std::numbers::sqrt2 / 2.0;
    double const tx = idx.j == 0 ? 1.0 : -1.0;
    double const ty = idx.i != idx.j ? 1.0 : -1.0;
    return {MeasurementDirection({tx * r, ty * r, 0.0}), MeasurementDirection({-tx * r, ty * r, 0.0}),
            MeasurementDirection({0.0, 1.0, 0.0}), MeasurementDirection({1.0, 0.0, 0.0})};
}

} // namespace relbell
