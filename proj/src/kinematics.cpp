#include "relbell/kinematics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace relbell {

namespace {

constexpr std::array<double, 4> metric{1.0, 1.0, 1.0, -1.0};

void require_unit(Vec3 const& e)
{
    if (!is_finite(e) || std::abs(norm(e) - 1.0) > 1e-12) {
        throw std::invalid_argument("boost direction must be a unit vector");
    }
}

} // namespace

FourMomentum FourMomentum::on_shell(Vec3 const& p, double mass)
{
    if (!(mass > 0.0) || !std::isfinite(mass) || !is_finite(p)) {
        throw std::invalid_argument("four-momentum requires finite p and m > 0");
    }
    return FourMomentum(p, std::hypot(mass, norm(p)), mass);
}

FourMomentum FourMomentum::from_e_over_m(Vec3 const& direction, double e_over_m, double mass)
{
    if (!(e_over_m >= 1.0) || !std::isfinite(e_over_m)) {
        throw std::invalid_argument("E/m must be finite and >= 1, got " + std::to_string(e_over_m));
    }
    if (!(mass > 0.0)) {
        throw std::invalid_argument("mass must be positive");
    }
    // |p| = m sqrt((E/m)^2 - 1), factored to keep precision near E/m = 1
    double const pmag = mass * std::sqrt((e_over_m - 1.0) * (e_over_m + 1.0));
    Vec3 const p = pmag > 0.0 ? normalized(direction) * pmag : Vec3{};
    return FourMomentum(p, e_over_m * mass, mass);
}

FourMomentum FourMomentum::from_components(Vec3 const& p, double energy, double mass)
{
    FourMomentum const out(p, energy, mass);
    if (!(mass > 0.0) || !(energy >= mass * (1.0 - 1e-12)) || !is_finite(p) ||
        std::abs(out.mass_shell_residual()) > 1e-9) {
        throw std::invalid_argument("four-momentum is off the mass shell");
    }
    return out;
}

double FourMomentum::mass_shell_residual() const
{
    double const pm = norm(p_);
    return ((energy_ - pm) * (energy_ + pm) - mass_ * mass_) / (energy_ * energy_);
}

BoostSpec BoostSpec::from_beta(Vec3 const& direction, double beta)
{
    require_unit(direction);
    return BoostSpec(direction, rapidity_from_beta(beta));
}

BoostSpec BoostSpec::from_rapidity(Vec3 const& direction, double rapidity)
{
    require_unit(direction);
    if (!std::isfinite(rapidity)) {
        throw std::invalid_argument("rapidity must be finite");
    }
    return BoostSpec(direction, rapidity);
}

double BoostSpec::beta() const { return std::tanh(std::abs(alpha_)); }
double BoostSpec::gamma() const { return std::cosh(alpha_); }

Lorentz4 Lorentz4::identity()
{
    Lorentz4 m;
    for (std::size_t i = 0; i < 4; ++i) m(i, i) = 1.0;
    return m;
}

Lorentz4 operator*(Lorentz4 const& l, Lorentz4 const& r)
{
    Lorentz4 out;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            double acc = 0.0;
            for (std::size_t k = 0; k < 4; ++k) acc += l(i, k) * r(k, j);
            out(i, j) = acc;
        }
    return out;
}

Lorentz4 transpose(Lorentz4 const& m)
{
    Lorentz4 out;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) out(i, j) = m(j, i);
    return out;
}

Lorentz4 lorentz_inverse(Lorentz4 const& m)
{
    Lorentz4 out;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) out(i, j) = metric[i] * m(j, i) * metric[j];
    return out;
}

double minkowski_residual(Lorentz4 const& m)
{
    double worst = 0.0;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            double acc = 0.0;
            for (std::size_t k = 0; k < 4; ++k) acc += m(k, i) * metric[k] * m(k, j);
            double const target = i == j ? metric[i] : 0.0;
            worst = std::max(worst, std::abs(acc - target));
        }
    return worst;
}

double max_abs_diff(Lorentz4 const& l, Lorentz4 const& r)
{
    double worst = 0.0;
    for (std::size_t i = 0; i < 16; ++i) worst = std::max(worst, std::abs(l.a[i] - r.a[i]));
    return worst;
}

double rapidity_from_beta(double beta)
{
    if (!(beta >= 0.0 && beta < 1.0)) {
        throw std::invalid_argument("beta must lie in [0, 1), got " + std::to_string(beta));
    }
    return std::atanh(beta);
}

Lorentz4 boost_matrix(BoostSpec const& b)
{
    Vec3 const& e = b.direction();
    std::array<double, 3> const ev{e.x, e.y, e.z};
    double const ch = std::cosh(b.rapidity());
    double const sh = std::sinh(b.rapidity());

    Lorentz4 m;
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) m(i, j) = (i == j ? 1.0 : 0.0) + ev[i] * ev[j] * (ch - 1.0);
        m(i, 3) = ev[i] * sh;
        m(3, i) = ev[i] * sh;
    }
    m(3, 3) = ch;
    return m;
}

FourMomentum apply_boost(Lorentz4 const& l, FourMomentum const& p)
{
    std::array<double, 4> const in{p.momentum().x, p.momentum().y, p.momentum().z, p.energy()};
    std::array<double, 4> out{};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t k = 0; k < 4; ++k) out[i] += l(i, k) * in[k];
    return FourMomentum::from_components({out[0], out[1], out[2]}, out[3], p.mass());
}

BoostSpec standard_boost_spec(FourMomentum const& p)
{
    double const pm = p.momentum_magnitude();
    if (pm == 0.0) {
        return BoostSpec::from_rapidity({0.0, 0.0, 1.0}, 0.0);
    }
    // sinh(delta) = |p|/m is better conditioned than arccosh(E/m) near rest
    return BoostSpec::from_rapidity(p.momentum() / pm, std::asinh(pm / p.mass()));
}

Lorentz4 standard_boost(FourMomentum const& p)
{
    double const pm = p.momentum_magnitude();
    if (pm == 0.0) {
        return Lorentz4::identity();
    }
    // Same layout as boost_matrix, with cosh = E/m and sinh = |p|/m taken
    // directly from the momentum.
    Vec3 const e = p.momentum() / pm;
    std::array<double, 3> const ev{e.x, e.y, e.z};
    double const ch = p.energy() / p.mass();
    double const sh = pm / p.mass();
    Lorentz4 m;
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) m(i, j) = (i == j ? 1.0 : 0.0) + ev[i] * ev[j] * (ch - 1.0);
        m(i, 3) = ev[i] * sh;
        m(3, i) = ev[i] * sh;
    }
    m(3, 3) = ch;
    return m;
}

} // namespace relbell
