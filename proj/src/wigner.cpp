#include "relbell/wigner.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace relbell {

namespace {

/// cosh(d/2) and sinh(d/2) of a particle's own rapidity, from E and |p|.
struct HalfRapidity {
    double ch = 1.0;
    double sh = 0.0;
};

using LD4 = std::array<long double, 16>;

LD4 boost_ld(std::array<long double, 3> const& e, long double ch, long double sh)
{
    LD4 m{};
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) m[4 * i + j] = (i == j ? 1.0L : 0.0L) + e[i] * e[j] * (ch - 1.0L);
        m[4 * i + 3] = e[i] * sh;
        m[12 + i] = e[i] * sh;
    }
    m[15] = ch;
    return m;
}

/// Standard boost for spatial momentum k (units of m); sign -1 gives its inverse.
LD4 standard_boost_ld(std::array<long double, 4> const& k, long double sign)
{
    long double const sh = std::sqrt(k[0] * k[0] + k[1] * k[1] + k[2] * k[2]);
    if (sh == 0.0L) return boost_ld({0.0L, 0.0L, 1.0L}, 1.0L, 0.0L);
    return boost_ld({k[0] / sh, k[1] / sh, k[2] / sh}, std::sqrt(1.0L + sh * sh), sign * sh);
}

LD4 mul_ld(LD4 const& l, LD4 const& r)
{
    LD4 out{};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t k = 0; k < 4; ++k)
            for (std::size_t j = 0; j < 4; ++j) out[4 * i + j] += l[4 * i + k] * r[4 * k + j];
    return out;
}

HalfRapidity half_rapidity(FourMomentum const& p)
{
    double const m = p.mass();
    double const pm = p.momentum_magnitude();
    // (E - m) = |p|^2 / (E + m) avoids cancellation near rest
    double const e_minus_m = pm * pm / (p.energy() + m);
    return {std::sqrt((p.energy() + m) / (2.0 * m)), std::sqrt(e_minus_m / (2.0 * m))};
}

void check_special_inputs(double beta, double e_over_m)
{
    if (!(beta >= 0.0 && beta < 1.0)) {
        throw std::invalid_argument("beta must lie in [0, 1), got " + std::to_string(beta));
    }
    if (!(e_over_m >= 1.0) || !std::isfinite(e_over_m)) {
        throw std::invalid_argument("E/m must be finite and >= 1, got " + std::to_string(e_over_m));
    }
}

} // namespace

SpinorMatrix d_half_pure_boost(BoostSpec const& b)
{
    double const half = 0.5 * b.rapidity();
    return std::cosh(half) * Mat2::identity() + std::sinh(half) * sigma_dot(b.direction());
}

SpinorMatrix d_half_standard(FourMomentum const& p)
{
    double const pm = p.momentum_magnitude();
    if (pm == 0.0) {
        return Mat2::identity();
    }
    auto const [ch, sh] = half_rapidity(p);
    return ch * Mat2::identity() + sh * sigma_dot(p.momentum() / pm);
}

SpinorMatrix d_half_exponential(Vec3 const& e, double alpha)
{
    return exp2(Complex(0.5 * alpha) * sigma_dot(e));
}

WignerRotation little_group_closed(BoostSpec const& b, FourMomentum const& p)
{
    double const pm = p.momentum_magnitude();
    if (b.rapidity() == 0.0 || pm == 0.0) {
        return {};
    }
    Vec3 const& e = b.direction();
    Vec3 const phat = p.momentum() / pm;
    double const ep = dot(e, phat);

    double const a2 = 0.5 * b.rapidity();
    double const cha = std::cosh(a2);
    double const sha = std::sinh(a2);
    auto const [chd, shd] = half_rapidity(p);

    // ch(a) ch(d) + sh(a) sh(d) e.p >= cosh(a - d) >= 1, so N^2 has no cancellation.
    double const cosh_d = p.energy() / p.mass();
    double const sinh_d = pm / p.mass();
    double const denom =
        std::sqrt(0.5 + 0.5 * std::cosh(b.rapidity()) * cosh_d + 0.5 * std::sinh(b.rapidity()) * sinh_d * ep);

    double const c = (cha * chd + sha * shd * ep) / denom;
    Vec3 const s_axis = ((sha * shd) / denom) * cross(e, phat);
    double const s = norm(s_axis);

    WignerRotation out;
    out.omega = 2.0 * std::atan2(s, c);
    if (s > 0.0) {
        out.axis = s_axis / s;
    }
    out.su2 = c * Mat2::identity() + Complex(0.0, 1.0) * sigma_dot(s_axis);
    return out;
}

SpinorMatrix little_group_oracle(BoostSpec const& b, FourMomentum const& p)
{
    FourMomentum const boosted = apply_boost(boost_matrix(b), p);
    return inverse(d_half_standard(boosted)) * d_half_pure_boost(b) * d_half_standard(p);
}

Lorentz4 little_group_lorentz(BoostSpec const& b, FourMomentum const& p)
{
    // Entries of the three factors reach (E/m)^2 gamma while W^t_t is exactly 1,
    // so the composition is carried out in extended precision.
    using LD = long double;
    Vec3 const& e = b.direction();
    LD const a = b.rapidity();
    LD const en = std::sqrt(LD(e.x) * e.x + LD(e.y) * e.y + LD(e.z) * e.z);
    LD4 const lambda = boost_ld({e.x / en, e.y / en, e.z / en}, std::cosh(a), std::sinh(a));

    LD const m = p.mass();
    std::array<LD, 4> const k{p.momentum().x / m, p.momentum().y / m, p.momentum().z / m, 0.0L};
    std::array<LD, 4> k2{};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) k2[i] += lambda[4 * i + j] * k[j];
    LD const k_t = std::sqrt(1.0L + k[0] * k[0] + k[1] * k[1] + k[2] * k[2]);
    for (std::size_t i = 0; i < 3; ++i) k2[i] += lambda[4 * i + 3] * k_t;

    LD4 const w = mul_ld(mul_ld(standard_boost_ld(k2, -1.0L), lambda), standard_boost_ld(k, 1.0L));
    Lorentz4 out;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) out(i, j) = static_cast<double>(w[4 * i + j]);
    return out;
}

SpatialRotation extract_rotation(Lorentz4 const& w)
{
    double const tr = w(0, 0) + w(1, 1) + w(2, 2);
    // R - R^T = 2 sin(angle) [n]_x
    Vec3 const anti{w(2, 1) - w(1, 2), w(0, 2) - w(2, 0), w(1, 0) - w(0, 1)};
    double const two_sin = norm(anti);
    SpatialRotation out;
    out.angle = std::atan2(0.5 * two_sin, 0.5 * (tr - 1.0));
    if (two_sin > 0.0) {
        out.axis = anti / two_sin;
    }
    return out;
}

double wigner_angle(double beta, double e_over_m)
{
    check_special_inputs(beta, e_over_m);
    double const gamma = 1.0 / std::sqrt((1.0 - beta) * (1.0 + beta));
    double const sinh_a = gamma * beta;
    double const sinh_d = std::sqrt((e_over_m - 1.0) * (e_over_m + 1.0));
    return std::atan2(sinh_a * sinh_d, gamma + e_over_m);
}

double wigner_angle_limit(double e_over_m)
{
    check_special_inputs(0.0, e_over_m);
    return std::atan(std::sqrt((e_over_m - 1.0) * (e_over_m + 1.0)));
}

WignerRotation wigner_su2_special(double beta, double e_over_m)
{
    double const omega = wigner_angle(beta, e_over_m);
    WignerRotation out;
    out.omega = omega;
    if (omega > 0.0) {
        out.axis = {0.0, -1.0, 0.0};
    }
    double const c = std::cos(0.5 * omega);
    double const s = std::sin(0.5 * omega);
    out.su2(0, 0) = c;
    out.su2(0, 1) = -s;
    out.su2(1, 0) = s;
    out.su2(1, 1) = c;
    return out;
}

} // namespace relbell
