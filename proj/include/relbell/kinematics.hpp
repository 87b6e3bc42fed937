// Four-momenta and Lorentz boosts in natural units (c = 1).
//
// Four-vector components are stored in the order (x, y, z, t), i.e. index
// 0..2 spatial and index 3 the time component. The metric is
// eta = diag(+1, +1, +1, -1).
#pragma once

#include <array>

#include "relbell/complex_linalg.hpp"

namespace relbell {

/// On-shell four-momentum of a massive particle.
class FourMomentum {
public:
    /// Energy is derived from the mass shell, E = sqrt(m^2 + |p|^2).
    static FourMomentum on_shell(Vec3 const& p, double mass = 1.0);
    /// |p| chosen so that E/m = e_over_m, pointing along `direction`.
    static FourMomentum from_e_over_m(Vec3 const& direction, double e_over_m, double mass = 1.0);
    /// Validates E^2 - |p|^2 = m^2 to relative 1e-9.
    static FourMomentum from_components(Vec3 const& p, double energy, double mass);
    static FourMomentum at_rest(double mass = 1.0) { return on_shell({}, mass); }

    Vec3 const& momentum() const { return p_; }
    double energy() const { return energy_; }
    double mass() const { return mass_; }
    double momentum_magnitude() const { return norm(p_); }
    /// Parity image (-p, E).
    FourMomentum parity() const { return FourMomentum(-p_, energy_, mass_); }
    /// (E^2 - |p|^2 - m^2) / E^2
    double mass_shell_residual() const;

private:
    FourMomentum(Vec3 p, double e, double m) : p_(p), energy_(e), mass_(m) {}

    Vec3 p_;
    double energy_ = 1.0;
    double mass_ = 1.0;
};

/// A pure boost: unit direction and signed rapidity. Negative rapidity is the
/// inverse boost along the same direction.
class BoostSpec {
public:
    /// Throws std::invalid_argument unless 0 <= beta < 1.
    static BoostSpec from_beta(Vec3 const& direction, double beta);
    static BoostSpec from_rapidity(Vec3 const& direction, double rapidity);

    Vec3 const& direction() const { return e_; }
    double rapidity() const { return alpha_; }
    double beta() const;
    double gamma() const;
    BoostSpec inverse() const { return BoostSpec(e_, -alpha_); }

private:
    BoostSpec(Vec3 e, double alpha) : e_(e), alpha_(alpha) {}

    Vec3 e_{0.0, 0.0, 1.0};
    double alpha_ = 0.0;
};

/// Real 4x4 matrix Lambda^mu_nu, row-major, index order (x, y, z, t).
struct Lorentz4 {
    std::array<double, 16> a{};

    double& operator()(std::size_t r, std::size_t c) { return a[4 * r + c]; }
    double operator()(std::size_t r, std::size_t c) const { return a[4 * r + c]; }

    static Lorentz4 identity();
};

Lorentz4 operator*(Lorentz4 const& l, Lorentz4 const& r);
Lorentz4 transpose(Lorentz4 const& m);
/// eta L^T eta
Lorentz4 lorentz_inverse(Lorentz4 const& m);
/// max |L^T eta L - eta|
double minkowski_residual(Lorentz4 const& m);
double max_abs_diff(Lorentz4 const& l, Lorentz4 const& r);

double rapidity_from_beta(double beta);

Lorentz4 boost_matrix(BoostSpec const& b);
FourMomentum apply_boost(Lorentz4 const& l, FourMomentum const& p);
/// Pure boost along p/|p| taking (0, 0, 0, m) to p; identity at rest.
Lorentz4 standard_boost(FourMomentum const& p);
BoostSpec standard_boost_spec(FourMomentum const& p);

} // namespace relbell
