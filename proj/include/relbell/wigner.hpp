// Spin-1/2 representation of the Wigner little group W(L, p) = L^-1(Lp) L L(p).
#pragma once

#include "relbell/complex_linalg.hpp"
#include "relbell/kinematics.hpp"

namespace relbell {

/// 2x2 spinor representation matrix D^(1/2)(.) of a Lorentz transformation.
using SpinorMatrix = Mat2;

/// Little-group element acting on a spin-1/2 state:
/// su2 = cos(omega/2) I + i sin(omega/2) (sigma . axis).
///
/// omega is always >= 0; orientation lives in `axis`. When the rotation is
/// trivial (boost parallel to p, p at rest, or no boost) omega = 0 and the
/// axis is the sentinel +z.
struct WignerRotation {
    double omega = 0.0;
    Vec3 axis{0.0, 0.0, 1.0};
    SpinorMatrix su2 = Mat2::identity();
};

/// cosh(a/2) I + sinh(a/2) (sigma . e)
SpinorMatrix d_half_pure_boost(BoostSpec const& b);

/// D(L(p)) = sqrt((E+m)/2m) I + sqrt((E-m)/2m) (sigma . p/|p|); identity at rest.
SpinorMatrix d_half_standard(FourMomentum const& p);

/// exp((alpha/2) sigma . e), the generator form of the spinor boost.
SpinorMatrix d_half_exponential(Vec3 const& e, double alpha);

/// Closed-form little-group rotation. The cosine and the (sine x axis) of the
/// half angle are evaluated directly from the boost and particle rapidities:
///
///   cos(omega/2)        = [ch(a/2) ch(d/2) + sh(a/2) sh(d/2) (e.p)] / N
///   sin(omega/2) axis   = sh(a/2) sh(d/2) (e x p) / N
///   N^2 = (1 + ch(a) ch(d) + sh(a) sh(d) (e.p)) / 2
///
/// with p the unit momentum direction and cosh(d) = E/m.
WignerRotation little_group_closed(BoostSpec const& b, FourMomentum const& p);

/// The literal product D(L(Lp))^-1 D(L) D(L(p)). Independent of
/// little_group_closed; used as its oracle.
SpinorMatrix little_group_oracle(BoostSpec const& b, FourMomentum const& p);

/// The 4x4 little-group element L^-1(Lp) L L(p). A pure spatial rotation.
Lorentz4 little_group_lorentz(BoostSpec const& b, FourMomentum const& p);

struct SpatialRotation {
    double angle = 0.0;
    Vec3 axis{0.0, 0.0, 1.0};
};

/// Angle and axis of the spatial 3x3 block of a rotation-valued Lorentz4
/// (trace = 1 + 2 cos angle; antisymmetric part = 2 sin angle [axis]_x).
SpatialRotation extract_rotation(Lorentz4 const& w);

/// Wigner angle for momentum along +z and boost along +x:
/// tan(omega) = sinh(a) sinh(d) / (cosh(a) + cosh(d)).
/// Requires 0 <= beta < 1 and e_over_m >= 1.
double wigner_angle(double beta, double e_over_m);

/// beta -> 1 limit of wigner_angle: atan(sinh d) = atan(sqrt((E/m)^2 - 1)).
double wigner_angle_limit(double e_over_m);

/// The same geometry as wigner_angle, as a real rotation matrix
/// [[cos, -sin], [sin, cos]] of omega/2 with axis -y.
WignerRotation wigner_su2_special(double beta, double e_over_m);

} // namespace relbell
