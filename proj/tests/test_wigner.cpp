#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "relbell/wigner.hpp"

using namespace relbell;

TEST_CASE("wigner angle frozen values")
{
    CHECK(std::abs(wigner_angle(0.6, 10) - 0.58568554345715096) < 1e-14);
    CHECK(std::abs(wigner_angle(0.1, 10) - 0.090618612381300164) < 1e-14);
    CHECK(std::abs(wigner_angle(0.1, 100) - 0.099172346799041660) < 1e-14);
    CHECK(std::abs(wigner_angle(0.1, 1000) - 0.10006747086130201) < 1e-14);
    CHECK(std::abs(wigner_angle(0.5, 10) - 0.47556781101712092) < 1e-14);
    CHECK(std::abs(wigner_angle(0.5, 1000) - 0.52309899189645167) < 1e-14);
    CHECK(std::abs(wigner_angle(0.999999, 10) - 1.4692218802774932) < 1e-12);
    CHECK(std::abs(wigner_angle(0.999999, 1000) - 1.5683821146551112) < 1e-12);
    CHECK(wigner_angle(0.0, 10) == 0.0);
    CHECK(wigner_angle(0.5, 1.0) == 0.0);
    CHECK(std::abs(wigner_angle_limit(10) - std::atan(std::sqrt(99.0))) < 1e-15);
    CHECK_THROWS(wigner_angle(1.0, 10));
    CHECK_THROWS(wigner_angle(0.5, 0.9));
}

TEST_CASE("half-angle values at beta 0.6, E/m 10")
{
    WignerRotation const w = little_group_closed(BoostSpec::from_beta({1, 0, 0}, 0.6),
                                                 FourMomentum::from_e_over_m({0, 0, 1}, 10));
    CHECK(std::abs(std::cos(w.omega / 2) - 0.95742710775633811) < 1e-14);
    CHECK(std::abs(std::sin(w.omega / 2) - 1.0 / std::sqrt(12.0)) < 1e-14);
    CHECK(norm(w.axis - Vec3{0, -1, 0}) < 1e-14);
    CHECK(max_abs_diff(w.su2, wigner_su2_special(0.6, 10).su2) < 1e-14);
}

TEST_CASE("d_half forms")
{
    Mat2 const d = d_half_pure_boost(BoostSpec::from_rapidity({1, 0, 0}, 1.0));
    CHECK(std::abs(d(0, 0) - 1.1276259652063807) < 1e-15);
    CHECK(std::abs(d(0, 1) - 0.52109530549374736) < 1e-15);
    Mat2 const s = d_half_standard(FourMomentum::from_e_over_m({0, 0, 1}, 1.25));
    CHECK(std::abs(s(0, 0) - (1.0606601717798213 + 0.35355339059327376)) < 1e-15);
    CHECK(std::abs(s(1, 1) - (1.0606601717798213 - 0.35355339059327376)) < 1e-15);
    CHECK(std::abs(s(0, 1)) == 0.0);
    CHECK(max_abs_diff(d_half_exponential({0.6, 0, 0.8}, 0.9), d_half_pure_boost(BoostSpec::from_rapidity({0.6, 0, 0.8}, 0.9))) < 1e-15);
    CHECK(max_abs_diff(d_half_standard(FourMomentum::at_rest()), Mat2::identity()) == 0.0);
}

TEST_CASE("trivial little group elements")
{
    FourMomentum const p = FourMomentum::from_e_over_m({0.6, 0.8, 0}, 3.0);
    WignerRotation const zero = little_group_closed(BoostSpec::from_beta({1, 0, 0}, 0.0), p);
    CHECK(zero.omega == 0.0);
    CHECK(max_abs_diff(zero.su2, Mat2::identity()) == 0.0);
    WignerRotation const rest = little_group_closed(BoostSpec::from_beta({1, 0, 0}, 0.7), FourMomentum::at_rest());
    CHECK(rest.omega == 0.0);
    WignerRotation const par = little_group_closed(BoostSpec::from_beta({0.6, 0.8, 0}, 0.7), p);
    CHECK(std::abs(par.omega) < 1e-15);
}

TEST_CASE("closed form agrees with the three-factor product")
{
    BoostSpec const b = BoostSpec::from_beta(normalized(Vec3{0.3, -0.5, 0.8}), 0.93);
    FourMomentum const p = FourMomentum::from_e_over_m(normalized(Vec3{-0.2, 0.9, 0.1}), 47.0);
    CHECK(max_abs_diff(little_group_closed(b, p).su2, little_group_oracle(b, p)) < 1e-12);
}

TEST_CASE("4x4 composition is a rotation by the wigner angle")
{
    Lorentz4 const w = little_group_lorentz(BoostSpec::from_beta({1, 0, 0}, 0.6), FourMomentum::from_e_over_m({0, 0, 1}, 10));
    CHECK(std::abs(w(3, 3) - 1.0) < 1e-12);
    CHECK(std::abs(w(0, 3)) < 1e-12);
    SpatialRotation const r = extract_rotation(w);
    CHECK(std::abs(r.angle - 0.58568554345715096) < 1e-12);
    CHECK(std::abs(std::abs(r.axis.y) - 1.0) < 1e-12);
}
