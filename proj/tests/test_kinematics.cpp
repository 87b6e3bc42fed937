#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "relbell/kinematics.hpp"

using namespace relbell;

TEST_CASE("gamma and rapidity")
{
    BoostSpec const b = BoostSpec::from_beta({1, 0, 0}, 0.6);
    CHECK(b.gamma() == doctest::Approx(1.25).epsilon(1e-15));
    CHECK(b.gamma() * b.beta() == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(std::abs(b.rapidity() - 0.6931471805599453) < 1e-15);
    CHECK(std::abs(rapidity_from_beta(0.99) - 2.6466524123622462) < 1e-14);
    CHECK(std::abs(BoostSpec::from_beta({0, 0, 1}, 0.99).gamma() - 7.088812050083359) < 1e-13);
    CHECK(rapidity_from_beta(0.0) == 0.0);
}

TEST_CASE("boost spec validation")
{
    CHECK_THROWS_AS(BoostSpec::from_beta({1, 0, 0}, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(BoostSpec::from_beta({1, 0, 0}, -0.1), std::invalid_argument);
    CHECK_THROWS_AS(BoostSpec::from_beta({1, 1, 0}, 0.5), std::invalid_argument);
    CHECK_THROWS(rapidity_from_beta(1.0));
    BoostSpec const b = BoostSpec::from_rapidity({0, 1, 0}, 0.4);
    CHECK(b.inverse().rapidity() == -0.4);
}

TEST_CASE("four-momentum factories")
{
    FourMomentum const p = FourMomentum::from_e_over_m({0, 0, 1}, 1.25, 2.0);
    CHECK(p.energy() == doctest::Approx(2.5));
    CHECK(p.momentum_magnitude() == doctest::Approx(1.5));
    CHECK(p.mass_shell_residual() < 1e-15);
    CHECK(FourMomentum::at_rest().momentum_magnitude() == 0.0);
    CHECK(p.parity().momentum().z == -p.momentum().z);
    CHECK_THROWS_AS(FourMomentum::from_e_over_m({0, 0, 1}, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(FourMomentum::from_components({1, 0, 0}, 3.0, 1.0), std::invalid_argument);
}

TEST_CASE("boost matrix")
{
    BoostSpec const b = BoostSpec::from_beta({1, 0, 0}, 0.6);
    Lorentz4 const l = boost_matrix(b);
    CHECK(l(0, 0) == doctest::Approx(1.25));
    CHECK(l(0, 3) == doctest::Approx(0.75));
    CHECK(l(3, 0) == doctest::Approx(0.75));
    CHECK(l(1, 1) == 1.0);
    CHECK(minkowski_residual(l) < 1e-15);
    CHECK(max_abs_diff(boost_matrix(b) * boost_matrix(b.inverse()), Lorentz4::identity()) < 1e-15);
    CHECK(max_abs_diff(lorentz_inverse(l), boost_matrix(b.inverse())) < 1e-15);
}

TEST_CASE("apply boost to a particle at rest")
{
    FourMomentum const p = apply_boost(boost_matrix(BoostSpec::from_beta({0, 1, 0}, 0.6)), FourMomentum::at_rest());
    CHECK(p.energy() == doctest::Approx(1.25));
    CHECK(p.momentum().y == doctest::Approx(0.75));
}

TEST_CASE("standard boost maps rest momentum to p")
{
    FourMomentum const p = FourMomentum::on_shell({0.3, -0.4, 1.2}, 1.7);
    Lorentz4 const l = standard_boost(p);
    FourMomentum const q = apply_boost(l, FourMomentum::at_rest(1.7));
    CHECK(norm(q.momentum() - p.momentum()) < 1e-14);
    CHECK(std::abs(q.energy() - p.energy()) < 1e-14);
    CHECK(max_abs_diff(standard_boost(FourMomentum::at_rest()), Lorentz4::identity()) == 0.0);
    BoostSpec const s = standard_boost_spec(p);
    CHECK(max_abs_diff(boost_matrix(s), l) < 1e-14);
}
