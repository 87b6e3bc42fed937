#include <doctest.h>

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "relbell/bell_states.hpp"
#include "relbell/kernels.hpp"
#include "relbell/wigner.hpp"

using namespace relbell;

TEST_CASE("parse bell index")
{
    CHECK(parse_bell_index("10") == BellIndex{1, 0});
    CHECK(parse_bell_index("00") == BellIndex{0, 0});
    CHECK_THROWS_AS(parse_bell_index("2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_bell_index("12"), std::invalid_argument);
}

TEST_CASE("bell amplitudes are orthonormal")
{
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            Complex const ip = inner(bell_amplitudes({a / 2, a % 2}), bell_amplitudes({b / 2, b % 2}));
            CHECK(std::abs(ip - Complex(a == b ? 1.0 : 0.0)) < 1e-15);
        }
}

TEST_CASE("bell state construction")
{
    FourMomentum const p = FourMomentum::from_e_over_m({0, 0, 1}, 10);
    TwoQubitState const s = bell_state({0, 1}, p);
    CHECK(s.norm_squared() == doctest::Approx(1.0));
    CHECK(s.p2.momentum().z == -s.p1.momentum().z);
    CHECK(s.kin_factor == 1.0);
    CHECK_THROWS(bell_state({0, 0}, FourMomentum::at_rest()));
}

TEST_CASE("sector rotation at beta 0.6, E/m 10")
{
    double const om = 0.58568554345715096;
    BellCoefficients const c00 = bell_decompose(boosted_bell_state({0, 0}, 0.6, 10));
    CHECK(std::abs(c00.c00 - std::cos(om)) < 1e-12);
    CHECK(std::abs(c00.c11 + std::sin(om)) < 1e-12);
    CHECK(std::abs(c00.c01) < 1e-12);
    BellCoefficients const c11 = bell_decompose(boosted_bell_state({1, 1}, 0.6, 10));
    CHECK(std::abs(c11.c00 - std::sin(om)) < 1e-12);
    CHECK(std::abs(c11.c11 - std::cos(om)) < 1e-12);
    CHECK(std::abs(bell_decompose(boosted_bell_state({0, 1}, 0.6, 10)).c01 - 1.0) < 1e-12);
    CHECK(std::abs(bell_decompose(boosted_bell_state({1, 0}, 0.6, 10)).c10 - 1.0) < 1e-12);
}

TEST_CASE("kinematic prefactor")
{
    TwoQubitState const s = boosted_bell_state({1, 0}, 0.6, 10);
    // E' = gamma E for both particles when p is perpendicular to the boost
    CHECK(s.kin_factor == doctest::Approx(1.25).epsilon(1e-14));
    CHECK(s.norm_squared() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("inverse boost restores the state")
{
    TwoQubitState const s = bell_state({1, 1}, FourMomentum::from_e_over_m(normalized(Vec3{1, 2, 3}), 4.0));
    BoostSpec const b = BoostSpec::from_beta(normalized(Vec3{-1, 0.5, 2}), 0.8);
    TwoQubitState const back = boost_two_particle(boost_two_particle(s, b), b.inverse());
    CHECK(max_abs_diff(back.amps, s.amps) < 1e-12);
    CHECK(back.kin_factor == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("decompose and reconstruct round trip")
{
    Vec4c const v{Complex(0.5, 0.1), Complex(-0.2), Complex(0, 0.3), Complex(0.4, -0.4)};
    CHECK(max_abs_diff(bell_reconstruct(bell_decompose(TwoQubitState{v})), v) < 1e-15);
}

TEST_CASE("dump format")
{
    std::ostringstream os;
    dump_state(os, bell_state({0, 0}, FourMomentum::from_e_over_m({0, 0, 1}, 2.0)));
    std::string const text = os.str();
    CHECK(text.find("++ ") == 0);
    CHECK(text.find("kin_factor 1\n") != std::string::npos);
}
