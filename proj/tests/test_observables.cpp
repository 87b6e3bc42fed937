#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "relbell/kernels.hpp"
#include "relbell/observables.hpp"
#include "relbell/wigner.hpp"

using namespace relbell;

namespace {
Vec3 const ex{1, 0, 0};
double const sqrt2 = std::numbers::sqrt2;
}

TEST_CASE("measurement direction must be a unit vector")
{
    CHECK_THROWS_AS(MeasurementDirection({1, 1, 0}), std::invalid_argument);
    CHECK(MeasurementDirection::along({0, 3, 4}).vec().z == doctest::Approx(0.8));
}

TEST_CASE("relativistic observable")
{
    MeasurementDirection const a = MeasurementDirection::along({1, 2, -0.5});
    for (double beta : {0.0, 0.3, 0.9, 0.999, 1.0 - 1e-12}) {
        SpinObservable const A = rel_spin_observable(a, beta, ex);
        CHECK(approx_equal(A.m * A.m, Mat2::identity(), 1e-12));
        CHECK(approx_equal(adjoint(A.m), A.m, 0.0));
    }
    CHECK(approx_equal(rel_spin_observable(a, 0.0, ex).m, sigma_dot(a.vec()), 1e-15));
    // perpendicular to the boost: unchanged at every beta
    MeasurementDirection const perp({0, 0.6, 0.8});
    CHECK(approx_equal(rel_spin_observable(perp, 0.9, ex).m, sigma_dot(perp.vec()), 1e-15));
    // along the boost: unchanged
    CHECK(approx_equal(rel_spin_observable(MeasurementDirection({1, 0, 0}), 0.9, ex).m, pauli(Axis::x), 1e-15));
    // ultra-relativistic limit collapses onto sign(a.e) sigma.e
    CHECK(approx_equal(rel_spin_observable(MeasurementDirection::along({-1, 1, 0}), 1.0, ex).m, -1.0 * pauli(Axis::x), 1e-15));
    CHECK_THROWS(rel_spin_observable(perp, 1.0, ex));
    CHECK_THROWS(rel_spin_observable(perp, 1.2, ex));
}

TEST_CASE("chsh universal")
{
    CHECK(std::abs(chsh_universal(0.0) - 2.0 * sqrt2) < 1e-15);
    CHECK(chsh_universal(1.0) == 2.0);
    CHECK(std::abs(chsh_universal(0.8) - 2.7439773622801414) < 1e-15);
    CHECK(std::abs(chsh_universal(0.8) - 2.0 / std::sqrt(1.36) * 1.6) < 1e-15);
}

TEST_CASE("case II on the boosted 10 state")
{
    for (double beta : {0.0, 0.3, 0.8, 0.99}) {
        TwoQubitState const s = boosted_bell_state({1, 0}, beta, 10);
        CHECK(std::abs(chsh(s, case2_settings(), beta, ex) - chsh_universal(beta)) < 1e-12);
    }
}

TEST_CASE("case I on the boosted 00 state")
{
    double const om = wigner_angle(0.6, 10);
    TwoQubitState const s = boosted_bell_state({0, 0}, 0.6, 10);
    double const value = chsh(s, case1_settings(), 0.6, ex);
    CHECK(std::abs(value - 1.8567325024534277) < 1e-12);
    CHECK(std::abs(value - chsh_case1_exact(0.6, om)) < 1e-12);
    CHECK(std::abs(chsh_case1_closed(0.6, om) - 2.5508381108472324) < 1e-12);
    CHECK(std::abs(chsh(boosted_bell_state({0, 0}, 0.0, 10), case1_settings(), 0.0, ex) - 2.0 * sqrt2) < 1e-12);
}

TEST_CASE("closed-form expectations match the matrix path")
{
    MeasurementDirection const a = MeasurementDirection::along({0.3, -0.7, 0.4});
    MeasurementDirection const b = MeasurementDirection::along({-0.5, 0.1, 0.9});
    double const beta = 0.85, r = 37.0;
    SpinObservable const A = rel_spin_observable(a, beta, ex), B = rel_spin_observable(b, beta, ex);
    CHECK(std::abs(expectation_case1_closed(a, b, beta, wigner_angle(beta, r)) -
                   joint_expectation(boosted_bell_state({0, 0}, beta, r), A, B)) < 1e-12);
    CHECK(std::abs(expectation_case2_closed(a, b, beta) - joint_expectation(boosted_bell_state({1, 0}, beta, r), A, B)) <
          1e-12);
}

TEST_CASE("non-relativistic correlation tensors")
{
    MeasurementDirection const a = MeasurementDirection::along({0.3, -0.7, 0.4});
    MeasurementDirection const b = MeasurementDirection::along({-0.5, 0.1, 0.9});
    Vec3 const u = a.vec(), v = b.vec();
    CHECK(std::abs(expectation_case1_closed(a, b, 0.0, 0.0) - (u.x * v.x + u.z * v.z - u.y * v.y)) < 1e-15);
    CHECK(std::abs(expectation_case2_closed(a, b, 0.0) - (u.x * v.x + u.y * v.y - u.z * v.z)) < 1e-15);
}

TEST_CASE("matched settings give 2 sqrt2 for every state at rest")
{
    for (int k = 0; k < 4; ++k) {
        BellIndex const idx{k / 2, k % 2};
        CHECK(std::abs(chsh(boosted_bell_state(idx, 0.0, 10), matched_settings(idx), 0.0, ex) - 2.0 * sqrt2) < 1e-12);
    }
}

TEST_CASE("boost-invariant states follow the universal curve")
{
    for (BellIndex idx : {BellIndex{0, 1}, BellIndex{1, 0}})
        for (double beta : {0.2, 0.7, 0.95})
            CHECK(std::abs(chsh(boosted_bell_state(idx, beta, 100), matched_settings(idx), beta, ex) -
                           chsh_universal(beta)) < 1e-12);
}

TEST_CASE("case II with a' = -a is degenerate")
{
    double const h = 1.0 / sqrt2;
    ChshSettings const printed{MeasurementDirection({h, h, 0}), MeasurementDirection({-h, -h, 0}),
                               MeasurementDirection({0, 1, 0}), MeasurementDirection({1, 0, 0})};
    for (double beta : {0.0, 0.5, 0.9}) {
        double const v = chsh(boosted_bell_state({1, 0}, beta, 10), printed, beta, ex);
        CHECK(std::abs(v - 2.0 / std::sqrt(2.0 - beta * beta)) < 1e-12);
    }
}

TEST_CASE("boosted 11 state mixes with 00 and leaves the universal curve")
{
    for (double beta : {0.3, 0.8}) {
        double const om = wigner_angle(beta, 10);
        double const v = chsh(boosted_bell_state({1, 1}, beta, 10), matched_settings({1, 1}), beta, ex);
        CHECK(std::abs(v - chsh_case1_exact(beta, om)) < 1e-12);
        CHECK(v < chsh_universal(beta) - 1e-3);
    }
}
