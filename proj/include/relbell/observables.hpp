// Relativistic spin observables and CHSH combinations.
//
// A measurement direction a seen from a frame boosted with speed beta along e
// is measured through
//
//   A = (sqrt(1 - beta^2) a_perp + a_par) . sigma / sqrt(1 + beta^2 ((e.a)^2 - 1))
//
// where a_par = (e.a) e. For unit a the denominator is exactly the norm of the
// numerator vector, so A has eigenvalues +-1.
#pragma once

#include "relbell/bell_states.hpp"
#include "relbell/complex_linalg.hpp"

namespace relbell {

class MeasurementDirection {
public:
    /// Throws std::invalid_argument unless |a| = 1 to 1e-12.
    explicit MeasurementDirection(Vec3 const& a);
    /// Normalizes a non-zero vector.
    static MeasurementDirection along(Vec3 const& v);

    Vec3 const& vec() const { return a_; }

private:
    Vec3 a_;
};

struct SpinObservable {
    Mat2 m;
    MeasurementDirection direction;
    double beta = 0.0;
    Vec3 e{1.0, 0.0, 0.0};
};

struct ChshSettings {
    MeasurementDirection a;
    MeasurementDirection a_prime;
    MeasurementDirection b;
    MeasurementDirection b_prime;
};

/// Requires 0 <= beta <= 1 and unit e; at beta = 1 the direction must not be
/// perpendicular to e.
SpinObservable rel_spin_observable(MeasurementDirection const& d, double beta, Vec3 const& e);

/// <s| A (x) B |s> on the spin sector. Throws std::domain_error if the
/// imaginary part exceeds 1e-12.
double joint_expectation(TwoQubitState const& s, SpinObservable const& A, SpinObservable const& B);

/// <A (x) B> on the boosted 00 state, momentum along z and boost along x,
/// as a function of beta and the Wigner angle omega:
/// {[ax bx + g az bz] cos 2w - g ay by - sqrt(g) (az bx - bz ax) sin 2w} / n(a) n(b)
/// with g = 1 - beta^2 and n(a) = sqrt(1 + beta^2 (ax^2 - 1)).
/// Accepts beta = 1 when ax and bx are non-zero.
double expectation_case1_closed(MeasurementDirection const& a, MeasurementDirection const& b, double beta,
                                double omega);

/// <A (x) B> on the boosted 10 state: {ax bx + g (ay by - az bz)} / n(a) n(b).
double expectation_case2_closed(MeasurementDirection const& a, MeasurementDirection const& b, double beta);

/// <a b> + <a b'> + <a' b> - <a' b'> with relativistic observables.
double chsh(TwoQubitState const& s, ChshSettings const& c, double beta, Vec3 const& e);

/// (2 / sqrt(2 - beta^2)) (1 + sqrt(1 - beta^2)); defined on [0, 1].
double chsh_universal(double beta);

/// (2 / sqrt(2 - beta^2)) (sqrt(1 - beta^2) + cos omega), the closed form
/// commonly quoted for the 00 state with case-1 vectors. It does not match the
/// matrix element for omega > 0; see chsh_case1_exact.
double chsh_case1_closed(double beta, double omega);

/// (2 / sqrt(2 - beta^2)) (sqrt(1 - beta^2) + cos 2 omega): the 00 state with
/// case-1 vectors, obtained by summing expectation_case1_closed.
double chsh_case1_exact(double beta, double omega);

/// a = (1, -1, 0)/sqrt2, a' = (-1, -1, 0)/sqrt2, b = y, b' = x.
ChshSettings case1_settings();

/// a = (1, 1, 0)/sqrt2, a' = (-1, 1, 0)/sqrt2, b = y, b' = x.
/// (With a' = -a the combination degenerates to 2 <a b'>.)
ChshSettings case2_settings();

/// beta = 0 optimal x-y plane settings for Bell state idx:
/// a = (tx, ty, 0)/sqrt2, a' = (-tx, ty, 0)/sqrt2, b = y, b' = x, with
/// (tx, ty) the x and y diagonal of the state's correlation tensor.
/// Gives case1_settings() for 00 and case2_settings() for 10.
ChshSettings matched_settings(BellIndex idx);

} // namespace relbell
