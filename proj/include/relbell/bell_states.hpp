// Momentum-conserved two-particle Bell states and their Lorentz transformation.
#pragma once

#include <array>
#include <iosfwd>
#include <string_view>

#include "relbell/complex_linalg.hpp"
#include "relbell/kinematics.hpp"

namespace relbell {

/// Bell-state label (i, j):
///   00: (|++> + |-->)/sqrt2     01: (|++> - |-->)/sqrt2
///   10: (|+-> + |-+>)/sqrt2     11: (|+-> - |-+>)/sqrt2
struct BellIndex {
    int i = 0;
    int j = 0;

    friend constexpr bool operator==(BellIndex, BellIndex) = default;
};

/// Parses "00", "01", "10" or "11"; throws std::invalid_argument otherwise.
BellIndex parse_bell_index(std::string_view label);

inline constexpr std::array<std::string_view, 4> basis_labels{"++", "+-", "-+", "--"};

/// Two spin-1/2 particles with momenta p1 and p2. The spin sector `amps` is
/// kept at unit norm; the relativistic normalization factor of the boosted
/// creation operators accumulates in kin_factor instead.
struct TwoQubitState {
    Vec4c amps{};
    double kin_factor = 1.0;
    FourMomentum p1 = FourMomentum::at_rest();
    FourMomentum p2 = FourMomentum::at_rest();

    /// Momentum label of the first particle.
    FourMomentum const& p_label() const { return p1; }
    double norm_squared() const;
};

struct BellCoefficients {
    Complex c00;
    Complex c01;
    Complex c10;
    Complex c11;

    double norm_squared() const;
};

/// Unit-norm amplitudes of the Bell state (i, j).
Vec4c bell_amplitudes(BellIndex idx);

/// Bell state with the first particle at p and the second at (-p, E).
/// Throws std::invalid_argument if p is at rest.
TwoQubitState bell_state(BellIndex idx, FourMomentum const& p);

/// Applies U(L): amps -> (W(L, p1) (x) W(L, p2)) amps, p_k -> L p_k and
/// kin_factor *= sqrt((L p1)^0 / p1^0 * (L p2)^0 / p2^0).
TwoQubitState boost_two_particle(TwoQubitState const& s, BoostSpec const& b);

BellCoefficients bell_decompose(TwoQubitState const& s);
Vec4c bell_reconstruct(BellCoefficients const& c);

/// Writes `label re im` per amplitude followed by `kin_factor value`, 17
/// significant digits, locale independent.
void dump_state(std::ostream& os, TwoQubitState const& s);

} // namespace relbell
