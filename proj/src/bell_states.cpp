#include "relbell/bell_states.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>

#include "relbell/format.hpp"
#include "relbell/wigner.hpp"

namespace relbell {

BellIndex parse_bell_index(std::string_view label)
{
    if (label.size() == 2 && (label[0] == '0' || label[0] == '1') && (label[1] == '0' || label[1] == '1')) {
        return {label[0] - '0', label[1] - '0'};
    }
    throw std::invalid_argument("Bell state label must be one of 00, 01, 10, 11, got '" + std::string(label) +
                                "'");
}

double TwoQubitState::norm_squared() const
{
    double acc = 0.0;
    for (Complex const& c : amps) acc += std::norm(c);
    return acc;
}

double BellCoefficients::norm_squared() const
{
    return std::norm(c00) + std::norm(c01) + std::norm(c10) + std::norm(c11);
}

Vec4c bell_amplitudes(BellIndex idx)
{
    double const r = std::numbers::sqrt2 / 2.0;
    double const sign = idx.j == 0 ? 1.0 : -1.0;
    if (idx.i == 0) {
        return {r, 0.0, 0.0, sign * r};
    }
    return {0.0, r, sign * r, 0.0};
}

TwoQubitState bell_state(BellIndex idx, FourMomentum const& p)
{
    if (p.momentum_magnitude() == 0.0) {
        throw std::invalid_argument("a momentum-conserved Bell pair needs |p| > 0");
    }
    TwoQubitState s;
    s.amps = bell_amplitudes(idx);
    s.kin_factor = 1.0;
    s.p1 = p;
    s.p2 = p.parity();
    return s;
}

TwoQubitState boost_two_particle(TwoQubitState const& s, BoostSpec const& b)
{
    Mat2 const w1 = little_group_closed(b, s.p1).su2;
    Mat2 const w2 = little_group_closed(b, s.p2).su2;
    Lorentz4 const lambda = boost_matrix(b);

    TwoQubitState out;
    out.amps = tensor(w1, w2) * s.amps;
    out.p1 = apply_boost(lambda, s.p1);
    out.p2 = apply_boost(lambda, s.p2);

    double const norm = std::sqrt(out.norm_squared());
    for (Complex& c : out.amps) c /= norm;
    out.kin_factor = s.kin_factor * norm *
                     std::sqrt(out.p1.energy() / s.p1.energy() * (out.p2.energy() / s.p2.energy()));
    return out;
}

BellCoefficients bell_decompose(TwoQubitState const& s)
{
    return {inner(bell_amplitudes({0, 0}), s.amps), inner(bell_amplitudes({0, 1}), s.amps),
            inner(bell_amplitudes({1, 0}), s.amps), inner(bell_amplitudes({1, 1}), s.amps)};
}

Vec4c bell_reconstruct(BellCoefficients const& c)
{
    std::array<Complex, 4> const coeff{c.c00, c.c01, c.c10, c.c11};
    std::array<BellIndex, 4> const idx{BellIndex{0, 0}, BellIndex{0, 1}, BellIndex{1, 0}, BellIndex{1, 1}};
    Vec4c out{};
    for (std::size_t k = 0; k < 4; ++k) {
        Vec4c const basis = bell_amplitudes(idx[k]);
        for (std::size_t n = 0; n < 4; ++n) out[n] += coeff[k] * basis[n];
    }
    return out;
}

void dump_state(std::ostream& os, TwoQubitState const& s)
{
    for (std::size_t k = 0; k < 4; ++k) {
        os << basis_labels[k] << ' ' << format_double(s.amps[k].real()) << ' ' << format_double(s.amps[k].imag())
           << '\n';
    }
    os << "kin_factor " << format_double(s.kin_factor) << '\n';
}

} // namespace relbell
