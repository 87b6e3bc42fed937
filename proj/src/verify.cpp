#include "relbell/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>

#include "relbell/bell_states.hpp"
#include "relbell/format.hpp"
#include "relbell/kernels.hpp"
#include "relbell/observables.hpp"

namespace relbell {

namespace {

/// A check draws its inputs from rng, optionally logs them, and returns a
/// residual compared against the tolerance.
using CheckFn = std::function<double(SampleRng&, std::ostream*)>;

struct Check {
    std::string name;
    double tolerance;
    CheckFn fn;
};

std::string fmt(double v) { return format_double(v); }
std::string fmt(Vec3 const& v) { return "(" + fmt(v.x) + ", " + fmt(v.y) + ", " + fmt(v.z) + ")"; }

void log_line(std::ostream* log, std::string const& text)
{
    if (log) *log << text << '\n';
}

double log_uniform(SampleRng& rng, double lo, double hi)
{
    return std::exp(random_uniform(rng, std::log(lo), std::log(hi)));
}

Mat2 random_mat2(SampleRng& rng, double lo, double hi, bool complex_entries)
{
    Mat2 m;
    for (Complex& c : m.a) {
        double const re = random_uniform(rng, lo, hi);
        double const im = complex_entries ? random_uniform(rng, lo, hi) : 0.0;
        c = Complex(re, im);
    }
    return m;
}

/// Haar-ish random SU(2) element from a random axis and angle.
Mat2 random_su2(SampleRng& rng)
{
    Vec3 const n = random_unit(rng);
    double const t = random_uniform(rng, 0.0, 2.0 * std::numbers::pi);
    return std::cos(0.5 * t) * Mat2::identity() + Complex(0.0, std::sin(0.5 * t)) * sigma_dot(n);
}

double unitarity_residual(Mat2 const& u)
{
    return std::max(max_abs_diff(adjoint(u) * u, Mat2::identity()), std::abs(det(u) - 1.0));
}

std::vector<Check> build_checks(VerifyHooks const& hooks)
{
    auto const little_group = hooks.little_group;
    Vec3 const x_hat{1.0, 0.0, 0.0};
    Vec3 const z_hat{0.0, 0.0, 1.0};
    std::vector<Check> checks;

    checks.push_back({"sigma_dot: (s.v)^2 = I, Hermitian, traceless", 1e-14, [](SampleRng& rng, std::ostream* log) {
                          Vec3 const v = random_unit(rng);
                          log_line(log, "v = " + fmt(v));
                          Mat2 const s = sigma_dot(v);
                          return std::max({max_abs_diff(s * s, Mat2::identity()), max_abs_diff(s, adjoint(s)),
                                           std::abs(trace(s))});
                      }});

    checks.push_back({"tensor: (a x b)(c x d) = (ac) x (bd)", 1e-13, [](SampleRng& rng, std::ostream* log) {
                          Mat2 const a = random_mat2(rng, -1.0, 1.0, true);
                          Mat2 const b = random_mat2(rng, -1.0, 1.0, true);
                          Mat2 const c = random_mat2(rng, -1.0, 1.0, true);
                          Mat2 const d = random_mat2(rng, -1.0, 1.0, true);
                          log_line(log, "random complex 2x2 factors with entries in [-1, 1]");
                          return max_abs_diff(tensor(a, b) * tensor(c, d), tensor(a * c, b * d));
                      }});

    checks.push_back({"exp2: exp(m) exp(-m) = I", 1e-12, [](SampleRng& rng, std::ostream* log) {
                          Mat2 const m = random_mat2(rng, -2.0, 2.0, false);
                          log_line(log, "m = [[" + fmt(m(0, 0).real()) + ", " + fmt(m(0, 1).real()) + "], [" +
                                            fmt(m(1, 0).real()) + ", " + fmt(m(1, 1).real()) + "]]");
                          return max_abs_diff(exp2(m) * exp2(Complex(-1.0) * m), Mat2::identity());
                      }});

    checks.push_back({"exp2: closed form = scaling and squaring", 1e-12, [](SampleRng& rng, std::ostream* log) {
                          Mat2 const m = random_mat2(rng, -1.0, 1.0, true);
                          log_line(log, "random complex m with entries in [-1, 1]");
                          return max_abs_diff(exp2(m), exp2_scaling_squaring(m));
                      }});

    checks.push_back({"boost_matrix: L^T eta L = eta", 1e-10, [](SampleRng& rng, std::ostream* log) {
                          Vec3 const e = random_unit(rng);
                          double const beta = random_uniform(rng, 0.0, 0.999);
                          log_line(log, "e = " + fmt(e) + ", beta = " + fmt(beta));
                          return minkowski_residual(boost_matrix(BoostSpec::from_beta(e, beta)));
                      }});

    checks.push_back({"boost_matrix: L(a) L(-a) = I", 1e-10, [](SampleRng& rng, std::ostream* log) {
                          Vec3 const e = random_unit(rng);
                          double const beta = random_uniform(rng, 0.0, 0.999);
                          log_line(log, "e = " + fmt(e) + ", beta = " + fmt(beta));
                          BoostSpec const b = BoostSpec::from_beta(e, beta);
                          return max_abs_diff(boost_matrix(b) * boost_matrix(b.inverse()), Lorentz4::identity());
                      }});

    checks.push_back({"apply_boost: mass shell preserved (relative)", 1e-9, [](SampleRng& rng, std::ostream* log) {
                          Vec3 const e = random_unit(rng);
                          double const beta = random_uniform(rng, 0.0, 0.999);
                          Vec3 const dir = random_unit(rng);
                          double const r = log_uniform(rng, 1.0, 1e4);
                          log_line(log, "e = " + fmt(e) + ", beta = " + fmt(beta) + ", p_hat = " + fmt(dir) +
                                            ", E/m = " + fmt(r));
                          FourMomentum const p = FourMomentum::from_e_over_m(dir, r);
                          return std::abs(
                              apply_boost(boost_matrix(BoostSpec::from_beta(e, beta)), p).mass_shell_residual());
                      }});

    checks.push_back({"standard_boost: L(p) k = p (relative to E)", 1e-10, [](SampleRng& rng, std::ostream* log) {
                          Vec3 const dir = random_unit(rng);
                          double const r = log_uniform(rng, 1.0, 1e4);
                          log_line(log, "p_hat = " + fmt(dir) + ", E/m = " + fmt(r));
                          FourMomentum const p = FourMomentum::from_e_over_m(dir, r);
                          FourMomentum const q = apply_boost(standard_boost(p), FourMomentum::at_rest());
                          double const d = std::max({norm(q.momentum() - p.momentum()),
                                                     std::abs(q.energy() - p.energy())});
                          return d / p.energy();
                      }});

    checks.push_back({"little group (4x4): W^t_t = 1", 1e-9, [](SampleRng& rng, std::ostream* log) {
                          Vec3 const e = random_unit(rng);
                          double const beta = random_uniform(rng, 0.0, 0.99);
                          Vec3 const dir = random_unit(rng);
                          double const r = random_uniform(rng, 1.0, 1e3);
                          log_line(log, "e = " + fmt(e) + ", beta = " + fmt(beta) + ", p_hat = " + fmt(dir) +
                                            ", E/m = " + fmt(r));
                          Lorentz4 const w = little_group_lorentz(BoostSpec::from_beta(e, beta),
                                                                  FourMomentum::from_e_over_m(dir, r));
                          return std::abs(w(3, 3) - 1.0);
                      }});

    auto random_kinematics = [](SampleRng& rng, std::ostream* log) {
        Vec3 const e = random_unit(rng);
        double const beta = random_uniform(rng, 0.0, 0.99);
        Vec3 const dir = random_unit(rng);
        double const r = random_uniform(rng, 1.0, 1e3);
        log_line(log, "e = " + fmt(e) + ", beta = " + fmt(beta) + ", p_hat = " + fmt(dir) + ", E/m = " + fmt(r));
        return std::pair{BoostSpec::from_beta(e, beta), FourMomentum::from_e_over_m(dir, r)};
    };

    checks.push_back({"little group: unitary, det = 1", 1e-12, [=](SampleRng& rng, std::ostream* log) {
                          auto const [b, p] = random_kinematics(rng, log);
                          return unitarity_residual(little_group(b, p).su2);
                      }});

    checks.push_back({"little group: closed form = three-factor oracle", 1e-10, [=](SampleRng& rng, std::ostream* log) {
                          auto const [b, p] = random_kinematics(rng, log);
                          return max_abs_diff(little_group(b, p).su2, little_group_oracle(b, p));
                      }});

    checks.push_back({"little group: cos^2 + |sin n|^2 = 1, angle consistent", 1e-12,
                      [=](SampleRng& rng, std::ostream* log) {
                          auto const [b, p] = random_kinematics(rng, log);
                          WignerRotation const w = little_group(b, p);
                          // su2 = c I + i sigma.v
                          double const c = 0.5 * (w.su2(0, 0) + w.su2(1, 1)).real();
                          Complex const i{0.0, 1.0};
                          Vec3 const v{(-0.5 * i * (w.su2(0, 1) + w.su2(1, 0))).real(),
                                       (0.5 * (w.su2(0, 1) - w.su2(1, 0))).real(),
                                       (-0.5 * i * (w.su2(0, 0) - w.su2(1, 1))).real()};
                          double const unit = std::abs(c * c + dot(v, v) - 1.0);
                          double const angle = std::abs(std::cos(0.5 * w.omega) - c) +
                                               norm(std::sin(0.5 * w.omega) * w.axis - v);
                          return std::max(unit, angle);
                      }});

    checks.push_back({"little group (4x4): rotation angle = wigner_angle, p || z, e || x", 1e-9,
                      [=](SampleRng& rng, std::ostream* log) {
                          double const beta = random_uniform(rng, 0.0, 0.99);
                          double const r = random_uniform(rng, 1.0, 1e3);
                          log_line(log, "beta = " + fmt(beta) + ", E/m = " + fmt(r));
                          Lorentz4 const w = little_group_lorentz(BoostSpec::from_beta(x_hat, beta),
                                                                  FourMomentum::from_e_over_m(z_hat, r));
                          return std::abs(extract_rotation(w).angle - wigner_angle(beta, r));
                      }});

    checks.push_back({"d_half: exponential form = cosh/sinh form", 1e-12, [](SampleRng& rng, std::ostream* log) {
                          Vec3 const e = random_unit(rng);
                          double const alpha = random_uniform(rng, 0.0, 3.0);
                          log_line(log, "e = " + fmt(e) + ", alpha = " + fmt(alpha));
                          return max_abs_diff(d_half_exponential(e, alpha),
                                              d_half_pure_boost(BoostSpec::from_rapidity(e, alpha)));
                      }});

    checks.push_back({"d_half: standard boost = exp((d/2) s.p_hat)", 1e-12, [](SampleRng& rng, std::ostream* log) {
                          Vec3 const dir = random_unit(rng);
                          double const r = random_uniform(rng, 1.0, 1e3);
                          log_line(log, "p_hat = " + fmt(dir) + ", E/m = " + fmt(r));
                          double const delta = std::acosh(r);
                          return max_abs_diff(d_half_standard(FourMomentum::from_e_over_m(dir, r)),
                                              d_half_exponential(dir, delta)) /
                                 std::sqrt(r);
                      }});

    auto random_bell = [](SampleRng& rng, std::ostream* log) {
        BellIndex const idx{static_cast<int>(rng() & 1U), static_cast<int>((rng() >> 1) & 1U)};
        Vec3 const dir = random_unit(rng);
        double const r = random_uniform(rng, 1.0 + 1e-6, 1e3);
        log_line(log, "state = " + std::to_string(idx.i) + std::to_string(idx.j) + ", p_hat = " + fmt(dir) +
                          ", E/m = " + fmt(r));
        return bell_state(idx, FourMomentum::from_e_over_m(dir, r));
    };

    checks.push_back({"bell: boost preserves spin norm", 1e-12, [=](SampleRng& rng, std::ostream* log) {
                          TwoQubitState const s = random_bell(rng, log);
                          Vec3 const e = random_unit(rng);
                          double const beta = random_uniform(rng, 0.0, 0.99);
                          log_line(log, "e = " + fmt(e) + ", beta = " + fmt(beta));
                          TwoQubitState const t = boost_two_particle(s, BoostSpec::from_beta(e, beta));
                          return std::abs(t.norm_squared() - 1.0) + std::abs(bell_decompose(t).norm_squared() - 1.0);
                      }});

    checks.push_back({"bell: collinear boosts compose additively", 1e-10, [=](SampleRng& rng, std::ostream* log) {
                          TwoQubitState const s = random_bell(rng, log);
                          Vec3 const e = random_unit(rng);
                          double const a1 = random_uniform(rng, -1.5, 1.5);
                          double const a2 = random_uniform(rng, -1.5, 1.5);
                          log_line(log, "e = " + fmt(e) + ", alpha1 = " + fmt(a1) + ", alpha2 = " + fmt(a2));
                          TwoQubitState const twice = boost_two_particle(
                              boost_two_particle(s, BoostSpec::from_rapidity(e, a1)), BoostSpec::from_rapidity(e, a2));
                          TwoQubitState const once = boost_two_particle(s, BoostSpec::from_rapidity(e, a1 + a2));
                          return max_abs_diff(twice.amps, once.amps);
                      }});

    checks.push_back({"bell: {00,11} and {01,10} sectors rotate by omega (p || z, e || x)", 1e-12,
                      [](SampleRng& rng, std::ostream* log) {
                          double const beta = random_uniform(rng, 0.0, 0.99);
                          double const r = random_uniform(rng, 1.0 + 1e-6, 1e3);
                          log_line(log, "beta = " + fmt(beta) + ", E/m = " + fmt(r));
                          double const w = wigner_angle(beta, r);
                          double const c = std::cos(w);
                          double const s = std::sin(w);
                          std::array<std::array<double, 4>, 4> const expected{{
                              {c, 0.0, 0.0, -s},
                              {0.0, 1.0, 0.0, 0.0},
                              {0.0, 0.0, 1.0, 0.0},
                              {s, 0.0, 0.0, c},
                          }};
                          double worst = 0.0;
                          for (int k = 0; k < 4; ++k) {
                              BellCoefficients const got = bell_decompose(boosted_bell_state({k / 2, k % 2}, beta, r));
                              std::array<Complex, 4> const g{got.c00, got.c01, got.c10, got.c11};
                              for (std::size_t n = 0; n < 4; ++n)
                                  worst = std::max(worst, std::abs(g[n] - expected[static_cast<std::size_t>(k)][n]));
                          }
                          return worst;
                      }});

    checks.push_back({"bell: kin_factor >= 1 (p || z, e || x)", 0.0, [](SampleRng& rng, std::ostream* log) {
                          double const beta = random_uniform(rng, 0.0, 0.99);
                          double const r = random_uniform(rng, 1.0 + 1e-6, 1e3);
                          log_line(log, "beta = " + fmt(beta) + ", E/m = " + fmt(r));
                          return std::max(0.0, 1.0 - boosted_bell_state({0, 0}, beta, r).kin_factor);
                      }});

    checks.push_back({"observable: Hermitian, traceless, A^2 = I", 1e-12, [](SampleRng& rng, std::ostream* log) {
                          Vec3 const a = random_unit(rng);
                          Vec3 const e = random_unit(rng);
                          double const beta = random_uniform(rng, 0.0, 1.0);
                          log_line(log, "a = " + fmt(a) + ", e = " + fmt(e) + ", beta = " + fmt(beta));
                          Mat2 const m = rel_spin_observable(MeasurementDirection(a), beta, e).m;
                          return std::max({max_abs_diff(m * m, Mat2::identity()), max_abs_diff(m, adjoint(m)),
                                           std::abs(trace(m))});
                      }});

    checks.push_back({"observable: 00 closed form = matrix element", 1e-12, [](SampleRng& rng, std::ostream* log) {
                          MeasurementDirection const a(random_unit(rng));
                          MeasurementDirection const b(random_unit(rng));
                          double const beta = random_uniform(rng, 0.0, 0.99);
                          double const r = random_uniform(rng, 1.0 + 1e-6, 1e3);
                          log_line(log, "a = " + fmt(a.vec()) + ", b = " + fmt(b.vec()) + ", beta = " + fmt(beta) +
                                            ", E/m = " + fmt(r));
                          Vec3 const e{1.0, 0.0, 0.0};
                          double const matrix =
                              joint_expectation(boosted_bell_state({0, 0}, beta, r), rel_spin_observable(a, beta, e),
                                                rel_spin_observable(b, beta, e));
                          return std::abs(matrix - expectation_case1_closed(a, b, beta, wigner_angle(beta, r)));
                      }});

    checks.push_back({"observable: 10 closed form = matrix element", 1e-12, [](SampleRng& rng, std::ostream* log) {
                          MeasurementDirection const a(random_unit(rng));
                          MeasurementDirection const b(random_unit(rng));
                          double const beta = random_uniform(rng, 0.0, 0.99);
                          double const r = random_uniform(rng, 1.0 + 1e-6, 1e3);
                          log_line(log, "a = " + fmt(a.vec()) + ", b = " + fmt(b.vec()) + ", beta = " + fmt(beta) +
                                            ", E/m = " + fmt(r));
                          Vec3 const e{1.0, 0.0, 0.0};
                          double const matrix =
                              joint_expectation(boosted_bell_state({1, 0}, beta, r), rel_spin_observable(a, beta, e),
                                                rel_spin_observable(b, beta, e));
                          return std::abs(matrix - expectation_case2_closed(a, b, beta));
                      }});

    checks.push_back({"chsh: Tsirelson bound |S| <= 2 sqrt2", 1e-12, [=](SampleRng& rng, std::ostream* log) {
                          TwoQubitState s = random_bell(rng, log);
                          Mat2 const u = random_su2(rng);
                          Mat2 const v = random_su2(rng);
                          s.amps = tensor(u, v) * s.amps;
                          Vec3 const e = random_unit(rng);
                          double const beta = random_uniform(rng, 0.0, 0.999);
                          s = boost_two_particle(s, BoostSpec::from_beta(e, beta));
                          ChshSettings const c{MeasurementDirection(random_unit(rng)),
                                               MeasurementDirection(random_unit(rng)),
                                               MeasurementDirection(random_unit(rng)),
                                               MeasurementDirection(random_unit(rng))};
                          log_line(log, "local SU(2) rotations applied; e = " + fmt(e) + ", beta = " + fmt(beta));
                          return std::max(0.0, std::abs(chsh(s, c, beta, e)) - 2.0 * std::numbers::sqrt2);
                      }});

    return checks;
}

} // namespace

std::vector<CheckReport> run_verification(VerifyConfig const& cfg, VerifyHooks const& hooks)
{
    std::vector<CheckReport> reports;
    std::uint64_t check_index = 0;
    for (Check const& check : build_checks(hooks)) {
        // Each check draws from its own family of streams.
        std::uint64_t const check_seed = stream_seed(cfg.seed, 0x5eed0000ULL + check_index++);
        auto guarded = [&check](std::int64_t, SampleRng& rng) {
            try {
                return check.fn(rng, nullptr);
            } catch (std::exception const&) {
                return std::numeric_limits<double>::quiet_NaN();
            }
        };
        SweepResult const r = residual_sweep(cfg.samples, check_seed, check.tolerance, guarded, cfg.execution);

        CheckReport report{check.name, r.max_residual, check.tolerance, r.first_failure < 0, {}};
        if (!report.passed) {
            std::ostringstream os;
            os << "sample " << r.first_failure << " (seed " << cfg.seed << "): ";
            SampleRng rng(stream_seed(check_seed, static_cast<std::uint64_t>(r.first_failure)));
            try {
                double const v = check.fn(rng, &os);
                os << "residual = " << format_double(v);
            } catch (std::exception const& ex) {
                os << "threw: " << ex.what();
            }
            report.failing_input = os.str();
        }
        reports.push_back(std::move(report));
    }
    return reports;
}

} // namespace relbell
