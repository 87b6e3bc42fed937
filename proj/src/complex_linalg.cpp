#include "relbell/complex_linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace relbell {

double norm(Vec3 const& v) { return std::hypot(v.x, v.y, v.z); }

Vec3 normalized(Vec3 const& v)
{
    double const n = norm(v);
    if (!(n > 0.0) || !std::isfinite(n)) {
        throw std::domain_error("cannot normalize a zero or non-finite vector");
    }
    return v / n;
}

bool is_finite(Vec3 const& v) { return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z); }

Mat2 Mat2::identity()
{
    Mat2 m;
    m(0, 0) = 1.0;
    m(1, 1) = 1.0;
    return m;
}

Mat2 operator+(Mat2 const& l, Mat2 const& r)
{
    Mat2 out;
    for (std::size_t i = 0; i < 4; ++i) out.a[i] = l.a[i] + r.a[i];
    return out;
}

Mat2 operator-(Mat2 const& l, Mat2 const& r)
{
    Mat2 out;
    for (std::size_t i = 0; i < 4; ++i) out.a[i] = l.a[i] - r.a[i];
    return out;
}

Mat2 operator*(Mat2 const& l, Mat2 const& r)
{
    Mat2 out;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            out(i, j) = l(i, 0) * r(0, j) + l(i, 1) * r(1, j);
    return out;
}

Mat2 operator*(Complex s, Mat2 const& m)
{
    Mat2 out;
    for (std::size_t i = 0; i < 4; ++i) out.a[i] = s * m.a[i];
    return out;
}

Mat2 operator*(Mat2 const& m, Complex s) { return s * m; }

Mat2 adjoint(Mat2 const& m)
{
    Mat2 out;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) out(i, j) = std::conj(m(j, i));
    return out;
}

Complex trace(Mat2 const& m) { return m(0, 0) + m(1, 1); }

Complex det(Mat2 const& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

Mat2 inverse(Mat2 const& m)
{
    Complex const d = det(m);
    if (std::abs(d) == 0.0) {
        throw std::domain_error("singular 2x2 matrix");
    }
    Mat2 out;
    out(0, 0) = m(1, 1) / d;
    out(0, 1) = -m(0, 1) / d;
    out(1, 0) = -m(1, 0) / d;
    out(1, 1) = m(0, 0) / d;
    return out;
}

bool is_finite(Mat2 const& m)
{
    return std::all_of(m.a.begin(), m.a.end(),
                       [](Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); });
}

Mat4 Mat4::identity()
{
    Mat4 m;
    for (std::size_t i = 0; i < 4; ++i) m(i, i) = 1.0;
    return m;
}

Mat4 operator+(Mat4 const& l, Mat4 const& r)
{
    Mat4 out;
    for (std::size_t i = 0; i < 16; ++i) out.a[i] = l.a[i] + r.a[i];
    return out;
}

Mat4 operator*(Mat4 const& l, Mat4 const& r)
{
    Mat4 out;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            Complex acc = 0.0;
            for (std::size_t k = 0; k < 4; ++k) acc += l(i, k) * r(k, j);
            out(i, j) = acc;
        }
    return out;
}

Mat4 operator*(Complex s, Mat4 const& m)
{
    Mat4 out;
    for (std::size_t i = 0; i < 16; ++i) out.a[i] = s * m.a[i];
    return out;
}

Mat4 adjoint(Mat4 const& m)
{
    Mat4 out;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) out(i, j) = std::conj(m(j, i));
    return out;
}

Vec4c operator*(Mat4 const& m, Vec4c const& v)
{
    Vec4c out{};
    for (std::size_t i = 0; i < 4; ++i) {
        Complex acc = 0.0;
        for (std::size_t k = 0; k < 4; ++k) acc += m(i, k) * v[k];
        out[i] = acc;
    }
    return out;
}

Complex inner(Vec4c const& u, Vec4c const& v)
{
    Complex acc = 0.0;
    for (std::size_t i = 0; i < 4; ++i) acc += std::conj(u[i]) * v[i];
    return acc;
}

namespace {

template <std::size_t N>
double max_abs_diff_impl(std::array<Complex, N> const& l, std::array<Complex, N> const& r)
{
    double worst = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
        double const d = std::abs(l[i] - r[i]);
        if (std::isnan(d)) return d;
        worst = std::max(worst, d);
    }
    return worst;
}

} // namespace

double max_abs_diff(Mat2 const& l, Mat2 const& r) { return max_abs_diff_impl(l.a, r.a); }
double max_abs_diff(Mat4 const& l, Mat4 const& r) { return max_abs_diff_impl(l.a, r.a); }
double max_abs_diff(Vec4c const& l, Vec4c const& r) { return max_abs_diff_impl(l, r); }

bool approx_equal(Mat2 const& l, Mat2 const& r, double tol) { return max_abs_diff(l, r) <= tol; }
bool approx_equal(Mat4 const& l, Mat4 const& r, double tol) { return max_abs_diff(l, r) <= tol; }

Mat2 pauli(Axis axis)
{
    using namespace std::complex_literals;
    Mat2 m;
    switch (axis) {
    case Axis::x:
        m(0, 1) = 1.0;
        m(1, 0) = 1.0;
        break;
    case Axis::y:
        m(0, 1) = -1.0i;
        m(1, 0) = 1.0i;
        break;
    case Axis::z:
        m(0, 0) = 1.0;
        m(1, 1) = -1.0;
        break;
    }
    return m;
}

Mat2 sigma_dot(Vec3 const& v)
{
    Mat2 m;
    m(0, 0) = v.z;
    m(0, 1) = Complex(v.x, -v.y);
    m(1, 0) = Complex(v.x, v.y);
    m(1, 1) = -v.z;
    return m;
}

Mat2 sigma_dot(std::array<Complex, 3> const& v)
{
    using namespace std::complex_literals;
    Mat2 m;
    m(0, 0) = v[2];
    m(0, 1) = v[0] - 1.0i * v[1];
    m(1, 0) = v[0] + 1.0i * v[1];
    m(1, 1) = -v[2];
    return m;
}

Mat4 tensor(Mat2 const& a, Mat2 const& b)
{
    Mat4 out;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                for (std::size_t l = 0; l < 2; ++l) out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
    return out;
}

Mat2 exp2(Mat2 const& m)
{
    using namespace std::complex_literals;
    // m = c I + b.sigma
    Complex const c = 0.5 * (m(0, 0) + m(1, 1));
    std::array<Complex, 3> const b{0.5 * (m(0, 1) + m(1, 0)), 0.5i * (m(0, 1) - m(1, 0)),
                                   0.5 * (m(0, 0) - m(1, 1))};
    Complex const s2 = b[0] * b[0] + b[1] * b[1] + b[2] * b[2];
    Complex const s = std::sqrt(s2);

    Complex sinhc; // sinh(s)/s, even in s so the branch of sqrt is irrelevant
    if (std::abs(s) < 1e-4) {
        sinhc = 1.0 + s2 / 6.0 + s2 * s2 / 120.0;
    } else {
        sinhc = std::sinh(s) / s;
    }
    Mat2 const out = std::exp(c) * (std::cosh(s) * Mat2::identity() + sinhc * sigma_dot(b));
    if (!is_finite(out)) {
        return exp2_scaling_squaring(m);
    }
    return out;
}

Mat2 exp2_scaling_squaring(Mat2 const& m)
{
    double norm1 = 0.0;
    for (std::size_t j = 0; j < 2; ++j) norm1 = std::max(norm1, std::abs(m(0, j)) + std::abs(m(1, j)));

    int squarings = 0;
    if (norm1 > 0.5) {
        squarings = static_cast<int>(std::ceil(std::log2(norm1 / 0.5)));
    }
    Mat2 const scaled = std::ldexp(1.0, -squarings) * m;

    // Taylor to 18 terms; |scaled| <= 1/2 so the remainder is below 1e-22.
    Mat2 result = Mat2::identity();
    Mat2 term = Mat2::identity();
    for (int k = 1; k <= 18; ++k) {
        term = (1.0 / k) * (term * scaled);
        result = result + term;
    }
    for (int i = 0; i < squarings; ++i) result = result * result;
    return result;
}

} // namespace relbell
