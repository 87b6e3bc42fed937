// Fixed-size complex matrix algebra for spin-1/2 and two-qubit operators.
#pragma once

#include <array>
#include <complex>
#include <cstddef>

namespace relbell {

using Complex = std::complex<double>;

/// Real 3-vector (spatial components in natural units).
struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Vec3 operator+(Vec3 const& o) const { return {x + o.x, y + o.y, z + o.z}; }
    constexpr Vec3 operator-(Vec3 const& o) const { return {x - o.x, y - o.y, z - o.z}; }
    constexpr Vec3 operator-() const { return {-x, -y, -z}; }
    constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    constexpr Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
};

constexpr Vec3 operator*(double s, Vec3 const& v) { return v * s; }
constexpr double dot(Vec3 const& a, Vec3 const& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
constexpr Vec3 cross(Vec3 const& a, Vec3 const& b)
{
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
double norm(Vec3 const& v);
/// Unit vector along v; throws std::domain_error for the zero vector.
Vec3 normalized(Vec3 const& v);
bool is_finite(Vec3 const& v);

/// Row-major 2x2 complex matrix.
struct Mat2 {
    std::array<Complex, 4> a{};

    Complex& operator()(std::size_t r, std::size_t c) { return a[2 * r + c]; }
    Complex const& operator()(std::size_t r, std::size_t c) const { return a[2 * r + c]; }

    static Mat2 identity();
    static Mat2 zero() { return {}; }
};

Mat2 operator+(Mat2 const& l, Mat2 const& r);
Mat2 operator-(Mat2 const& l, Mat2 const& r);
Mat2 operator*(Mat2 const& l, Mat2 const& r);
Mat2 operator*(Complex s, Mat2 const& m);
Mat2 operator*(Mat2 const& m, Complex s);

Mat2 adjoint(Mat2 const& m);
Complex trace(Mat2 const& m);
Complex det(Mat2 const& m);
/// General inverse via the adjugate; throws std::domain_error when singular.
Mat2 inverse(Mat2 const& m);
bool is_finite(Mat2 const& m);

/// Row-major 4x4 complex matrix over the two-qubit basis (++, +-, -+, --).
struct Mat4 {
    std::array<Complex, 16> a{};

    Complex& operator()(std::size_t r, std::size_t c) { return a[4 * r + c]; }
    Complex const& operator()(std::size_t r, std::size_t c) const { return a[4 * r + c]; }

    static Mat4 identity();
};

Mat4 operator+(Mat4 const& l, Mat4 const& r);
Mat4 operator*(Mat4 const& l, Mat4 const& r);
Mat4 operator*(Complex s, Mat4 const& m);
Mat4 adjoint(Mat4 const& m);

using Vec4c = std::array<Complex, 4>;
Vec4c operator*(Mat4 const& m, Vec4c const& v);
/// <u|v>, conjugate-linear in the first argument.
Complex inner(Vec4c const& u, Vec4c const& v);

double max_abs_diff(Mat2 const& l, Mat2 const& r);
double max_abs_diff(Mat4 const& l, Mat4 const& r);
double max_abs_diff(Vec4c const& l, Vec4c const& r);

inline constexpr double default_tolerance = 1e-12;

bool approx_equal(Mat2 const& l, Mat2 const& r, double tol = default_tolerance);
bool approx_equal(Mat4 const& l, Mat4 const& r, double tol = default_tolerance);

enum class Axis { x, y, z };

Mat2 pauli(Axis axis);
/// v_x sigma_x + v_y sigma_y + v_z sigma_z
Mat2 sigma_dot(Vec3 const& v);
/// Complex-coefficient variant; used to decompose general 2x2 matrices.
Mat2 sigma_dot(std::array<Complex, 3> const& v);

/// Kronecker product a (x) b, first factor major.
Mat4 tensor(Mat2 const& a, Mat2 const& b);

/// Matrix exponential. Uses the exact form e^c [cosh(s) I + sinh(s)/s (b.sigma)]
/// of m = cI + b.sigma with s^2 = b.b.
Mat2 exp2(Mat2 const& m);
/// Taylor series with scaling and squaring.
Mat2 exp2_scaling_squaring(Mat2 const& m);

} // namespace relbell
