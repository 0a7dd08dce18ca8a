#pragma once

#include <array>
#include <cmath>
#include <complex>

namespace pulseforge {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// 2x2 complex matrix, row-major [[a,b],[c,d]]. Used both for unitary
/// propagators and for Hermitian evolution operators.
struct Mat2 {
  cplx a{1.0, 0.0}, b{0.0, 0.0}, c{0.0, 0.0}, d{1.0, 0.0};

  static Mat2 identity() { return {}; }
  static Mat2 zero() { return {0.0, 0.0, 0.0, 0.0}; }

  Mat2 operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d,
            c * o.a + d * o.c, c * o.b + d * o.d};
  }
  Mat2 operator+(const Mat2& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
  Mat2 operator-(const Mat2& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
  Mat2 operator*(cplx s) const { return {a * s, b * s, c * s, d * s}; }
  Mat2 operator*(double s) const { return {a * s, b * s, c * s, d * s}; }
  Mat2& operator+=(const Mat2& o) { a += o.a; b += o.b; c += o.c; d += o.d; return *this; }

  Mat2 adjoint() const {
    return {std::conj(a), std::conj(c), std::conj(b), std::conj(d)};
  }
  cplx trace() const { return a + d; }
  cplx det() const { return a * d - b * c; }
};

using Unitary2 = Mat2;
using Hermitian2 = Mat2;

// Spin-1/2 Cartesian operators, I_k = sigma_k / 2.
inline Mat2 op_ix() { return {0.0, 0.5, 0.5, 0.0}; }
inline Mat2 op_iy() { return {0.0, cplx(0.0, -0.5), cplx(0.0, 0.5), 0.0}; }
inline Mat2 op_iz() { return {0.5, 0.0, 0.0, -0.5}; }

/// Coefficients of a 2x2 matrix on the basis (I_x, I_y, I_z, E).
struct CartesianProjection {
  cplx x{}, y{}, z{}, e{};
};

/// Rotation axis (unit vector) and angle in [0, 2*pi).
struct AxisAngle {
  std::array<double, 3> axis{0.0, 0.0, 1.0};
  double angle{0.0};
  bool degenerate{false};  // set when the angle is numerically zero
};

double frobenius_distance(const Mat2& p, const Mat2& q);
bool is_unitary(const Mat2& m, double tol = 1e-12);
bool is_hermitian(const Mat2& m, double tol = 1e-12);

/// exp(-i * angle * (n . I)); the axis must be unit-norm.
Unitary2 rot(const AxisAngle& aa);
Unitary2 rot(double nx, double ny, double nz, double angle);

inline Unitary2 rot_x(double angle) { return rot(1.0, 0.0, 0.0, angle); }
inline Unitary2 rot_y(double angle) { return rot(0.0, 1.0, 0.0, angle); }
inline Unitary2 rot_z(double angle) { return rot(0.0, 0.0, 1.0, angle); }

/// m = x*I_x + y*I_y + z*I_z + e*E, coefficients via the trace inner product.
CartesianProjection project(const Mat2& m);
Mat2 unproject(const CartesianProjection& v);

/// Axis/angle of a unitary, resolved so that sin(angle/2) >= 0 and the
/// angle lies in [0, 2*pi). Angles below 1e-9 give axis (0,0,1) and the
/// degenerate flag.
AxisAngle axis_angle_of(const Unitary2& u);

/// |Tr(v * target^dagger) / 2|^2; 1 iff equal up to a global phase.
double unitary_fidelity(const Unitary2& v, const Unitary2& target);

/// Wrap into [0, 2*pi).
double wrap_angle(double a);

}  // namespace pulseforge
