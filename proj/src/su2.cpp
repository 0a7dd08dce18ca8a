#include "pulseforge/su2.hpp"

#include <stdexcept>

namespace pulseforge {

double frobenius_distance(const Mat2& p, const Mat2& q) {
  const Mat2 d = p - q;
  return std::sqrt(std::norm(d.a) + std::norm(d.b) + std::norm(d.c) + std::norm(d.d));
}

bool is_unitary(const Mat2& m, double tol) {
  const Mat2 g = m.adjoint() * m;
  if (frobenius_distance(g, Mat2::identity()) > 2.0 * tol) return false;
  return std::abs(std::abs(m.det()) - 1.0) <= tol;
}

bool is_hermitian(const Mat2& m, double tol) {
  return frobenius_distance(m, m.adjoint()) <= 2.0 * tol;
}

Unitary2 rot(double nx, double ny, double nz, double angle) {
  const double n2 = nx * nx + ny * ny + nz * nz;
  if (std::abs(n2 - 1.0) > 1e-9)
    throw std::invalid_argument("rot: axis must be unit-norm");
  const double c = std::cos(angle / 2.0);
  const double s = std::sin(angle / 2.0);
  // cos(a/2) E - i sin(a/2) (n . sigma)
  return {cplx(c, -s * nz), cplx(s * ny, -s * nx),
          cplx(-s * ny, -s * nx), cplx(c, s * nz)};
}

Unitary2 rot(const AxisAngle& aa) {
  return rot(aa.axis[0], aa.axis[1], aa.axis[2], aa.angle);
}

CartesianProjection project(const Mat2& m) {
  // v_k = 2 Tr(m I_k), v_e = Tr(m)/2
  CartesianProjection v;
  v.x = m.b + m.c;
  v.y = cplx(0.0, 1.0) * (m.b - m.c);
  v.z = m.a - m.d;
  v.e = (m.a + m.d) * 0.5;
  return v;
}

Mat2 unproject(const CartesianProjection& v) {
  Mat2 m = op_ix() * v.x;
  m += op_iy() * v.y;
  m += op_iz() * v.z;
  m += Mat2::identity() * v.e;
  return m;
}

AxisAngle axis_angle_of(const Unitary2& u) {
  const CartesianProjection v = project(u);
  const double tx = v.x.imag(), ty = v.y.imag(), tz = v.z.imag();
  const double s = 0.5 * std::sqrt(tx * tx + ty * ty + tz * tz);  // sin(angle/2)
  AxisAngle aa;
  aa.angle = 2.0 * std::atan2(s, v.e.real());
  if (aa.angle >= kTwoPi) aa.angle -= kTwoPi;
  if (aa.angle < 1e-9 || s < 1e-12) {
    aa.axis = {0.0, 0.0, 1.0};
    aa.degenerate = true;
    return aa;
  }
  aa.axis = {-tx / (2.0 * s), -ty / (2.0 * s), -tz / (2.0 * s)};
  return aa;
}

double unitary_fidelity(const Unitary2& v, const Unitary2& target) {
  const cplx z = (v * target.adjoint()).trace() * 0.5;
  return std::norm(z);
}

double wrap_angle(double a) {
  a = std::fmod(a, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  return a;
}

}  // namespace pulseforge
