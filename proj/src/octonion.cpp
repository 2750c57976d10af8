#include "hyperzero/octonion.hpp"

#include <complex>

#include "hyperzero/real_poly.hpp"

namespace hz {
namespace {

using Quat = std::array<double, 4>;  // basis (1, i, j, ij)
using Cplx = std::complex<double>;

Quat quat_conj(const Quat& q) { return {q[0], -q[1], -q[2], -q[3]}; }

// Quaternion product as a Cayley-Dickson pair of complex numbers:
// q = z1 + z2 j, (z1,z2)(w1,w2) = (z1 w1 - conj(w2) z2, z2 conj(w1) + w2 z1).
Quat quat_mul(const Quat& x, const Quat& y) {
  const Cplx x1(x[0], x[1]), x2(x[2], x[3]);
  const Cplx y1(y[0], y[1]), y2(y[2], y[3]);
  const Cplx r1 = x1 * y1 - std::conj(y2) * x2;
  const Cplx r2 = x2 * std::conj(y1) + y2 * x1;
  return {r1.real(), r1.imag(), r2.real(), r2.imag()};
}

Quat lo(const Octonion& x) { return {x[0], x[1], x[2], x[3]}; }
Quat hi(const Octonion& x) { return {x[4], x[5], x[6], x[7]}; }

}  // namespace

Octonion Octonion::basis(std::size_t index) {
  Octonion e;
  e[index] = 1.0;
  return e;
}

Octonion Octonion::imag() const {
  Octonion r = *this;
  r[0] = 0.0;
  return r;
}

bool Octonion::is_quaternion(const Tolerances& tol) const {
  const double scale = norm(*this);
  for (std::size_t idx = 4; idx < 8; ++idx)
    if (!tol.is_zero(c_[idx], scale)) return false;
  return true;
}

bool Octonion::is_real(const Tolerances& tol) const {
  const double scale = norm(*this);
  for (std::size_t idx = 1; idx < 8; ++idx)
    if (!tol.is_zero(c_[idx], scale)) return false;
  return true;
}

bool Octonion::is_zero(const Tolerances& tol) const {
  return tol.is_zero(norm(*this));
}

Octonion Octonion::operator-() const {
  Octonion r;
  for (std::size_t idx = 0; idx < 8; ++idx) r[idx] = -c_[idx];
  return r;
}

Octonion Octonion::operator+(const Octonion& rhs) const {
  Octonion r = *this;
  r += rhs;
  return r;
}

Octonion Octonion::operator-(const Octonion& rhs) const {
  Octonion r = *this;
  r -= rhs;
  return r;
}

Octonion Octonion::operator*(double s) const {
  Octonion r;
  for (std::size_t idx = 0; idx < 8; ++idx) r[idx] = c_[idx] * s;
  return r;
}

Octonion& Octonion::operator+=(const Octonion& rhs) {
  for (std::size_t idx = 0; idx < 8; ++idx) c_[idx] += rhs.c_[idx];
  return *this;
}

Octonion& Octonion::operator-=(const Octonion& rhs) {
  for (std::size_t idx = 0; idx < 8; ++idx) c_[idx] -= rhs.c_[idx];
  return *this;
}

// x = x1 + x2 k, y = y1 + y2 k with quaternionic components:
// xy = x1 y1 - conj(y2) x2 + (x2 conj(y1) + y2 x1) k.
Octonion mul(const Octonion& x, const Octonion& y) {
  const Quat x1 = lo(x), x2 = hi(x), y1 = lo(y), y2 = hi(y);
  const Quat p = quat_mul(x1, y1);
  const Quat q = quat_mul(quat_conj(y2), x2);
  const Quat r = quat_mul(x2, quat_conj(y1));
  const Quat s = quat_mul(y2, x1);
  return Octonion(p[0] - q[0], p[1] - q[1], p[2] - q[2], p[3] - q[3],
                  r[0] + s[0], r[1] + s[1], r[2] + s[2], r[3] + s[3]);
}

Octonion conj(const Octonion& x) {
  Octonion r = -x;
  r[0] = x[0];
  return r;
}

double trace(const Octonion& x) { return 2.0 * x[0]; }

double norm_sq(const Octonion& x) {
  double s = 0.0;
  for (std::size_t idx = 0; idx < 8; ++idx) s += x[idx] * x[idx];
  return s;
}

double norm(const Octonion& x) { return std::sqrt(norm_sq(x)); }

Octonion inverse(const Octonion& x, const Tolerances& tol) {
  const double n = norm_sq(x);
  if (n <= tol.abs) throw DivisionByZero();
  return conj(x) * (1.0 / n);
}

Octonion power(const Octonion& x, unsigned n) {
  Octonion r(1.0);
  for (unsigned idx = 0; idx < n; ++idx) r = mul(r, x);
  return r;
}

double distance(const Octonion& x, const Octonion& y) { return norm(x - y); }

bool same_class(const ConjugacyClass& a, const ConjugacyClass& b, const Tolerances& tol) {
  const double scale = std::fmax(1.0, std::fmax(std::fabs(a.t) + a.n, std::fabs(b.t) + b.n));
  return std::fabs(a.t - b.t) <= tol.cls * scale && std::fabs(a.n - b.n) <= tol.cls * scale;
}

ConjugacyClass class_of(const Octonion& x, const Tolerances& tol) {
  ConjugacyClass c{trace(x), norm_sq(x)};
  if (4.0 * c.n - c.t * c.t < tol.cls * std::fmax(1.0, c.n)) c.n = c.t * c.t / 4.0;
  return c;
}

RealPoly char_poly(const ConjugacyClass& c) { return RealPoly({c.n, -c.t, 1.0}); }

Octonion representative(const ConjugacyClass& c, const Tolerances& tol) {
  return point_on_sphere(c, Octonion::i(), tol);
}

Octonion point_on_sphere(const ConjugacyClass& c, const Octonion& imaginary_unit,
                         const Tolerances& tol) {
  const double disc = c.n - c.t * c.t / 4.0;
  if (disc < -tol.cls * std::fmax(1.0, c.n))
    throw InvalidClass("conjugacy class with t^2 > 4n is not realizable in O");
  Octonion r = Octonion(c.t / 2.0);
  if (c.is_real(tol)) return r;
  return r + imaginary_unit * std::sqrt(std::fmax(disc, 0.0));
}

}  // namespace hz
