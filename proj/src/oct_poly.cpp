#include "hyperzero/oct_poly.hpp"

#include <cmath>

#include "hyperzero/errors.hpp"

namespace hz {
namespace {

// Trailing-zero cleanup: drop leading coefficients whose norm is negligible
// against the largest coefficient.
std::vector<Octonion> normalized(std::vector<Octonion> c, const Tolerances& tol) {
  double scale = 0.0;
  for (const Octonion& a : c) scale = std::fmax(scale, norm(a));
  while (!c.empty() && norm(c.back()) <= tol.abs + tol.rel * scale) c.pop_back();
  return c;
}

}  // namespace

OctPoly::OctPoly(std::vector<Octonion> coeffs, const Tolerances& tol)
    : c_(normalized(std::move(coeffs), tol)) {}

OctPoly OctPoly::constant(const Octonion& a) { return OctPoly({a}); }

OctPoly OctPoly::linear(const Octonion& alpha) {
  return OctPoly({-alpha, Octonion(1.0)});
}

OctPoly OctPoly::from_real(const RealPoly& p) {
  std::vector<Octonion> c;
  c.reserve(p.coeffs().size());
  for (double v : p.coeffs()) c.emplace_back(v);
  return OctPoly(std::move(c));
}

double OctPoly::max_coeff_norm() const {
  double m = 0.0;
  for (const Octonion& a : c_) m = std::fmax(m, norm(a));
  return m;
}

bool OctPoly::is_real(const Tolerances& tol) const {
  const double scale = max_coeff_norm();
  for (const Octonion& a : c_)
    if (!tol.is_zero(norm(a.imag()), scale)) return false;
  return true;
}

bool OctPoly::is_quaternionic(const Tolerances& tol) const {
  for (const Octonion& a : c_)
    if (!a.is_quaternion(tol)) return false;
  return true;
}

RealPoly OctPoly::real_part() const {
  std::vector<double> r;
  r.reserve(c_.size());
  for (const Octonion& a : c_) r.push_back(a.real());
  return RealPoly(std::move(r));
}

OctPoly star_mul(const OctPoly& f, const OctPoly& g, const Tolerances& tol) {
  if (f.is_zero() || g.is_zero()) return OctPoly();
  std::vector<Octonion> out(f.coeffs().size() + g.coeffs().size() - 1);
  for (std::size_t a = 0; a < f.coeffs().size(); ++a)
    for (std::size_t b = 0; b < g.coeffs().size(); ++b)
      out[a + b] += mul(f.coeffs()[a], g.coeffs()[b]);
  return OctPoly(std::move(out), tol);
}

OctPoly conj_poly(const OctPoly& f) {
  std::vector<Octonion> out;
  out.reserve(f.coeffs().size());
  for (const Octonion& a : f.coeffs()) out.push_back(conj(a));
  return OctPoly(std::move(out));
}

OctPoly add(const OctPoly& f, const OctPoly& g, const Tolerances& tol) {
  std::vector<Octonion> out(std::max(f.coeffs().size(), g.coeffs().size()));
  for (std::size_t idx = 0; idx < out.size(); ++idx)
    out[idx] = f.coeff(idx) + g.coeff(idx);
  return OctPoly(std::move(out), tol);
}

OctPoly sub(const OctPoly& f, const OctPoly& g, const Tolerances& tol) {
  std::vector<Octonion> out(std::max(f.coeffs().size(), g.coeffs().size()));
  for (std::size_t idx = 0; idx < out.size(); ++idx)
    out[idx] = f.coeff(idx) - g.coeff(idx);
  return OctPoly(std::move(out), tol);
}

OctPoly scale(const OctPoly& f, const Octonion& c, Side side, const Tolerances& tol) {
  std::vector<Octonion> out;
  out.reserve(f.coeffs().size());
  for (const Octonion& a : f.coeffs())
    out.push_back(side == Side::Right ? mul(a, c) : mul(c, a));
  return OctPoly(std::move(out), tol);
}

RealPoly normal(const OctPoly& f, const Tolerances& tol) {
  const OctPoly fc = conj_poly(f);
  const OctPoly lhs = star_mul(f, fc, tol);
  const OctPoly rhs = star_mul(fc, f, tol);
  const double scale = std::fmax(1.0, lhs.max_coeff_norm());
  const std::size_t terms = std::max(lhs.coeffs().size(), rhs.coeffs().size());
  for (std::size_t idx = 0; idx < terms; ++idx) {
    const Octonion a = lhs.coeff(idx);
    const Octonion b = rhs.coeff(idx);
    if (!tol.is_zero(distance(a, b), scale))
      throw RealityViolation("f*conj(f) != conj(f)*f: arithmetic inconsistency");
    if (!tol.is_zero(norm(a.imag()), scale))
      throw RealityViolation("normal polynomial has a non-real coefficient");
  }
  return lhs.real_part();
}

Octonion evaluate(const OctPoly& f, const Octonion& x) {
  Octonion acc;
  Octonion xp(1.0);
  for (std::size_t idx = 0; idx < f.coeffs().size(); ++idx) {
    acc += mul(xp, f.coeffs()[idx]);
    xp = mul(xp, x);
  }
  return acc;
}

double evaluate(const RealPoly& f, double x) { return f.evaluate(x); }

double evaluation_scale(const OctPoly& f, const Octonion& x) {
  const double r = std::fmax(1.0, norm(x));
  double s = 0.0;
  double rp = 1.0;
  for (const Octonion& a : f.coeffs()) {
    s += norm(a) * rp;
    rp *= r;
  }
  return std::fmax(1.0, s);
}

}  // namespace hz
