#pragma once

#include <vector>

#include "hyperzero/octonion.hpp"
#include "hyperzero/real_poly.hpp"
#include "hyperzero/tolerances.hpp"

namespace hz {

enum class Side { Left, Right };

// Regular octonionic polynomial f(w) = sum_i w^i a_i with right coefficients,
// lowest degree first.
class OctPoly {
public:
  OctPoly() = default;
  explicit OctPoly(std::vector<Octonion> coeffs,
                   const Tolerances& tol = Tolerances::standard());

  static OctPoly zero() { return OctPoly(); }
  static OctPoly constant(const Octonion& a);
  // w - alpha
  static OctPoly linear(const Octonion& alpha);
  static OctPoly from_real(const RealPoly& p);

  const std::vector<Octonion>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Octonion coeff(std::size_t idx) const {
    return idx < c_.size() ? c_[idx] : Octonion();
  }
  Octonion leading() const { return c_.empty() ? Octonion() : c_.back(); }
  double max_coeff_norm() const;

  bool is_real(const Tolerances& tol = Tolerances::standard()) const;
  bool is_quaternionic(const Tolerances& tol = Tolerances::standard()) const;
  // Real parts of the coefficients, dropping imaginary residue.
  RealPoly real_part() const;

private:
  std::vector<Octonion> c_;
};

OctPoly star_mul(const OctPoly& f, const OctPoly& g,
                 const Tolerances& tol = Tolerances::standard());
OctPoly conj_poly(const OctPoly& f);
OctPoly add(const OctPoly& f, const OctPoly& g,
            const Tolerances& tol = Tolerances::standard());
OctPoly sub(const OctPoly& f, const OctPoly& g,
            const Tolerances& tol = Tolerances::standard());
OctPoly scale(const OctPoly& f, const Octonion& c, Side side,
              const Tolerances& tol = Tolerances::standard());

// Normal polynomial N(f) = f * conj(f) = conj(f) * f.  Computes both
// orderings, checks they agree and are real, and returns the real parts.
// Throws RealityViolation when the imaginary residue is above tolerance.
RealPoly normal(const OctPoly& f, const Tolerances& tol = Tolerances::standard());

// f(x) = sum_i x^i a_i, powers taken in the plane generated by x.
Octonion evaluate(const OctPoly& f, const Octonion& x);
double evaluate(const RealPoly& f, double x);

// sum_i |a_i| max(1,|x|)^i, the natural residual scale for |f(x)|.
double evaluation_scale(const OctPoly& f, const Octonion& x);

}  // namespace hz
