#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <string>

#include "hyperzero/errors.hpp"
#include "hyperzero/tolerances.hpp"

namespace hz {

class RealPoly;

// An element of the octonion algebra, stored in the basis
// (1, i, j, ij, k, ik, jk, (ij)k).  Quaternions are the sub-case with the
// last four coordinates zero.  Multiplication is the Cayley-Dickson product
// over pairs of quaternions, each quaternion being a Cayley-Dickson pair of
// complex numbers.
class Octonion {
public:
  Octonion() : c_{} {}
  Octonion(double real) : c_{} { c_[0] = real; }  // NOLINT: implicit on purpose
  explicit Octonion(const std::array<double, 8>& coords) : c_(coords) {}
  Octonion(double c0, double c1, double c2, double c3,
           double c4, double c5, double c6, double c7)
      : c_{c0, c1, c2, c3, c4, c5, c6, c7} {}

  static Octonion basis(std::size_t index);  // 0..7 in basis order
  static Octonion i() { return basis(1); }
  static Octonion j() { return basis(2); }
  static Octonion ij() { return basis(3); }
  static Octonion k() { return basis(4); }

  double operator[](std::size_t idx) const { return c_[idx]; }
  double& operator[](std::size_t idx) { return c_[idx]; }
  const std::array<double, 8>& coords() const { return c_; }

  double real() const { return c_[0]; }
  Octonion imag() const;  // the purely imaginary part

  bool is_quaternion(const Tolerances& tol = Tolerances::standard()) const;
  bool is_real(const Tolerances& tol = Tolerances::standard()) const;
  bool is_zero(const Tolerances& tol = Tolerances::standard()) const;

  Octonion operator-() const;
  Octonion operator+(const Octonion& rhs) const;
  Octonion operator-(const Octonion& rhs) const;
  Octonion operator*(double s) const;
  Octonion& operator+=(const Octonion& rhs);
  Octonion& operator-=(const Octonion& rhs);

  friend bool operator==(const Octonion& a, const Octonion& b) { return a.c_ == b.c_; }

private:
  std::array<double, 8> c_;
};

inline Octonion operator*(double s, const Octonion& x) { return x * s; }

Octonion mul(const Octonion& x, const Octonion& y);
Octonion conj(const Octonion& x);
double trace(const Octonion& x);
double norm_sq(const Octonion& x);
double norm(const Octonion& x);
Octonion inverse(const Octonion& x, const Tolerances& tol = Tolerances::standard());

// x^n for n >= 0; stays inside the commutative plane generated by x.
Octonion power(const Octonion& x, unsigned n);

// Euclidean distance between two octonions.
double distance(const Octonion& x, const Octonion& y);

// The pair (trace, squared norm) identifying the conjugacy class of an
// octonion: a point when t^2 = 4n, a 6-sphere otherwise.
struct ConjugacyClass {
  double t = 0.0;
  double n = 0.0;

  bool is_real(const Tolerances& tol = Tolerances::standard()) const {
    return 4.0 * n - t * t <= tol.cls * std::fmax(1.0, n);
  }
  double real_point() const { return t / 2.0; }
};

bool same_class(const ConjugacyClass& a, const ConjugacyClass& b,
                const Tolerances& tol = Tolerances::standard());

// Nearly-real classes are snapped onto the real axis (n := t^2/4).
ConjugacyClass class_of(const Octonion& x, const Tolerances& tol = Tolerances::standard());

// w^2 - w t + n, the real quadratic vanishing exactly on the class.
RealPoly char_poly(const ConjugacyClass& c);

// Canonical representative t/2 + sqrt(n - t^2/4) i on the slice through i;
// real classes yield the real point t/2.
Octonion representative(const ConjugacyClass& c,
                        const Tolerances& tol = Tolerances::standard());

// t/2 + sqrt(n - t^2/4) * unit, for an arbitrary imaginary unit.
Octonion point_on_sphere(const ConjugacyClass& c, const Octonion& imaginary_unit,
                         const Tolerances& tol = Tolerances::standard());

}  // namespace hz
