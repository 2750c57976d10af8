#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hyperzero/oct_poly.hpp"
#include "hyperzero/octonion.hpp"
#include "hyperzero/real_roots.hpp"

namespace hz {

// Remainder of f with respect to a conjugacy class: a constant for real
// classes, w*a + b for non-real ones.
struct Remainder {
  bool linear = false;
  Octonion a;  // degree-1 coefficient (linear form only)
  Octonion b;  // constant term; for real classes, the whole remainder

  static Remainder constant(const Octonion& r) { return {false, Octonion(), r}; }
  static Remainder linear_form(const Octonion& a, const Octonion& b) {
    return {true, a, b};
  }
  // w*a + b as a polynomial.
  OctPoly as_poly() const;
};

enum class ZeroKind { Real, Isolated, Spherical };

struct ZeroRecord {
  ConjugacyClass cls;
  ZeroKind kind = ZeroKind::Real;
  Octonion point;  // the zero itself (Real/Isolated); a representative for Spherical
  int multiplicity = 1;
};

struct FtaSummary {
  int degree = 0;
  int real_count = 0;
  int isolated_count = 0;
  int spherical_count = 0;
  int total_multiplicity = 0;
  int class_count() const { return real_count + isolated_count + spherical_count; }
  std::vector<ZeroRecord> records;
};

// f = (w - alpha) * g + r with r = f(alpha) and deg g = deg f - 1.
std::pair<OctPoly, Octonion> divide_linear(const OctPoly& f, const Octonion& alpha);

// Remainder of f modulo the class: f = Delta h + w a + b for non-real
// classes (computed from the canonical representative), f(alpha) for real
// ones.  Depends only on the class, not the representative.
Remainder remainder_at(const OctPoly& f, const ConjugacyClass& c,
                       const Tolerances& tol = Tolerances::standard());
// Same, but from an explicitly chosen representative on the sphere.
Remainder remainder_at_representative(const OctPoly& f, const Octonion& alpha,
                                      const Tolerances& tol = Tolerances::standard());

// The quotient h in f = Delta_c h + w a + b.
std::pair<OctPoly, Remainder> divide_class(const OctPoly& f, const ConjugacyClass& c,
                                           const Tolerances& tol = Tolerances::standard());

// Sphere-by-sphere trichotomy of Corollary-style zero classification;
// nullopt when the sphere misses the zero set.  The record multiplicity is
// computed through the normal polynomial.
std::optional<ZeroRecord> classify_at(const OctPoly& f, const ConjugacyClass& c,
                                      const Tolerances& tol = Tolerances::standard());

// Full zero set of a polynomial of degree >= 1: spectrum of N(f), then one
// classified record per class.  Every spectrum class must classify non-empty.
std::vector<ZeroRecord> zero_set(const OctPoly& f,
                                 const Tolerances& tol = Tolerances::standard());

// Aggregates zero_set and checks sum of multiplicities = degree and
// r + i + 2s <= degree.
FtaSummary verify_fta(const OctPoly& f, const Tolerances& tol = Tolerances::standard());

struct Factorization {
  std::vector<Octonion> factors;  // f = (w-a1)*((w-a2)*(...*((w-an)*c)))
  Octonion constant;
  // Right-nested re-expansion of the factors.
  OctPoly expand(const Tolerances& tol = Tolerances::standard()) const;
};

Factorization factorize(const OctPoly& f,
                        const Tolerances& tol = Tolerances::standard());

enum class StructureForm {
  RealPlusNonRealConstant,   // a_1..a_n real, a_0 non-real: only isolated zeros
  RealPlusLinearNonReal,     // a_2..a_n real, a_0 or a_1 non-real: no spherical
  AllReal,                   // only real or spherical zeros
  General
};

struct StructureProfile {
  StructureForm form = StructureForm::General;
  std::vector<ZeroRecord> records;
  bool prediction_holds = true;
  double max_plane_residual = 0.0;  // distance from span{1, a0}, first form only
};

StructureProfile structure_profile(const OctPoly& f,
                                   const Tolerances& tol = Tolerances::standard());

}  // namespace hz
