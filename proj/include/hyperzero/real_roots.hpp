#pragma once

#include <complex>
#include <vector>

#include "hyperzero/octonion.hpp"
#include "hyperzero/real_poly.hpp"
#include "hyperzero/tolerances.hpp"

namespace hz {

struct ComplexRoot {
  std::complex<double> z;
  int multiplicity = 1;
};

// All complex roots of a real polynomial, closed under conjugation, with
// multiplicities summing to the degree.  Aberth-Ehrlich simultaneous
// iteration; companion-matrix eigenvalues as fallback when iteration stalls.
std::vector<ComplexRoot> complex_roots(const RealPoly& P,
                                       const Tolerances& tol = Tolerances::standard());

struct ClassSpectrum {
  struct Entry {
    ConjugacyClass cls;
    int multiplicity = 1;  // root multiplicity over C (per conjugate pair)
    int root_count = 0;    // roots of P consumed, with multiplicity (pair = 2)
  };
  std::vector<Entry> entries;
};

// Conjugate root pairs merged into non-real classes, real roots into real
// classes; sorted by (t, n) for determinism.
ClassSpectrum class_spectrum(const RealPoly& P,
                             const Tolerances& tol = Tolerances::standard());

// Largest s >= 0 with char_poly(c)^s dividing P (division up to tolerance).
int quadratic_multiplicity(const RealPoly& P, const ConjugacyClass& c,
                           const Tolerances& tol = Tolerances::standard());

}  // namespace hz
