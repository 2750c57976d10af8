#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperzero/zero_analysis.hpp"

namespace hz {

enum class CamshaftCase {
  Case1,           // f isolated, g nowhere zero on the sphere
  Case2,           // g isolated, f nowhere zero on the sphere
  Case3Spherical,  // both isolated, degenerate branch
  Case3Isolated,   // both isolated, displaced zero
  Case4,           // a spherical factor
  RealCase
};

std::string to_string(CamshaftCase c);

struct SpherePrediction {
  ConjugacyClass cls;
  ZeroRecord predicted;
  CamshaftCase case_tag = CamshaftCase::Case1;
  bool borderline = false;  // Case3 degeneracy test near its cutoff
};

// Remainder of f*g on a non-real sphere from the factor remainders alone:
// w(ad + bc + t ac) + bd - n ac.
Remainder product_remainder(const Remainder& rf, const Remainder& rg,
                            const ConjugacyClass& c);

// Predicted zero of f*g on one sphere, from the factors' records and
// remainders there.  At least one record must be present.
SpherePrediction predict(const ConjugacyClass& c,
                         const std::optional<ZeroRecord>& rec_f,
                         const std::optional<ZeroRecord>& rec_g,
                         const Remainder& rf, const Remainder& rg,
                         const Tolerances& tol = Tolerances::standard());

struct TrialFailure {
  std::uint64_t trial = 0;
  std::string what;
};

struct VerifyReport {
  std::uint64_t trials = 0;
  std::uint64_t passes = 0;
  std::uint64_t borderline = 0;
  std::vector<TrialFailure> failures;
  double worst_normal_residual = 0.0;  // N(f*g) vs N(f)N(g), relative
  double worst_point_error = 0.0;      // predicted vs classified zero
  bool ok() const { return failures.empty(); }
};

// Differential validation: random products with constructed zero structure;
// checks normal-polynomial multiplicativity, the class-union law, and the
// per-sphere predictions against direct classification of f*g.
VerifyReport verify_products(std::uint64_t trials, int max_degree, std::uint64_t seed,
                             const Tolerances& tol = Tolerances::standard());

}  // namespace hz
