#pragma once

namespace hz {

// Floating-point comparison policy.  Every predicate of the form "x = 0" or
// "alpha is real" goes through one of these thresholds; all of them are
// adjustable from the CLI.
struct Tolerances {
  double abs = 1e-9;         // absolute cutoff for "equals zero"
  double rel = 1e-9;         // relative cutoff, scaled by the larger operand
  double root = 1e-10;       // root residual threshold for the real solver
  double cls = 1e-8;         // conjugacy-class merge / is-real threshold

  static const Tolerances& standard() {
    static const Tolerances t{};
    return t;
  }

  // |v| small against a context scale.
  bool is_zero(double v, double scale = 1.0) const {
    double s = scale < 0 ? -scale : scale;
    return (v < 0 ? -v : v) <= abs + rel * s;
  }
};

}  // namespace hz
