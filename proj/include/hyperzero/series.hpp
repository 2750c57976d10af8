#pragma once

#include <limits>
#include <utility>
#include <vector>

#include "hyperzero/oct_poly.hpp"
#include "hyperzero/octonion.hpp"

namespace hz {

// Power series truncated at a fixed order, with a declared convergence
// radius.  Coefficients beyond the order are unknown, not zero.
struct TruncatedSeries {
  std::vector<Octonion> coeffs;  // a_0 .. a_order
  std::size_t order = 0;
  double radius = std::numeric_limits<double>::infinity();

  TruncatedSeries() = default;
  TruncatedSeries(std::vector<Octonion> c, std::size_t ord,
                  double rad = std::numeric_limits<double>::infinity());

  static TruncatedSeries from_poly(const OctPoly& f, std::size_t ord);

  Octonion coeff(std::size_t idx) const {
    return idx < coeffs.size() ? coeffs[idx] : Octonion();
  }
  // Order-N partial sum at x.
  Octonion partial_sum(const Octonion& x) const;
};

// Cauchy product truncated to the smaller order.
TruncatedSeries series_star_mul(const TruncatedSeries& f, const TruncatedSeries& g);

// Quotient and remainder of f by (w - alpha): f = (w - alpha) * g + r with
// r = f(alpha).  For truncated input, f(alpha) is the partial sum of the
// input order; the induced error in b_n is O(|alpha/R|^{order+1-n}) and is
// not compensated.  The output is truncated at order out_order (defaults to
// the input order).
std::pair<TruncatedSeries, Octonion> series_divide_linear(
    const TruncatedSeries& f, const Octonion& alpha,
    std::size_t out_order = std::numeric_limits<std::size_t>::max(),
    const Tolerances& tol = Tolerances::standard());

struct TailBoundEntry {
  std::size_t n;
  double lhs;    // |x|^n |b_n|
  double bound;  // (|x|/rho)^n / (rho - |alpha|)
  double ratio;  // lhs / bound
};

struct TailBoundReport {
  double rho = 0.0;
  std::size_t n_rho = 0;  // |a_j| <= rho^-j holds for every j > n_rho
  std::size_t checked = 0;
  std::size_t violations = 0;
  double max_ratio = 0.0;
  std::vector<TailBoundEntry> violating;
  bool ok() const { return violations == 0; }
};

// Checks the growth bound |x^n b_n| <= (|x|/rho)^n / (rho - |alpha|) on the
// quotient coefficients, for n >= n_rho, at the given rho (which must
// satisfy max(|alpha|, x_norm) < rho < radius).
TailBoundReport tail_bound_check(const TruncatedSeries& f, const Octonion& alpha,
                                 double x_norm, double rho,
                                 const Tolerances& tol = Tolerances::standard());

// Same check on externally supplied quotient coefficients (used to probe
// deliberately corrupted data).
TailBoundReport tail_bound_check_coeffs(const TruncatedSeries& f,
                                        const std::vector<Octonion>& b,
                                        const Octonion& alpha, double x_norm,
                                        double rho);

}  // namespace hz
