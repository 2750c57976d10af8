#pragma once

#include <utility>
#include <vector>

#include "hyperzero/tolerances.hpp"

namespace hz {

// Real-coefficient polynomial, lowest degree first.  Houses normal
// polynomials N(f) and characteristic polynomials.
class RealPoly {
public:
  RealPoly() = default;
  explicit RealPoly(std::vector<double> coeffs) : c_(std::move(coeffs)) { trim(); }

  static RealPoly zero() { return RealPoly(); }
  static RealPoly one() { return RealPoly({1.0}); }
  // w^n
  static RealPoly monomial(std::size_t n, double coeff = 1.0);

  const std::vector<double>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  // Degree of the zero polynomial is reported as -1.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  double leading() const { return c_.empty() ? 0.0 : c_.back(); }
  double coeff(std::size_t idx) const { return idx < c_.size() ? c_[idx] : 0.0; }
  double max_abs_coeff() const;

  double evaluate(double x) const;

  RealPoly operator+(const RealPoly& rhs) const;
  RealPoly operator-(const RealPoly& rhs) const;
  RealPoly operator*(const RealPoly& rhs) const;
  RealPoly operator*(double s) const;

  // Drop trailing coefficients below threshold (absolute).
  RealPoly trimmed(double threshold) const;

private:
  void trim();  // removes exact trailing zeros only
  std::vector<double> c_;
};

// Euclidean division P = D*Q + R with deg R < deg D.
std::pair<RealPoly, RealPoly> real_div_rem(const RealPoly& P, const RealPoly& D);

}  // namespace hz
