#include "hyperzero/real_poly.hpp"

#include <cmath>

#include "hyperzero/errors.hpp"

namespace hz {

RealPoly RealPoly::monomial(std::size_t n, double coeff) {
  std::vector<double> c(n + 1, 0.0);
  c[n] = coeff;
  return RealPoly(std::move(c));
}

double RealPoly::max_abs_coeff() const {
  double m = 0.0;
  for (double v : c_) m = std::fmax(m, std::fabs(v));
  return m;
}

double RealPoly::evaluate(double x) const {
  double acc = 0.0;
  for (std::size_t idx = c_.size(); idx-- > 0;) acc = acc * x + c_[idx];
  return acc;
}

RealPoly RealPoly::operator+(const RealPoly& rhs) const {
  std::vector<double> out(std::max(c_.size(), rhs.c_.size()), 0.0);
  for (std::size_t idx = 0; idx < out.size(); ++idx)
    out[idx] = coeff(idx) + rhs.coeff(idx);
  return RealPoly(std::move(out));
}

RealPoly RealPoly::operator-(const RealPoly& rhs) const {
  std::vector<double> out(std::max(c_.size(), rhs.c_.size()), 0.0);
  for (std::size_t idx = 0; idx < out.size(); ++idx)
    out[idx] = coeff(idx) - rhs.coeff(idx);
  return RealPoly(std::move(out));
}

RealPoly RealPoly::operator*(const RealPoly& rhs) const {
  if (c_.empty() || rhs.c_.empty()) return RealPoly();
  std::vector<double> out(c_.size() + rhs.c_.size() - 1, 0.0);
  for (std::size_t a = 0; a < c_.size(); ++a)
    for (std::size_t b = 0; b < rhs.c_.size(); ++b)
      out[a + b] += c_[a] * rhs.c_[b];
  return RealPoly(std::move(out));
}

RealPoly RealPoly::operator*(double s) const {
  std::vector<double> out = c_;
  for (double& v : out) v *= s;
  return RealPoly(std::move(out));
}

RealPoly RealPoly::trimmed(double threshold) const {
  std::vector<double> out = c_;
  while (!out.empty() && std::fabs(out.back()) <= threshold) out.pop_back();
  return RealPoly(std::move(out));
}

void RealPoly::trim() {
  while (!c_.empty() && c_.back() == 0.0) c_.pop_back();
}

std::pair<RealPoly, RealPoly> real_div_rem(const RealPoly& P, const RealPoly& D) {
  if (D.is_zero()) throw DivisionByZeroPoly();
  if (P.degree() < D.degree()) return {RealPoly(), P};
  std::vector<double> rem = P.coeffs();
  const int dd = D.degree();
  const double lead = D.leading();
  std::vector<double> quot(P.coeffs().size() - static_cast<std::size_t>(dd), 0.0);
  for (int idx = static_cast<int>(rem.size()) - 1; idx >= dd; --idx) {
    const double q = rem[static_cast<std::size_t>(idx)] / lead;
    quot[static_cast<std::size_t>(idx - dd)] = q;
    for (int off = 0; off <= dd; ++off)
      rem[static_cast<std::size_t>(idx - dd + off)] -= q * D.coeff(static_cast<std::size_t>(off));
    rem[static_cast<std::size_t>(idx)] = 0.0;  // cancel exactly
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {RealPoly(std::move(quot)), RealPoly(std::move(rem))};
}

}  // namespace hz
