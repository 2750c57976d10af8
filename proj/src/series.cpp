#include "hyperzero/series.hpp"

#include <cmath>

#include "hyperzero/errors.hpp"

namespace hz {

TruncatedSeries::TruncatedSeries(std::vector<Octonion> c, std::size_t ord, double rad)
    : coeffs(std::move(c)), order(ord), radius(rad) {
  if (!(radius > 0.0)) throw RadiusViolation("series radius must be positive");
  coeffs.resize(order + 1);
}

TruncatedSeries TruncatedSeries::from_poly(const OctPoly& f, std::size_t ord) {
  return TruncatedSeries(f.coeffs(), ord);
}

Octonion TruncatedSeries::partial_sum(const Octonion& x) const {
  Octonion acc;
  Octonion xp(1.0);
  for (std::size_t idx = 0; idx <= order; ++idx) {
    acc += mul(xp, coeff(idx));
    xp = mul(xp, x);
  }
  return acc;
}

TruncatedSeries series_star_mul(const TruncatedSeries& f, const TruncatedSeries& g) {
  const std::size_t ord = std::min(f.order, g.order);
  std::vector<Octonion> out(ord + 1);
  for (std::size_t k = 0; k <= ord; ++k)
    for (std::size_t a = 0; a <= k; ++a)
      out[k] += mul(f.coeff(a), g.coeff(k - a));
  return TruncatedSeries(std::move(out), ord, std::fmin(f.radius, g.radius));
}

std::pair<TruncatedSeries, Octonion> series_divide_linear(
    const TruncatedSeries& f, const Octonion& alpha, std::size_t out_order,
    const Tolerances& tol) {
  if (!(norm(alpha) < f.radius))
    throw RadiusViolation("division point lies outside the convergence radius");
  const std::size_t N = std::min(out_order, f.order);

  if (alpha.is_zero(tol)) {
    // f = w (sum_i w^i a_{i+1}) + a_0
    std::vector<Octonion> b(N + 1);
    for (std::size_t idx = 0; idx <= N; ++idx) b[idx] = f.coeff(idx + 1);
    return {TruncatedSeries(std::move(b), N, f.radius), f.coeff(0)};
  }

  // b_n = alpha^{-1-n} (f(alpha) - sum_{j<=n} alpha^j a_j)
  //     = sum_{j=n+1..order} alpha^{j-1-n} a_j,
  // computed by the backward recurrence T_{n-1} = a_n + alpha T_n, T_order = 0.
  std::vector<Octonion> b(f.order + 1);
  Octonion tail;  // T_n
  for (std::size_t n = f.order; n-- > 0;) {
    tail = f.coeff(n + 1) + mul(alpha, tail);
    b[n] = tail;
  }
  b.resize(N + 1);
  const Octonion r = f.coeff(0) + mul(alpha, b.empty() ? Octonion() : b[0]);
  return {TruncatedSeries(std::move(b), N, f.radius), r};
}

TailBoundReport tail_bound_check(const TruncatedSeries& f, const Octonion& alpha,
                                 double x_norm, double rho, const Tolerances& tol) {
  auto [g, r] = series_divide_linear(f, alpha, f.order, tol);
  return tail_bound_check_coeffs(f, g.coeffs, alpha, x_norm, rho);
}

TailBoundReport tail_bound_check_coeffs(const TruncatedSeries& f,
                                        const std::vector<Octonion>& b,
                                        const Octonion& alpha, double x_norm,
                                        double rho) {
  const double na = norm(alpha);
  if (!(na < rho && x_norm < rho && rho < f.radius))
    throw RadiusViolation("need max(|alpha|, |x|) < rho < radius");

  TailBoundReport report;
  report.rho = rho;

  // Smallest n_rho with |a_j| <= rho^-j for every j > n_rho.
  std::size_t n_rho = 0;
  for (std::size_t j = 1; j <= f.order; ++j)
    if (norm(f.coeff(j)) > std::pow(rho, -static_cast<double>(j))) n_rho = j;
  report.n_rho = n_rho;

  for (std::size_t n = n_rho; n < b.size(); ++n) {
    const double lhs = std::pow(x_norm, static_cast<double>(n)) * norm(b[n]);
    const double bound =
        std::pow(x_norm / rho, static_cast<double>(n)) / (rho - na);
    const double ratio = bound > 0.0 ? lhs / bound : (lhs > 0.0 ? 1e300 : 0.0);
    ++report.checked;
    report.max_ratio = std::fmax(report.max_ratio, ratio);
    if (ratio > 1.0 + 1e-12) {
      ++report.violations;
      report.violating.push_back({n, lhs, bound, ratio});
    }
  }
  return report;
}

}  // namespace hz
