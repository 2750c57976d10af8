#include <doctest.h>

#include "hyperzero/series.hpp"
#include "hyperzero/zero_analysis.hpp"
#include "support.hpp"

using namespace hz;
using namespace hz::test;

namespace {

TruncatedSeries geometric(std::size_t order) {
  std::vector<Octonion> c(order + 1, Octonion(1.0));
  return TruncatedSeries(std::move(c), order, 1.0);
}

}  // namespace

TEST_CASE("series star product") {
  const TruncatedSeries geo = geometric(32);
  std::vector<Octonion> lin(33);
  lin[0] = Octonion(1.0);
  lin[1] = Octonion(-1.0);
  const TruncatedSeries one = series_star_mul(geo, TruncatedSeries(std::move(lin), 32, 1e9));
  CHECK(distance(one.coeff(0), Octonion(1.0)) == doctest::Approx(0.0));
  for (std::size_t idx = 1; idx <= 32; ++idx) CHECK(norm(one.coeff(idx)) < 1e-14);

  const OctPoly f = rand_poly(4), g = rand_poly(5);
  const TruncatedSeries sprod = series_star_mul(TruncatedSeries::from_poly(f, 16),
                                                TruncatedSeries::from_poly(g, 16));
  const OctPoly pprod = star_mul(f, g);
  for (std::size_t idx = 0; idx <= 9; ++idx)
    CHECK(distance(sprod.coeff(idx), pprod.coeff(idx)) < 1e-13);

  const TruncatedSeries zero = series_star_mul(geo, TruncatedSeries({}, 32, 1.0));
  for (std::size_t idx = 0; idx <= 32; ++idx) CHECK(norm(zero.coeff(idx)) == 0.0);
}

TEST_CASE("geometric series divided at one half") {
  // With input truncated well beyond the requested order, every quotient
  // coefficient is 2 and the remainder is 2 (the tail sums analytically).
  const TruncatedSeries geo = geometric(128);
  auto [g, r] = series_divide_linear(geo, Octonion(0.5), 64);
  CHECK(distance(r, Octonion(2.0)) < 1e-12);
  for (std::size_t idx = 0; idx <= 64; ++idx)
    CHECK(distance(g.coeff(idx), Octonion(2.0)) < 1e-12);
}

TEST_CASE("division at zero shifts") {
  const OctPoly f = rand_poly(5);
  const TruncatedSeries s = TruncatedSeries::from_poly(f, 8);
  auto [g, r] = series_divide_linear(s, Octonion());
  CHECK(distance(r, f.coeff(0)) == doctest::Approx(0.0));
  for (std::size_t idx = 0; idx + 1 <= 5; ++idx)
    CHECK(distance(g.coeff(idx), f.coeff(idx + 1)) == doctest::Approx(0.0));
}

TEST_CASE("radius is enforced") {
  const TruncatedSeries geo = geometric(16);  // radius 1
  CHECK_THROWS_AS(series_divide_linear(geo, Octonion(1.5)), RadiusViolation);
}

TEST_CASE("series and polynomial division agree") {
  for (int it = 0; it < 20; ++it) {
    const OctPoly f = rand_poly(6);
    const Octonion alpha = rand_oct() * 0.5;
    auto [pg, pr] = divide_linear(f, alpha);
    auto [sg, sr] = series_divide_linear(TruncatedSeries::from_poly(f, 6), alpha);
    CHECK(distance(pr, sr) < 1e-12);
    for (int idx = 0; idx <= pg.degree(); ++idx)
      CHECK(distance(pg.coeff(static_cast<std::size_t>(idx)),
                     sg.coeff(static_cast<std::size_t>(idx))) < 1e-12);
  }
}

TEST_CASE("reconstruction (w - alpha) * g + r = f through order N-1") {
  for (int it = 0; it < 20; ++it) {
    const std::size_t order = 24;
    std::vector<Octonion> c(order + 1);
    for (Octonion& a : c) a = rand_oct();
    const TruncatedSeries f(std::move(c), order, 1e9);
    const Octonion alpha = rand_oct() * 0.3;  // keep |alpha| < 1: no growth
    auto [g, r] = series_divide_linear(f, alpha);

    std::vector<Octonion> lin(order + 1);
    lin[0] = -alpha;
    lin[1] = Octonion(1.0);
    TruncatedSeries back = series_star_mul(TruncatedSeries(std::move(lin), order, 1e9), g);
    back.coeffs[0] += r;
    for (std::size_t idx = 0; idx + 1 <= order; ++idx)
      CHECK(distance(back.coeff(idx), f.coeff(idx)) < 1e-10 * (1.0 + norm(f.coeff(idx))));
  }
}

TEST_CASE("division is deterministic") {
  const TruncatedSeries geo = geometric(48);
  const Octonion alpha = Octonion(0.3) + Octonion::i() * 0.2;
  auto [g1, r1] = series_divide_linear(geo, alpha);
  auto [g2, r2] = series_divide_linear(geo, alpha);
  CHECK(distance(r1, r2) == 0.0);
  for (std::size_t idx = 0; idx <= 48; ++idx)
    CHECK(distance(g1.coeff(idx), g2.coeff(idx)) == 0.0);
}

TEST_CASE("closed coefficient formula matches the recurrence") {
  // b_n = alpha^{-1}(b_{n-1} - a_n) with b_{-1} = f(alpha).
  const std::size_t order = 20;
  std::vector<Octonion> c(order + 1);
  for (Octonion& a : c) a = rand_oct();
  const TruncatedSeries f(std::move(c), order, 1e9);
  const Octonion alpha = Octonion(0.4) + rand_imag_unit() * 0.7;
  auto [g, r] = series_divide_linear(f, alpha);

  const Octonion inv = inverse(alpha);
  Octonion prev = f.partial_sum(alpha);  // b_{-1}
  for (std::size_t n = 0; n <= order; ++n) {
    const Octonion bn = mul(inv, prev - f.coeff(n));
    CHECK(distance(bn, g.coeff(n)) < 1e-9 * (1.0 + norm(bn)));
    prev = bn;
  }
}

TEST_CASE("tail bound holds for the geometric series") {
  const TruncatedSeries geo = geometric(128);
  const TailBoundReport report = tail_bound_check(geo, Octonion(0.5), 0.6, 0.9);
  CHECK(report.ok());
  CHECK(report.max_ratio <= 1.0 + 1e-12);
}

TEST_CASE("tail bound is trivial for polynomials") {
  const OctPoly f = rand_poly(4);
  const TruncatedSeries s = TruncatedSeries::from_poly(f, 32);
  const TailBoundReport report = tail_bound_check(s, rand_oct() * 0.3, 1.5, 4.0);
  CHECK(report.ok());
}

TEST_CASE("tail bound flags corrupted coefficients") {
  const TruncatedSeries geo = geometric(64);
  auto [g, r] = series_divide_linear(geo, Octonion(0.5));
  std::vector<Octonion> corrupted = g.coeffs;
  corrupted[40] = Octonion(1e6);
  const TailBoundReport report =
      tail_bound_check_coeffs(geo, corrupted, Octonion(0.5), 0.6, 0.9);
  CHECK(!report.ok());
  CHECK(report.violations >= 1);
}
