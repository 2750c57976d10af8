#include "hyperzero/camshaft.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "hyperzero/errors.hpp"

namespace hz {
namespace {

double case3_cutoff(const Tolerances& tol) { return std::sqrt(tol.root); }

Octonion checked_inverse(const Octonion& denom, double scale, const Tolerances& tol) {
  if (norm(denom) <= tol.abs * std::fmax(1.0, scale))
    throw DegenerateDenominator("camshaft denominator vanished numerically");
  return inverse(denom, tol);
}

}  // namespace

std::string to_string(CamshaftCase c) {
  switch (c) {
    case CamshaftCase::Case1: return "case1-isolated-f";
    case CamshaftCase::Case2: return "case2-isolated-g";
    case CamshaftCase::Case3Spherical: return "case3-spherical";
    case CamshaftCase::Case3Isolated: return "case3-isolated";
    case CamshaftCase::Case4: return "case4-spherical";
    case CamshaftCase::RealCase: return "real";
  }
  return "?";
}

Remainder product_remainder(const Remainder& rf, const Remainder& rg,
                            const ConjugacyClass& c) {
  const Octonion &a = rf.a, &b = rf.b, &cc = rg.a, &d = rg.b;
  const Octonion ac = mul(a, cc);
  return Remainder::linear_form(mul(a, d) + mul(b, cc) + ac * c.t,
                                mul(b, d) - ac * c.n);
}

SpherePrediction predict(const ConjugacyClass& c,
                         const std::optional<ZeroRecord>& rec_f,
                         const std::optional<ZeroRecord>& rec_g,
                         const Remainder& rf, const Remainder& rg,
                         const Tolerances& tol) {
  if (!rec_f && !rec_g)
    throw Error("predict requires a zero of f or of g on the sphere");

  const int s = rec_f ? rec_f->multiplicity : 0;
  const int t = rec_g ? rec_g->multiplicity : 0;
  SpherePrediction pred;
  pred.cls = c;

  if (c.is_real(tol)) {
    pred.case_tag = CamshaftCase::RealCase;
    pred.predicted = {c, ZeroKind::Real, Octonion(c.real_point()), s + t};
    return pred;
  }

  const bool f_spherical = rec_f && rec_f->kind == ZeroKind::Spherical;
  const bool g_spherical = rec_g && rec_g->kind == ZeroKind::Spherical;
  if (f_spherical || g_spherical) {
    pred.case_tag = CamshaftCase::Case4;
    pred.predicted = {c, ZeroKind::Spherical, representative(c, tol), s + t};
    return pred;
  }

  const Octonion &a = rf.a, &b = rf.b, &cc = rg.a, &d = rg.b;
  const Octonion ac = mul(a, cc);

  if (rec_f && !rec_g) {
    // alpha' = ((alpha a)d + n ac)(ad + (conj(alpha) a)c)^{-1}
    const Octonion alpha = rec_f->point;
    const Octonion denom = mul(a, d) + mul(mul(conj(alpha), a), cc);
    const double scale = norm(a) * norm(d) + norm(alpha) * norm(a) * norm(cc);
    const Octonion moved =
        mul(mul(mul(alpha, a), d) + ac * c.n, checked_inverse(denom, scale, tol));
    pred.case_tag = CamshaftCase::Case1;
    pred.predicted = {c, ZeroKind::Isolated, moved, s};
    return pred;
  }

  if (!rec_f && rec_g) {
    // beta' = (b(beta c) + n ac)(bc + a(conj(beta) c))^{-1}
    const Octonion beta = rec_g->point;
    const Octonion denom = mul(b, cc) + mul(a, mul(conj(beta), cc));
    const double scale = norm(b) * norm(cc) + norm(a) * norm(beta) * norm(cc);
    const Octonion moved =
        mul(mul(b, mul(beta, cc)) + ac * c.n, checked_inverse(denom, scale, tol));
    pred.case_tag = CamshaftCase::Case2;
    pred.predicted = {c, ZeroKind::Isolated, moved, t};
    return pred;
  }

  // Both isolated: degenerate to a sphere when a(beta c) = (conj(alpha) a)c.
  const Octonion alpha = rec_f->point;
  const Octonion beta = rec_g->point;
  const Octonion lhs = mul(a, mul(beta, cc));
  const Octonion rhs = mul(mul(conj(alpha), a), cc);
  const double gap = distance(lhs, rhs);
  const double scale = std::fmax(1.0, std::fmax(norm(lhs), norm(rhs)));
  const double cutoff = case3_cutoff(tol) * scale;
  pred.borderline = gap > 0.1 * cutoff && gap < 10.0 * cutoff;
  if (gap <= cutoff) {
    pred.case_tag = CamshaftCase::Case3Spherical;
    pred.predicted = {c, ZeroKind::Spherical, representative(c, tol), s + t};
    return pred;
  }
  const Octonion gamma = mul(ac * c.n - mul(mul(alpha, a), mul(beta, cc)),
                             checked_inverse(rhs - lhs, scale, tol));
  pred.case_tag = CamshaftCase::Case3Isolated;
  pred.predicted = {c, ZeroKind::Isolated, gamma, s + t};
  return pred;
}

namespace {

struct Generator {
  std::mt19937_64 rng;
  std::uniform_real_distribution<double> unit{-1.0, 1.0};

  explicit Generator(std::uint64_t seed) : rng(seed) {}

  double real() { return unit(rng); }

  Octonion octonion() {
    Octonion x;
    for (std::size_t idx = 0; idx < 8; ++idx) x[idx] = unit(rng);
    return x;
  }

  Octonion imaginary_unit() {
    Octonion x = octonion().imag();
    while (norm(x) < 1e-3) x = octonion().imag();
    return x * (1.0 / norm(x));
  }

  // A non-real point with coordinates of order one.
  Octonion nonreal_point() {
    return Octonion(real()) + imaginary_unit() * (0.3 + 0.7 * std::fabs(real()));
  }

  // Right-nested product of linear factors and real quadratics, of the
  // requested degree; mixes real, isolated and spherical zero structure.
  OctPoly structured_poly(int degree, const Tolerances& tol) {
    OctPoly acc = OctPoly::constant(rng() % 4 == 0 ? octonion() : Octonion(1.0));
    while (acc.is_zero()) acc = OctPoly::constant(octonion());
    int budget = degree;
    while (budget > 0) {
      const unsigned pick = rng() % 8;
      if (pick < 2 && budget >= 2) {
        acc = star_mul(OctPoly::from_real(char_poly(class_of(nonreal_point(), tol))),
                       acc, tol);
        budget -= 2;
      } else if (pick < 4) {
        acc = star_mul(OctPoly::linear(Octonion(real())), acc, tol);
        budget -= 1;
      } else {
        acc = star_mul(OctPoly::linear(nonreal_point()), acc, tol);
        budget -= 1;
      }
    }
    return acc;
  }
};

const ZeroRecord* find_class(const std::vector<ZeroRecord>& records,
                             const ConjugacyClass& c, const Tolerances& loose) {
  for (const ZeroRecord& rec : records)
    if (same_class(rec.cls, c, loose)) return &rec;
  return nullptr;
}

double normal_mismatch(const OctPoly& f, const OctPoly& g, const OctPoly& fg,
                       const Tolerances& tol) {
  const RealPoly lhs = normal(fg, tol);
  const RealPoly rhs = normal(f, tol) * normal(g, tol);
  const double scale = std::fmax(1.0, std::fmax(lhs.max_abs_coeff(), rhs.max_abs_coeff()));
  double worst = 0.0;
  const std::size_t n = std::max(lhs.coeffs().size(), rhs.coeffs().size());
  for (std::size_t idx = 0; idx < n; ++idx)
    worst = std::fmax(worst, std::fabs(lhs.coeff(idx) - rhs.coeff(idx)) / scale);
  return worst;
}

}  // namespace

VerifyReport verify_products(std::uint64_t trials, int max_degree, std::uint64_t seed,
                             const Tolerances& tol) {
  Generator gen(seed);
  Tolerances loose = tol;
  loose.cls = std::fmax(tol.cls, std::sqrt(tol.root) * 10.0);
  VerifyReport report;
  report.trials = trials;

  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    std::ostringstream why;
    bool failed = false;
    bool saw_borderline = false;
    try {
      const int df = 1 + static_cast<int>(gen.rng() % static_cast<unsigned>(std::max(1, max_degree / 2)));
      const int dg = 1 + static_cast<int>(gen.rng() % static_cast<unsigned>(std::max(1, max_degree / 2)));
      const OctPoly f = gen.structured_poly(df, tol);
      const OctPoly g = gen.structured_poly(dg, tol);
      const OctPoly fg = star_mul(f, g, tol);

      const double nerr = normal_mismatch(f, g, fg, tol);
      report.worst_normal_residual = std::fmax(report.worst_normal_residual, nerr);
      if (nerr > 1e-8) {
        failed = true;
        why << "normal multiplicativity residual " << nerr << "; ";
      }

      const std::vector<ZeroRecord> zf = zero_set(f, tol);
      const std::vector<ZeroRecord> zg = zero_set(g, tol);
      const std::vector<ZeroRecord> zp = zero_set(fg, tol);

      // Union law, both inclusions.
      for (const ZeroRecord& rec : zf)
        if (!find_class(zp, rec.cls, loose)) {
          failed = true;
          why << "class of f missing from f*g; ";
        }
      for (const ZeroRecord& rec : zg)
        if (!find_class(zp, rec.cls, loose)) {
          failed = true;
          why << "class of g missing from f*g; ";
        }

      for (const ZeroRecord& direct : zp) {
        const ZeroRecord* rf_rec = find_class(zf, direct.cls, loose);
        const ZeroRecord* rg_rec = find_class(zg, direct.cls, loose);
        if (!rf_rec && !rg_rec) {
          failed = true;
          why << "class of f*g not in the union; ";
          continue;
        }
        const Remainder rf = remainder_at(f, direct.cls, tol);
        const Remainder rg = remainder_at(g, direct.cls, tol);
        const SpherePrediction pred =
            predict(direct.cls,
                    rf_rec ? std::optional<ZeroRecord>(*rf_rec) : std::nullopt,
                    rg_rec ? std::optional<ZeroRecord>(*rg_rec) : std::nullopt,
                    rf, rg, tol);
        if (pred.borderline) {
          saw_borderline = true;
          continue;
        }
        if (pred.predicted.kind != direct.kind) {
          failed = true;
          why << "kind mismatch (" << to_string(pred.case_tag) << "); ";
          continue;
        }
        if (pred.predicted.multiplicity != direct.multiplicity) {
          failed = true;
          why << "multiplicity mismatch (" << to_string(pred.case_tag) << ") "
              << pred.predicted.multiplicity << " vs " << direct.multiplicity << "; ";
        }
        if (direct.kind != ZeroKind::Spherical) {
          const double err = distance(pred.predicted.point, direct.point) /
                             std::fmax(1.0, norm(direct.point));
          report.worst_point_error = std::fmax(report.worst_point_error, err);
          if (err > 1e-7) {
            failed = true;
            why << "point error " << err << " (" << to_string(pred.case_tag) << "); ";
          }
        }
      }
    } catch (const Error& err) {
      failed = true;
      why << "exception: " << err.what();
    }

    if (saw_borderline) ++report.borderline;
    if (failed)
      report.failures.push_back({trial, why.str()});
    else
      ++report.passes;
  }
  return report;
}

}  // namespace hz
