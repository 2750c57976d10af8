#include "hyperzero/zero_analysis.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "hyperzero/errors.hpp"

namespace hz {
namespace {

// Divisibility and on-sphere decisions for classes recovered from root
// clustering can only be sharp to the cluster radius.
double cluster_cutoff(const Tolerances& tol) { return std::sqrt(tol.root); }

int record_multiplicity(const RealPoly& normal_poly, const ConjugacyClass& c,
                        const Tolerances& tol) {
  return quadratic_multiplicity(normal_poly, c, tol);
}

// Classes recovered from the spectrum of N(f) can be off by the s-th root
// of the coefficient noise when the class has multiplicity s; repairs
// search within this window around the nominal class.  Attribution inside
// the window is decided by where Gauss-Newton lands, not by the window
// itself, so the window only guards against runaway repairs.
Tolerances repair_window(const Tolerances& tol) {
  Tolerances w = tol;
  w.cls = std::fmax(tol.cls, 2000.0 * cluster_cutoff(tol));
  return w;
}

// Gauss-Newton refinement of a zero of f inside the closed plane generated
// by p (the real axis for real p).  The zero set meets that plane in
// isolated points, so the restricted 2-variable least-squares problem is
// well posed; each step needs f and its formal derivative at p.
Octonion refine_zero(const OctPoly& f, Octonion p, const Tolerances& tol) {
  Octonion unit = p.imag();
  const bool planar = norm(unit) > 16.0 * tol.abs;
  if (planar) unit = unit * (1.0 / norm(unit));

  double best_residual = norm(evaluate(f, p));
  Octonion best = p;
  for (int it = 0; it < 24; ++it) {
    // du = d f(p)/d(real part), dv = d f(p)/d(radius along unit).
    Octonion value, du, dv;
    Octonion pw(1.0);  // p^{k-1}
    for (std::size_t k = 0; k < f.coeffs().size(); ++k) {
      if (k > 0) {
        du += mul(pw * static_cast<double>(k), f.coeff(k));
        if (planar) dv += mul(mul(pw, unit) * static_cast<double>(k), f.coeff(k));
        pw = mul(pw, p);
      }
      value += mul(pw, f.coeff(k));
    }

    double dot_ru = 0.0, dot_rv = 0.0, guu = 0.0, gvv = 0.0, guv = 0.0;
    for (std::size_t idx = 0; idx < 8; ++idx) {
      dot_ru += value[idx] * du[idx];
      dot_rv += value[idx] * dv[idx];
      guu += du[idx] * du[idx];
      gvv += dv[idx] * dv[idx];
      guv += du[idx] * dv[idx];
    }

    double step_u = 0.0, step_v = 0.0;
    if (planar) {
      const double det = guu * gvv - guv * guv;
      if (std::fabs(det) < 1e-300) break;
      step_u = (gvv * dot_ru - guv * dot_rv) / det;
      step_v = (guu * dot_rv - guv * dot_ru) / det;
    } else {
      if (guu < 1e-300) break;
      step_u = dot_ru / guu;
    }

    p -= Octonion(step_u) + unit * step_v;
    const double residual = norm(evaluate(f, p));
    if (residual < best_residual) {
      best_residual = residual;
      best = p;
    }
    const double size = std::hypot(step_u, step_v);
    if (size <= 1e-15 * (1.0 + norm(p))) break;
  }
  return best;
}

// Unrestricted Gauss-Newton over all eight coordinates, for zeros that do
// not lie in the plane of the starting point -- in particular isolated
// zeros hiding just off the real axis, which the planar refinement cannot
// reach.  Levenberg damping keeps near-singular Jacobians from launching
// the iterate along the zero sphere of a spherical factor.
Octonion refine_zero_full(const OctPoly& f, Octonion p, const Tolerances& tol) {
  (void)tol;
  const std::size_t n = f.coeffs().size();
  double best_residual = norm(evaluate(f, p));
  Octonion best = p;
  double lambda = 0.0;
  for (int it = 0; it < 40; ++it) {
    std::vector<Octonion> pw(n);
    pw[0] = Octonion(1.0);
    for (std::size_t k = 1; k < n; ++k) pw[k] = mul(pw[k - 1], p);
    Octonion value;
    for (std::size_t k = 0; k < n; ++k) value += mul(pw[k], f.coeff(k));

    // Column dir of J: d/d p[dir] of sum p^k a_k, via the product rule on
    // the power p^k = p ... p.
    Eigen::Matrix<double, 8, 8> J;
    for (std::size_t dir = 0; dir < 8; ++dir) {
      const Octonion e = Octonion::basis(dir);
      Octonion col;
      for (std::size_t k = 1; k < n; ++k) {
        Octonion dpk;
        for (std::size_t m = 0; m < k; ++m)
          dpk += mul(mul(pw[m], e), pw[k - 1 - m]);
        col += mul(dpk, f.coeff(k));
      }
      for (std::size_t row = 0; row < 8; ++row)
        J(static_cast<int>(row), static_cast<int>(dir)) = col[row];
    }
    Eigen::Matrix<double, 8, 1> r;
    for (std::size_t row = 0; row < 8; ++row) r(static_cast<int>(row)) = value[row];

    const Eigen::Matrix<double, 8, 8> JtJ = J.transpose() * J;
    const Eigen::Matrix<double, 8, 1> Jtr = J.transpose() * r;
    const double diag_scale = std::fmax(JtJ.trace() / 8.0, 1e-300);
    if (lambda == 0.0) lambda = 1e-12 * diag_scale;

    bool improved = false;
    for (int attempt = 0; attempt < 4; ++attempt) {
      const Eigen::Matrix<double, 8, 1> step =
          (JtJ + lambda * Eigen::Matrix<double, 8, 8>::Identity())
              .ldlt()
              .solve(Jtr);
      Octonion delta;
      for (std::size_t row = 0; row < 8; ++row) delta[row] = step(static_cast<int>(row));
      const Octonion candidate = p - delta;
      const double residual = norm(evaluate(f, candidate));
      if (residual < best_residual) {
        p = candidate;
        best_residual = residual;
        best = candidate;
        lambda = std::fmax(lambda / 10.0, 1e-12 * diag_scale);
        improved = true;
        break;
      }
      lambda *= 100.0;
    }
    if (!improved) break;
  }
  return best;
}

}  // namespace

OctPoly Remainder::as_poly() const {
  if (!linear) return OctPoly::constant(b);
  return OctPoly({b, a});
}

std::pair<OctPoly, Octonion> divide_linear(const OctPoly& f, const Octonion& alpha) {
  if (f.is_zero()) return {OctPoly(), Octonion()};
  const std::size_t n = f.coeffs().size();
  // b_{k-1} = a_k + alpha b_k, r = a_0 + alpha b_0 (= f(alpha)).
  std::vector<Octonion> b(n > 1 ? n - 1 : 0);
  Octonion tail;
  for (std::size_t k = n; k-- > 1;) {
    tail = f.coeffs()[k] + mul(alpha, tail);
    b[k - 1] = tail;
  }
  const Octonion r = f.coeffs()[0] + (b.empty() ? Octonion() : mul(alpha, b[0]));
  std::vector<Octonion> quotient = std::move(b);
  return {OctPoly(std::move(quotient)), r};
}

Remainder remainder_at_representative(const OctPoly& f, const Octonion& alpha,
                                      const Tolerances& tol) {
  if (class_of(alpha, tol).is_real(tol))
    return Remainder::constant(evaluate(f, alpha));
  auto [g, r] = divide_linear(f, alpha);
  const Octonion a = evaluate(g, conj(alpha));
  const Octonion b = r - mul(alpha, a);
  return Remainder::linear_form(a, b);
}

Remainder remainder_at(const OctPoly& f, const ConjugacyClass& c, const Tolerances& tol) {
  return remainder_at_representative(f, representative(c, tol), tol);
}

std::pair<OctPoly, Remainder> divide_class(const OctPoly& f, const ConjugacyClass& c,
                                           const Tolerances& tol) {
  const Octonion alpha = representative(c, tol);
  if (c.is_real(tol)) {
    auto [g, r] = divide_linear(f, alpha);
    return {std::move(g), Remainder::constant(r)};
  }
  auto [g, r] = divide_linear(f, alpha);
  auto [h, s] = divide_linear(g, conj(alpha));
  return {std::move(h), Remainder::linear_form(s, r - mul(alpha, s))};
}

namespace {

// The strict classification pass: trusts the class parameters to within
// the cluster radius.  Real and isolated points are polished on f itself.
std::optional<ZeroRecord> classify_once(const OctPoly& f, const ConjugacyClass& c,
                                        const Tolerances& tol) {
  const Octonion alpha = representative(c, tol);
  const double scale = evaluation_scale(f, alpha);
  const double cutoff = cluster_cutoff(tol) * scale;

  if (c.is_real(tol)) {
    // Zeros whose class hugs the real axis -- isolated points just off it,
    // or spheres of tiny radius -- also present a real class.  The
    // axis-bound refinement cannot reach them, so always follow with the
    // full refinement and let the landed class decide.
    Octonion point = refine_zero(f, alpha, tol);
    const Octonion full = refine_zero_full(f, point, tol);
    if (norm(evaluate(f, full)) < norm(evaluate(f, point))) point = full;
    if (norm(evaluate(f, point)) > cutoff ||
        !same_class(class_of(point, tol), c, repair_window(tol)))
      return std::nullopt;
    const ConjugacyClass found = class_of(point, tol);
    if (!found.is_real(tol)) {
      if (auto rec = classify_once(f, found, tol)) return rec;
      ZeroRecord off_axis{found, ZeroKind::Isolated, point, 1};
      off_axis.multiplicity =
          std::max(1, record_multiplicity(normal(f, tol), found, tol));
      return off_axis;
    }
    ZeroRecord rec{found, ZeroKind::Real, point, 1};
    rec.multiplicity = std::max(1, record_multiplicity(normal(f, tol), rec.cls, tol));
    return rec;
  }

  const Remainder rem = remainder_at(f, c, tol);
  if (norm(rem.a) <= cutoff && norm(rem.b) <= cutoff) {
    // Real zeros at t/2 +- r also drive the remainder below the cutoff, so
    // a small-radius "sphere" needs disambiguation on f itself: a genuine
    // real zero reaches the evaluation noise floor, a sphere of radius r
    // leaves a residual of order r^2 on the axis.
    const double disc = c.n - c.t * c.t / 4.0;
    const double radius = std::sqrt(std::fabs(disc));
    if (radius <= 0.1) {
      const double floor = 1e-11 * scale;
      // Both candidate zeros may be genuine; attribute this class to the
      // nearer one so split halves spread evenly over close real zeros.
      Octonion best_point;
      double best_res = -1.0, best_dist = 0.0;
      for (const double side : {-1.0, 0.0, 1.0}) {
        const Octonion x = refine_zero(f, Octonion(c.t / 2.0 + side * radius), tol);
        const double res = norm(evaluate(f, x));
        const double dist = std::fabs(x[0] - c.t / 2.0);
        const bool hit = res <= floor, best_hit = best_res >= 0.0 && best_res <= floor;
        if (best_res < 0.0 || (hit && !best_hit) ||
            (hit == best_hit && (hit ? dist < best_dist : res < best_res))) {
          best_res = res;
          best_dist = dist;
          best_point = x;
        }
      }
      if (best_res <= floor) {
        const ConjugacyClass found = class_of(best_point, tol);
        ZeroRecord rec{found, ZeroKind::Real, best_point, 1};
        rec.multiplicity =
            std::max(1, record_multiplicity(normal(f, tol), found, tol));
        return rec;
      }
    }
    // Land a representative on the sphere of zeros and re-derive the class
    // from it, so the record carries parameters sharper than the spectrum's.
    Octonion point = refine_zero(f, alpha, tol);
    ConjugacyClass sphere = c;
    if (norm(evaluate(f, point)) <= cutoff &&
        same_class(class_of(point, tol), c, repair_window(tol)))
      sphere = class_of(point, tol);
    else
      point = alpha;
    ZeroRecord rec{sphere, ZeroKind::Spherical, point, 2};
    rec.multiplicity = std::max(2, record_multiplicity(normal(f, tol), c, tol));
    return rec;
  }
  if (norm(rem.a) <= cutoff) return std::nullopt;  // wa + b with a ~ 0, b != 0
  Octonion point = -mul(rem.b, inverse(rem.a, tol));
  Tolerances on_sphere = tol;
  on_sphere.cls = std::fmax(tol.cls, cluster_cutoff(tol));
  if (!same_class(class_of(point, tol), c, on_sphere)) return std::nullopt;
  point = refine_zero(f, point, tol);
  if (!same_class(class_of(point, tol), c, on_sphere) ||
      norm(evaluate(f, point)) > cutoff)
    return std::nullopt;
  ZeroRecord rec{class_of(point, tol), ZeroKind::Isolated, point, 1};
  rec.multiplicity = std::max(1, record_multiplicity(normal(f, tol), c, tol));
  return rec;
}

}  // namespace

std::optional<ZeroRecord> classify_at(const OctPoly& f, const ConjugacyClass& c,
                                      const Tolerances& tol) {
  if (auto rec = classify_once(f, c, tol)) return rec;

  // Repair passes.  A multiple class recovered from the spectrum of N(f)
  // carries an error up to the square root of the coefficient noise, which
  // can exceed the strict cutoffs; pull candidates back onto the zero set
  // of f itself and reclassify with accurate parameters.
  const Tolerances window = repair_window(tol);

  // (a) Slide the slice representative onto a nearby zero of f.
  const Octonion landed = refine_zero(f, representative(c, tol), tol);
  if (norm(evaluate(f, landed)) <=
      cluster_cutoff(tol) * evaluation_scale(f, landed)) {
    const ConjugacyClass repaired = class_of(landed, tol);
    if (same_class(repaired, c, window) && !same_class(repaired, c, tol))
      if (auto rec = classify_once(f, repaired, tol)) return rec;
  }

  // (b) An isolated zero whose sphere is off by more than the strict
  // on-sphere tolerance: refine the remainder-derived candidate directly.
  if (!c.is_real(tol)) {
    const Remainder rem = remainder_at(f, c, tol);
    if (norm(rem.a) > 0.0) {
      const Octonion point =
          refine_zero(f, -mul(rem.b, inverse(rem.a, tol)), tol);
      const ConjugacyClass repaired = class_of(point, tol);
      if (norm(evaluate(f, point)) <=
              cluster_cutoff(tol) * evaluation_scale(f, point) &&
          same_class(repaired, c, window)) {
        ZeroRecord rec{repaired, ZeroKind::Isolated, point, 1};
        rec.multiplicity =
            std::max(1, record_multiplicity(normal(f, tol), repaired, tol));
        return rec;
      }
    }
  }
  return std::nullopt;
}

std::vector<ZeroRecord> zero_set(const OctPoly& f, const Tolerances& tol) {
  if (f.degree() < 1)
    throw DegreeZero("zero_set requires a polynomial of degree >= 1");
  const RealPoly nf = normal(f, tol);
  const ClassSpectrum spectrum = class_spectrum(nf, tol);

  std::vector<ZeroRecord> records;
  for (const ClassSpectrum::Entry& entry : spectrum.entries) {
    std::optional<ZeroRecord> rec = classify_at(f, entry.cls, tol);
    if (!rec)
      throw ClassificationMismatch(
          "class (" + std::to_string(entry.cls.t) + ", " + std::to_string(entry.cls.n) +
          ") divides N(f) but classified empty");
    // Count roots of N(f) carried by the entry; a zero of multiplicity s
    // accounts for 2s of them whether real or not, so s falls out uniformly
    // at the end.
    rec->multiplicity = entry.root_count;

    // A multiple class split into two spectrum entries by coefficient noise
    // repairs onto the same refined zero of f, so the records agree far
    // below the spectrum's own resolution; merge only at that tight scale,
    // leaving genuinely close-but-distinct classes separate.
    Tolerances merge_tol = tol;
    merge_tol.cls = std::fmax(tol.cls, 10.0 * cluster_cutoff(tol));
    bool merged = false;
    for (ZeroRecord& existing : records) {
      if (!same_class(existing.cls, rec->cls, merge_tol)) continue;
      existing.multiplicity += rec->multiplicity;
      if (rec->kind == ZeroKind::Spherical) existing.kind = ZeroKind::Spherical;
      merged = true;
      break;
    }
    if (!merged) records.push_back(*rec);
  }

  // Every genuine zero consumes an even number of roots of N(f), so two
  // neighbouring records with odd counts mark one split half attributed to
  // the wrong side of a close pair; shift a unit from the larger count to
  // the smaller to restore parity.
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (records[i].multiplicity % 2 == 0) continue;
    for (std::size_t j = i + 1; j < records.size(); ++j) {
      if (records[j].multiplicity % 2 == 0 ||
          !same_class(records[i].cls, records[j].cls, repair_window(tol)))
        continue;
      if (records[i].multiplicity >= records[j].multiplicity) {
        --records[i].multiplicity;
        ++records[j].multiplicity;
      } else {
        ++records[i].multiplicity;
        --records[j].multiplicity;
      }
      break;
    }
  }
  std::erase_if(records,
                [](const ZeroRecord& rec) { return rec.multiplicity == 0; });

  for (ZeroRecord& rec : records) {
    rec.multiplicity = (rec.multiplicity + 1) / 2;
    if (rec.kind == ZeroKind::Spherical && rec.multiplicity < 2)
      rec.multiplicity = 2;
  }
  return records;
}

FtaSummary verify_fta(const OctPoly& f, const Tolerances& tol) {
  FtaSummary summary;
  summary.degree = f.degree();
  summary.records = zero_set(f, tol);
  for (const ZeroRecord& rec : summary.records) {
    summary.total_multiplicity += rec.multiplicity;
    switch (rec.kind) {
      case ZeroKind::Real: ++summary.real_count; break;
      case ZeroKind::Isolated: ++summary.isolated_count; break;
      case ZeroKind::Spherical: ++summary.spherical_count; break;
    }
  }
  if (summary.total_multiplicity != summary.degree)
    throw FtaViolation("sum of multiplicities " +
                       std::to_string(summary.total_multiplicity) +
                       " != degree " + std::to_string(summary.degree));
  if (summary.real_count + summary.isolated_count + 2 * summary.spherical_count >
      summary.degree)
    throw FtaViolation("r + i + 2s exceeds the degree");
  return summary;
}

OctPoly Factorization::expand(const Tolerances& tol) const {
  OctPoly acc = OctPoly::constant(constant);
  for (std::size_t idx = factors.size(); idx-- > 0;)
    acc = star_mul(OctPoly::linear(factors[idx]), acc, tol);
  return acc;
}

Factorization factorize(const OctPoly& f, const Tolerances& tol) {
  if (f.degree() < 1) throw DegreeZero("factorize requires degree >= 1");
  Factorization result;
  OctPoly current = f;
  while (current.degree() >= 1) {
    std::vector<ZeroRecord> records = zero_set(current, tol);
    if (records.empty()) throw NoZeroFound("no zero located for a factor step");
    // Deterministic pick: maximal multiplicity, ties by smallest t then n.
    const ZeroRecord* best = &records.front();
    for (const ZeroRecord& rec : records) {
      if (rec.multiplicity > best->multiplicity ||
          (rec.multiplicity == best->multiplicity &&
           (rec.cls.t < best->cls.t ||
            (rec.cls.t == best->cls.t && rec.cls.n < best->cls.n))))
        best = &rec;
    }
    const Octonion alpha = best->point;
    auto [quotient, rem] = divide_linear(current, alpha);
    if (norm(rem) > cluster_cutoff(tol) * evaluation_scale(current, alpha))
      throw NoZeroFound("division remainder too large at a computed zero");
    result.factors.push_back(alpha);
    current = quotient;
  }
  result.constant = current.is_zero() ? Octonion() : current.coeff(0);
  if (result.constant.is_zero(tol))
    throw NoZeroFound("factorization lost the leading constant");
  return result;
}

StructureProfile structure_profile(const OctPoly& f, const Tolerances& tol) {
  StructureProfile profile;
  const double scale = std::fmax(1.0, f.max_coeff_norm());
  auto imag_small = [&](std::size_t idx) {
    return tol.is_zero(norm(f.coeff(idx).imag()), scale);
  };
  bool tail_real_from_1 = true, tail_real_from_2 = true;
  for (std::size_t idx = 1; idx < f.coeffs().size(); ++idx) {
    if (!imag_small(idx)) {
      tail_real_from_1 = false;
      if (idx >= 2) tail_real_from_2 = false;
    }
  }
  const bool a0_real = imag_small(0);
  if (a0_real && tail_real_from_1)
    profile.form = StructureForm::AllReal;
  else if (tail_real_from_1 && !a0_real)
    profile.form = StructureForm::RealPlusNonRealConstant;
  else if (tail_real_from_2)
    profile.form = StructureForm::RealPlusLinearNonReal;

  profile.records = zero_set(f, tol);

  switch (profile.form) {
    case StructureForm::RealPlusNonRealConstant: {
      const Octonion unit = f.coeff(0).imag() * (1.0 / norm(f.coeff(0).imag()));
      for (const ZeroRecord& rec : profile.records) {
        if (rec.kind != ZeroKind::Isolated) profile.prediction_holds = false;
        // Distance from the plane spanned by 1 and Im(a0).
        Octonion residual = rec.point;
        residual[0] = 0.0;
        double along = 0.0;
        for (std::size_t idx = 0; idx < 8; ++idx) along += residual[idx] * unit[idx];
        residual -= unit * along;
        profile.max_plane_residual =
            std::fmax(profile.max_plane_residual, norm(residual));
      }
      if (profile.max_plane_residual > cluster_cutoff(tol) * scale)
        profile.prediction_holds = false;
      break;
    }
    case StructureForm::RealPlusLinearNonReal:
      for (const ZeroRecord& rec : profile.records)
        if (rec.kind == ZeroKind::Spherical) profile.prediction_holds = false;
      break;
    case StructureForm::AllReal:
      for (const ZeroRecord& rec : profile.records)
        if (rec.kind == ZeroKind::Isolated) profile.prediction_holds = false;
      break;
    case StructureForm::General:
      break;
  }
  return profile;
}

}  // namespace hz
