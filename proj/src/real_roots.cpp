#include "hyperzero/real_roots.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>

#include "hyperzero/errors.hpp"

namespace hz {
namespace {

using Cplx = std::complex<double>;

// Horner evaluation of a monic-normalized coefficient vector with derivative.
void eval_with_derivative(const std::vector<Cplx>& a, const Cplx& z, Cplx& p, Cplx& dp) {
  p = a.back();
  dp = 0.0;
  for (std::size_t idx = a.size() - 1; idx-- > 0;) {
    dp = dp * z + p;
    p = p * z + a[idx];
  }
}

double eval_scale(const std::vector<Cplx>& a, double r) {
  double s = 0.0, rp = 1.0;
  const double rr = std::fmax(1.0, r);
  for (const Cplx& c : a) {
    s += std::abs(c) * rp;
    rp *= rr;
  }
  return std::fmax(1.0, s);
}

std::vector<Cplx> companion_eigen_roots(const std::vector<Cplx>& a) {
  const int n = static_cast<int>(a.size()) - 1;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (int row = 1; row < n; ++row) m(row, row - 1) = 1.0;
  for (int row = 0; row < n; ++row) m(row, n - 1) = -a[static_cast<std::size_t>(row)].real();
  Eigen::EigenSolver<Eigen::MatrixXd> solver(m);
  std::vector<Cplx> roots(static_cast<std::size_t>(n));
  for (int idx = 0; idx < n; ++idx)
    roots[static_cast<std::size_t>(idx)] =
        Cplx(solver.eigenvalues()[idx].real(), solver.eigenvalues()[idx].imag());
  return roots;
}

// Aberth-Ehrlich simultaneous iteration on a monic polynomial.
std::vector<Cplx> aberth_roots(const std::vector<Cplx>& a) {
  const std::size_t n = a.size() - 1;
  double cauchy = 0.0;
  for (std::size_t idx = 0; idx < n; ++idx) cauchy = std::fmax(cauchy, std::abs(a[idx]));
  const double r0 = 1.0 + cauchy;

  std::vector<Cplx> z(n);
  for (std::size_t idx = 0; idx < n; ++idx) {
    const double theta = 2.0 * M_PI * static_cast<double>(idx) / static_cast<double>(n) + 0.43;
    const double rad = r0 * (0.6 + 0.45 * static_cast<double>(idx + 1) / static_cast<double>(n));
    z[idx] = Cplx(rad * std::cos(theta), rad * std::sin(theta));
  }

  const int max_sweeps = 400;
  double last_progress_residual = std::numeric_limits<double>::infinity();
  int sweeps_since_progress = 0;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double max_step = 0.0;
    double max_residual = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      Cplx p, dp;
      eval_with_derivative(a, z[k], p, dp);
      max_residual = std::fmax(max_residual, std::abs(p));
      if (std::abs(p) <= 1e-16 * eval_scale(a, std::abs(z[k]))) continue;
      Cplx newton = (dp != Cplx(0.0)) ? p / dp : Cplx(1e-3, 1e-3);
      Cplx repulsion = 0.0;
      for (std::size_t other = 0; other < n; ++other) {
        if (other == k) continue;
        const Cplx d = z[k] - z[other];
        if (std::abs(d) > 1e-300) repulsion += 1.0 / d;
      }
      const Cplx denom = 1.0 - newton * repulsion;
      const Cplx step = (std::abs(denom) > 1e-300) ? newton / denom : newton;
      z[k] -= step;
      max_step = std::fmax(max_step, std::abs(step) / (1.0 + std::abs(z[k])));
    }
    if (max_step < 1e-14) return z;
    if (max_residual < 0.7 * last_progress_residual) {
      last_progress_residual = max_residual;
      sweeps_since_progress = 0;
    } else if (++sweeps_since_progress >= 50) {
      return companion_eigen_roots(a);  // stalled
    }
  }
  return companion_eigen_roots(a);
}

// Plain Newton polish of a single root estimate: quadratic for simple
// roots, still contracting for members of a tight multiple-root cluster.
// Stops at the evaluation noise floor or when the residual stops falling.
Cplx polish_root(const std::vector<Cplx>& a, Cplx z) {
  Cplx p, dp;
  eval_with_derivative(a, z, p, dp);
  for (int it = 0; it < 60; ++it) {
    if (std::abs(p) <= 1e2 * 1e-16 * eval_scale(a, std::abs(z))) break;
    if (std::abs(dp) < 1e-300) break;
    const Cplx candidate = z - p / dp;
    Cplx pc, dpc;
    eval_with_derivative(a, candidate, pc, dpc);
    if (std::abs(pc) >= std::abs(p)) break;
    z = candidate;
    p = pc;
    dp = dpc;
  }
  return z;
}

}  // namespace

std::vector<ComplexRoot> complex_roots(const RealPoly& P, const Tolerances& tol) {
  if (P.degree() < 1) throw DegreeZero("complex_roots needs degree >= 1");

  const double lead = P.leading();
  std::vector<Cplx> a(P.coeffs().size());
  for (std::size_t idx = 0; idx < a.size(); ++idx) a[idx] = P.coeff(idx) / lead;

  std::vector<Cplx> raw = aberth_roots(a);
  // Polish every estimate individually before clustering: members of a
  // perturbed multiple root contract toward each other, genuinely close
  // simple roots sharpen and stay apart.
  for (Cplx& z : raw) z = polish_root(a, z);

  // Cluster roots closer than delta = sqrt(tol_root) * scale; the cluster
  // size is the multiplicity and its mean the refined root (the symmetric
  // spread of a perturbed multiple root cancels to first order).
  const double delta = std::sqrt(tol.root);
  std::vector<int> cluster(raw.size(), -1);
  std::vector<ComplexRoot> out;
  for (std::size_t idx = 0; idx < raw.size(); ++idx) {
    if (cluster[idx] >= 0) continue;
    Cplx sum = raw[idx];
    int count = 1;
    cluster[idx] = static_cast<int>(out.size());
    for (std::size_t other = idx + 1; other < raw.size(); ++other) {
      if (cluster[other] >= 0) continue;
      const double sep = std::abs(raw[idx] - raw[other]);
      if (sep <= delta * std::fmax(1.0, std::abs(raw[idx]))) {
        cluster[other] = cluster[idx];
        sum += raw[other];
        ++count;
      }
    }
    Cplx center = sum / static_cast<double>(count);
    if (std::fabs(center.imag()) <= delta * std::fmax(1.0, std::abs(center)))
      center = Cplx(center.real(), 0.0);

    // A few multiplicity-accelerated Newton steps, only while the residual
    // sits above the evaluation noise floor.
    for (int it = 0; it < 30; ++it) {
      Cplx p, dp;
      eval_with_derivative(a, center, p, dp);
      if (std::abs(p) <= 1e3 * 1e-16 * eval_scale(a, std::abs(center))) break;
      if (std::abs(dp) < 1e-300) break;
      const Cplx step = static_cast<double>(count) * p / dp;
      Cplx candidate = center - step;
      Cplx pc, dpc;
      eval_with_derivative(a, candidate, pc, dpc);
      if (std::abs(pc) >= std::abs(p)) break;
      center = candidate;
      if (std::fabs(center.imag()) <= delta * std::fmax(1.0, std::abs(center)))
        center = Cplx(center.real(), 0.0);
    }
    out.push_back({center, count});
  }

  // Refinement can pull the halves of a split multiple root back together;
  // merge clusters until stable, weighting centers by multiplicity.  A real
  // polynomial cannot have an off-axis root without its mirror, so when one
  // half of a near-real pair snapped to the axis and the other did not,
  // snap the widowed half too and retry the merge.
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t idx = 0; idx < out.size() && !changed; ++idx) {
      for (std::size_t other = idx + 1; other < out.size(); ++other) {
        if (std::abs(out[idx].z - out[other].z) >
            delta * std::fmax(1.0, std::abs(out[idx].z)))
          continue;
        const double wa = out[idx].multiplicity, wb = out[other].multiplicity;
        Cplx center = (out[idx].z * wa + out[other].z * wb) / (wa + wb);
        if (std::fabs(center.imag()) <= delta * std::fmax(1.0, std::abs(center)))
          center = Cplx(center.real(), 0.0);
        out[idx] = {center, out[idx].multiplicity + out[other].multiplicity};
        out.erase(out.begin() + static_cast<std::ptrdiff_t>(other));
        changed = true;
        break;
      }
    }
    if (changed) continue;
    for (ComplexRoot& root : out) {
      // Only roots hugging the axis can be widows: a split multiple pair
      // further out has a genuine mirror, merely displaced by the split.
      if (root.z.imag() == 0.0 ||
          std::fabs(root.z.imag()) >
              50.0 * delta * std::fmax(1.0, std::abs(root.z)))
        continue;
      bool mirrored = false;
      for (const ComplexRoot& other : out)
        if (std::abs(std::conj(other.z) - root.z) <=
            delta * std::fmax(1.0, std::abs(root.z))) {
          mirrored = true;
          break;
        }
      if (!mirrored) {
        root.z = Cplx(root.z.real(), 0.0);
        changed = true;
      }
    }
  }

  // Enforce conjugation closure: pair each positive-imaginary cluster with
  // its mirror and average the two estimates.
  for (std::size_t idx = 0; idx < out.size(); ++idx) {
    if (out[idx].z.imag() <= 0.0) continue;
    for (std::size_t other = 0; other < out.size(); ++other) {
      if (out[other].z.imag() >= 0.0) continue;
      if (std::abs(std::conj(out[other].z) - out[idx].z) <=
          delta * std::fmax(1.0, std::abs(out[idx].z)) &&
          out[other].multiplicity == out[idx].multiplicity) {
        const Cplx avg = (out[idx].z + std::conj(out[other].z)) / 2.0;
        out[idx].z = avg;
        out[other].z = std::conj(avg);
        break;
      }
    }
  }

  std::sort(out.begin(), out.end(), [](const ComplexRoot& a, const ComplexRoot& b) {
    if (a.z.real() != b.z.real()) return a.z.real() < b.z.real();
    return a.z.imag() < b.z.imag();
  });

  int total = 0;
  for (const ComplexRoot& root : out) total += root.multiplicity;
  if (total != P.degree())
    throw NoZeroFound("root clustering lost multiplicity: " + std::to_string(total) +
                      " of " + std::to_string(P.degree()));
  return out;
}

ClassSpectrum class_spectrum(const RealPoly& P, const Tolerances& tol) {
  const std::vector<ComplexRoot> roots = complex_roots(P, tol);
  // Classes recovered from clustered roots carry cluster-radius noise, so
  // merging must happen at that scale, not at the sharp class tolerance.
  Tolerances merge_tol = tol;
  merge_tol.cls = std::fmax(tol.cls, std::sqrt(tol.root));
  ClassSpectrum spectrum;
  // Two passes so on-axis and upper roots carry the entries; mirrors in the
  // lower half plane then add only to the root counts.  Every root of P
  // contributes its multiplicity to exactly one root_count, so the counts
  // always sum to deg P even when clustering breaks pair symmetry.
  for (const bool mirrors : {false, true}) {
    for (const ComplexRoot& root : roots) {
      if ((root.z.imag() < 0.0) != mirrors) continue;
      ConjugacyClass c{2.0 * root.z.real(), std::norm(root.z)};
      if (root.z.imag() == 0.0) c.n = c.t * c.t / 4.0;
      bool merged = false;
      for (ClassSpectrum::Entry& entry : spectrum.entries) {
        if (same_class(entry.cls, c, merge_tol)) {
          if (!mirrors) entry.multiplicity += root.multiplicity;
          entry.root_count += root.multiplicity;
          merged = true;
          break;
        }
      }
      if (!merged)
        spectrum.entries.push_back({c, root.multiplicity, root.multiplicity});
    }
  }
  std::sort(spectrum.entries.begin(), spectrum.entries.end(),
            [](const ClassSpectrum::Entry& a, const ClassSpectrum::Entry& b) {
              if (a.cls.t != b.cls.t) return a.cls.t < b.cls.t;
              return a.cls.n < b.cls.n;
            });
  return spectrum;
}

int quadratic_multiplicity(const RealPoly& P, const ConjugacyClass& c,
                           const Tolerances& tol) {
  const RealPoly divisor = char_poly(c);
  // Division by a class known only to clustering accuracy leaves a remainder
  // of that same order, so the divisibility cutoff matches the cluster
  // radius sqrt(tol_root).
  const double cutoff = std::sqrt(tol.root);
  RealPoly current = P;
  int s = 0;
  while (current.degree() >= 2) {
    auto [quotient, remainder] = real_div_rem(current, divisor);
    const double scale = std::fmax(1.0, current.max_abs_coeff());
    if (remainder.max_abs_coeff() > cutoff * scale) break;
    current = quotient;
    ++s;
  }
  return s;
}

}  // namespace hz
