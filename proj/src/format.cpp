#include "hyperzero/format.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>

namespace hz {
namespace {

const char* kBasisNames[8] = {"", "i", "j", "ij", "k", "ik", "jk", "ijk"};

bool dyadic(double v, long& num, long& den, const Tolerances& tol) {
  const double scaled = v * 64.0;
  const double rounded = std::round(scaled);
  if (std::fabs(scaled - rounded) > tol.abs * 64.0) return false;
  if (std::fabs(rounded) > 1e15) return false;
  long n = static_cast<long>(rounded), d = 64;
  const long g = std::gcd(std::labs(n), d);
  num = n / (g == 0 ? 1 : g);
  den = d / (g == 0 ? 1 : g);
  return true;
}

std::string significant(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

// Number of non-negligible coordinates.
int support(const Octonion& x, const Tolerances& tol) {
  int count = 0;
  for (std::size_t idx = 0; idx < 8; ++idx)
    if (std::fabs(x[idx]) > tol.abs) ++count;
  return count;
}

}  // namespace

std::string format_real(double v, const Tolerances& tol) {
  long num = 0, den = 1;
  if (dyadic(v, num, den, tol)) {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
  return significant(v);
}

std::string format_octonion(const Octonion& x, const Tolerances& tol) {
  std::string out;
  for (std::size_t idx = 0; idx < 8; ++idx) {
    const double v = x[idx];
    if (std::fabs(v) <= tol.abs) continue;
    const double mag = std::fabs(v);
    const bool unit_coeff = idx > 0 && std::fabs(mag - 1.0) <= tol.abs;
    std::string body = unit_coeff ? kBasisNames[idx]
                                  : format_real(mag, tol) + kBasisNames[idx];
    if (out.empty())
      out = (v < 0 ? "-" : "") + body;
    else
      out += (v < 0 ? " - " : " + ") + body;
  }
  return out.empty() ? "0" : out;
}

std::string format_poly(const OctPoly& f, const Tolerances& tol) {
  if (f.is_zero()) return "0";
  std::string out;
  for (int deg = f.degree(); deg >= 0; --deg) {
    const Octonion a = f.coeff(static_cast<std::size_t>(deg));
    if (norm(a) <= tol.abs) continue;
    const std::string power =
        deg == 0 ? "" : (deg == 1 ? "w" : "w^" + std::to_string(deg));

    std::string body;
    bool negative = false;
    if (support(a, tol) <= 1) {
      // Scalar or single basis coordinate: pull the sign out front.
      std::size_t idx = 0;
      for (std::size_t probe = 0; probe < 8; ++probe)
        if (std::fabs(a[probe]) > tol.abs) idx = probe;
      const double v = a[idx];
      negative = v < 0;
      const double mag = std::fabs(v);
      const bool unit_coeff = std::fabs(mag - 1.0) <= tol.abs;
      if (deg == 0) {
        body = (idx == 0) ? format_real(mag, tol)
                          : (unit_coeff ? kBasisNames[idx]
                                        : format_real(mag, tol) + kBasisNames[idx]);
      } else if (idx == 0) {
        body = unit_coeff ? power : format_real(mag, tol) + power;
      } else {
        body = power + "*" +
               (unit_coeff ? kBasisNames[idx] : format_real(mag, tol) + kBasisNames[idx]);
      }
    } else {
      const std::string literal = "(" + format_octonion(a, tol) + ")";
      body = deg == 0 ? literal : power + "*" + literal;
    }

    if (out.empty())
      out = (negative ? "-" : "") + body;
    else
      out += (negative ? " - " : " + ") + body;
  }
  return out.empty() ? "0" : out;
}

std::string format_poly(const RealPoly& f, const Tolerances& tol) {
  return format_poly(OctPoly::from_real(f), tol);
}

}  // namespace hz
