#pragma once

#include <random>

#include "hyperzero/oct_poly.hpp"
#include "hyperzero/octonion.hpp"

namespace hz::test {

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(0x5eed5eedULL);
  return engine;
}

inline double rand_real(double lo = -1.0, double hi = 1.0) {
  return std::uniform_real_distribution<double>(lo, hi)(rng());
}

inline Octonion rand_oct() {
  Octonion x;
  for (std::size_t idx = 0; idx < 8; ++idx) x[idx] = rand_real();
  return x;
}

inline Octonion rand_quat() {
  Octonion x;
  for (std::size_t idx = 0; idx < 4; ++idx) x[idx] = rand_real();
  return x;
}

inline Octonion rand_imag_unit() {
  Octonion x = rand_oct().imag();
  while (norm(x) < 1e-3) x = rand_oct().imag();
  return x * (1.0 / norm(x));
}

inline Octonion rand_nonreal() {
  return Octonion(rand_real()) + rand_imag_unit() * rand_real(0.3, 1.2);
}

inline OctPoly rand_poly(int degree) {
  std::vector<Octonion> c(static_cast<std::size_t>(degree) + 1);
  for (Octonion& a : c) a = rand_oct();
  while (norm(c.back()) < 1e-2) c.back() = rand_oct();
  return OctPoly(std::move(c));
}

}  // namespace hz::test
