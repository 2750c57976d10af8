#pragma once

#include <string>

#include "hyperzero/oct_poly.hpp"
#include "hyperzero/octonion.hpp"
#include "hyperzero/real_poly.hpp"

namespace hz {

// 6 significant digits; values within tol.abs of a dyadic rational with
// denominator <= 64 are printed as fractions ("1/2", "-3/4").
std::string format_real(double v, const Tolerances& tol = Tolerances::standard());

std::string format_octonion(const Octonion& x,
                            const Tolerances& tol = Tolerances::standard());

// Round-trips through parse_poly.
std::string format_poly(const OctPoly& f,
                        const Tolerances& tol = Tolerances::standard());
std::string format_poly(const RealPoly& f,
                        const Tolerances& tol = Tolerances::standard());

}  // namespace hz
