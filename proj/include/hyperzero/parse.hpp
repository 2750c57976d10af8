#pragma once

#include <string>

#include "hyperzero/oct_poly.hpp"
#include "hyperzero/octonion.hpp"

namespace hz {

// Polynomial expressions over the variable w and the basis tokens
// {1, i, j, ij, k, ik, jk, ijk}:
//
//   expr   := ['+'|'-'] prod { ('+'|'-') prod }
//   prod   := factor { '*' factor | '/' constant | factor }   (juxtaposition = star)
//   factor := number | basisToken | 'w' ['^' uint] | '(' expr ')'
//
// Examples: "w^2 + w*i + j",  "(w - i)*(w - j)",  "w - (0.5 + 0.866i)".
OctPoly parse_poly(const std::string& text,
                   const Tolerances& tol = Tolerances::standard());

// A constant expression; rejects anything containing w.
Octonion parse_octonion(const std::string& text,
                        const Tolerances& tol = Tolerances::standard());

}  // namespace hz
