#pragma once

#include <string>

#include "mixres/mixed_poly.hpp"

namespace mixres {

// Grammar (whitespace insignificant, multiplication always explicit):
//   expr   := ('-')? term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' uint)?
//   base   := 'z'uint | 'zb'uint | 'i' | number | '(' expr ')' | 'conj' '(' expr ')'
//   number := uint ('/' uint)? 'i'?  |  '-' uint ('/' uint)? 'i'?   (sign only where no
//             binary reading exists)
// conj(...) is expanded immediately; the result never stores a conj node.
// Throws SyntaxError (position + expected token) or IndexOutOfRange.
MixedPolynomial parse(const std::string& text, int n);

}  // namespace mixres
