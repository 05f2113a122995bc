#pragma once

// Text format for bound quiver presentations:
//
//   quiver A132 {
//     vertex 0; vertex 1;
//     loop e0 at 0; loop e1 at 1;
//     arrow a1 : 1 -> 0;
//     rel e0^3; rel e1^3;
//     rel e0^2*a1 + e0*a1*e1 + a1*e1^2;
//     bound 6;
//   }
//
// `x*y` is the path "y, then x". Coefficients are integers or p/q, written
// before the first factor: `rel 2*e0*a1 - 1/2*a1*e1;`. `bound` is optional
// and fixes the truncation bound. `#` starts a comment.

#include <string>
#include <string_view>

#include "qvl/presentation.hpp"

namespace qvl {

/// Throws ParseError (with line and column) on malformed text and
/// SemanticError on unknown names, bad relations or an invalid bound.
PresentationPtr parse_quiver_spec(std::string_view text);

/// Canonical text: vertices, loops, other arrows in quiver order, then
/// relations, then `bound` if it was given explicitly.
std::string print_quiver_spec(const BoundQuiverPresentation& pres);

}  // namespace qvl
