#ifndef BERTINI_BRACE_HPP
#define BERTINI_BRACE_HPP

#include "bertini/poly.hpp"

namespace bertini {

// The partial-priming operator {e}_m: for a monomial e of degree n in the
// seven unprimed coefficient variables, the sum over all ways of replacing m
// of its n factors (counted with multiplicity) by their primed partners,
// extended linearly.  u2, u3 are inert: never primed, not counted toward n.
// Input must be free of primed coefficient variables and of y/t variables.
PolyQ brace(const PolyQ& p, unsigned m);

}  // namespace bertini

#endif
