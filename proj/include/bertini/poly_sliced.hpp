#ifndef BERTINI_POLY_SLICED_HPP
#define BERTINI_POLY_SLICED_HPP

#include <vector>

#include "bertini/poly.hpp"

namespace bertini {

// y3-graded representation: s[k] is the coefficient of y3^k with the
// y3-exponent removed.  The heaviest identity checks run in this form so the
// accumulation tables stay cache-resident and sums of products share one pass.

using Sliced = std::vector<PolyQ>;

Sliced y3_slices(const PolyQ& p);
PolyQ assemble_y3(const Sliced& slices);

struct SlicedProduct {
  const Sliced* a;
  const Sliced* b;
  bool negate = false;
};

// sum of products plus signed addends, computed slice by slice
Sliced slices_combine(const std::vector<SlicedProduct>& products,
                      const std::vector<std::pair<const Sliced*, bool>>& addends = {});

bool slices_zero(const Sliced& s);

// Exact quotient u / d by deconvolution against the top y3-slice of d,
// verifying every remaining slice equation; throws NotDivisible.
Sliced slices_divide_exact(const Sliced& u, const Sliced& d);

// schoolbook product organized by output y3-degree
PolyQ mul_big(const PolyQ& a, const PolyQ& b);

// concrete-mode polynomials are small; plain multiplication is fine there
template <class C>
Poly<C> mul_big(const Poly<C>& a, const Poly<C>& b) {
  return a * b;
}

}  // namespace bertini

#endif
