#ifndef BERTINI_FPROOTS_HPP
#define BERTINI_FPROOTS_HPP

#include <vector>

#include "bertini/poly.hpp"
#include "bertini/rng.hpp"

namespace bertini {

// Dense univariate polynomial over F_p, c[i] the coefficient of x^i.
struct UniPoly {
  std::vector<std::uint64_t> c;
  std::uint64_t p = 0;

  unsigned degree() const;
  bool is_zero() const;
};

// All roots in F_p (distinct), via gcd with x^p - x followed by equal-degree
// splitting into linear factors.  Deterministic given the stream.
std::vector<std::uint64_t> fp_roots(const UniPoly& f, SplitMix64& rng);

// Restriction of a concrete trivariate polynomial to the line s -> s*A + B.
UniPoly restrict_to_line(const PolyP& f, const std::array<Fp, 3>& A, const std::array<Fp, 3>& B);

}  // namespace bertini

#endif
