#ifndef BERTINI_TEST_UTIL_HPP
#define BERTINI_TEST_UTIL_HPP

#include <vector>

#include "bertini/poly.hpp"
#include "bertini/rng.hpp"

namespace bertini::testutil {

// Small random polynomials for property tests.
inline PolyQ random_poly_q(SplitMix64& rng, int max_terms = 6, int max_vars_per_term = 3,
                           int max_exp = 3, long coef_span = 20) {
  std::vector<PolyQ::Term> terms;
  int n = 1 + static_cast<int>(rng.below(max_terms));
  for (int i = 0; i < n; ++i) {
    Monomial m;
    int nv = static_cast<int>(rng.below(max_vars_per_term + 1));
    for (int j = 0; j < nv; ++j) {
      Var v = var_at(static_cast<int>(rng.below(kNumVars)));
      m.set(v, 1 + static_cast<unsigned>(rng.below(max_exp)));
    }
    long num = static_cast<long>(rng.below(2 * coef_span + 1)) - coef_span;
    long den = 1 + static_cast<long>(rng.below(4));
    terms.push_back({m, rat_make(num, den)});
  }
  return PolyQ::from_terms(std::move(terms));
}

inline PolyQ random_int_poly_q(SplitMix64& rng, int max_terms = 6) {
  std::vector<PolyQ::Term> terms;
  int n = 1 + static_cast<int>(rng.below(max_terms));
  for (int i = 0; i < n; ++i) {
    Monomial m;
    int nv = static_cast<int>(rng.below(4));
    for (int j = 0; j < nv; ++j) m.set(var_at(static_cast<int>(rng.below(kNumVars))), 1 + static_cast<unsigned>(rng.below(3)));
    terms.push_back({m, Rat(static_cast<long>(rng.below(41)) - 20)});
  }
  return PolyQ::from_terms(std::move(terms));
}

inline PolyP random_poly_p(SplitMix64& rng, std::uint64_t p, int max_terms = 6) {
  std::vector<PolyP::Term> terms;
  int n = 1 + static_cast<int>(rng.below(max_terms));
  for (int i = 0; i < n; ++i) {
    Monomial m;
    int nv = static_cast<int>(rng.below(4));
    for (int j = 0; j < nv; ++j) m.set(var_at(static_cast<int>(rng.below(kNumVars))), 1 + static_cast<unsigned>(rng.below(3)));
    terms.push_back({m, Fp(rng.below(p), p)});
  }
  return PolyP::from_terms(std::move(terms));
}

}  // namespace bertini::testutil

#endif
