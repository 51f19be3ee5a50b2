#ifndef BERTINI_RAT_HPP
#define BERTINI_RAT_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "bertini/errors.hpp"

namespace bertini {

// Exact rational coefficients.  mpq_class already keeps values reduced with a
// positive denominator, which is exactly the invariant we need.
using Rat = mpq_class;

inline bool rat_is_zero(const Rat& q) { return sgn(q) == 0; }

inline Rat rat_from_long(long n) { return Rat(n); }

// mpq_class(n, d) does not reduce; this does.
inline Rat rat_make(long num, long den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// Accepts "n" or "n/d" with optional leading '-'.
inline Rat rat_parse(std::string_view text) {
  try {
    Rat q(std::string(text), 10);
    q.canonicalize();
    if (sgn(q.get_den()) <= 0) throw ParseError("rational with nonpositive denominator");
    return q;
  } catch (const std::invalid_argument&) {
    throw ParseError("bad rational literal: " + std::string(text));
  }
}

inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

// Square root when q is a perfect square of a rational; nullopt otherwise.
// The root is taken nonnegative.
inline bool rat_sqrt(const Rat& q, Rat* out) {
  if (sgn(q) < 0) return false;
  const mpz_class num = q.get_num(), den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return false;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  *out = Rat(rn) / Rat(rd);
  return true;
}

// True when q is an integer that fits in int64 with margin for products.
inline bool rat_fits_i64(const Rat& q, std::int64_t* out) {
  if (mpz_cmp_ui(q.get_den().get_mpz_t(), 1) != 0) return false;
  const mpz_srcptr num = q.get_num().get_mpz_t();
  if (!mpz_fits_slong_p(num)) return false;
  *out = mpz_get_si(num);
  return true;
}

}  // namespace bertini

#endif
