#ifndef BERTINI_ERRORS_HPP
#define BERTINI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bertini {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Arithmetic on operands from different coefficient domains (or different primes).
struct DomainMismatch : Error {
  using Error::Error;
};

// exact_div found a nonzero remainder.  A bracket [e]_u with a remainder means
// the formula that produced e was transcribed wrong, so callers must abort.
struct NotDivisible : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

struct MissingBinding : Error {
  using Error::Error;
};

// Image of a point under a rational map is (0,...,0).
struct DegeneratePoint : Error {
  using Error::Error;
};

struct ChartUndefined : Error {
  using Error::Error;
};

struct NotABasepoint : Error {
  using Error::Error;
};

struct SpecNotGeiser : Error {
  using Error::Error;
};

struct NonzeroFreeTerm : Error {
  using Error::Error;
};

struct InconsistentSystem : Error {
  using Error::Error;
};

struct NotAPerfectSquare : Error {
  using Error::Error;
};

struct ExcessiveDegeneracy : Error {
  using Error::Error;
};

struct SamplingExhausted : Error {
  using Error::Error;
};

struct BudgetExceeded : Error {
  using Error::Error;
};

}  // namespace bertini

#endif
