#ifndef BERTINI_FP_HPP
#define BERTINI_FP_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include "bertini/errors.hpp"
#include "bertini/rat.hpp"

namespace bertini {

// Prime-field element.  The modulus travels with the value; p == 0 marks the
// "domainless" zero so that default-constructed coefficients behave as the
// additive identity of any field they meet.
struct Fp {
  std::uint64_t v = 0;
  std::uint64_t p = 0;

  Fp() = default;
  Fp(std::uint64_t value, std::uint64_t prime) : v(value % prime), p(prime) {}

  static Fp from_int(std::int64_t n, std::uint64_t prime) {
    std::uint64_t r = static_cast<std::uint64_t>(n % static_cast<std::int64_t>(prime));
    if (n < 0) r += prime;
    return Fp(r % prime, prime);
  }

  bool is_zero() const { return v == 0; }

  friend std::uint64_t fp_combine(const Fp& a, const Fp& b) {
    if (a.p == 0) return b.p;
    if (b.p == 0) return a.p;
    if (a.p != b.p) throw DomainMismatch("prime fields differ");
    return a.p;
  }

  friend Fp operator+(const Fp& a, const Fp& b) {
    std::uint64_t p = fp_combine(a, b);
    if (p == 0) return Fp{};
    std::uint64_t s = a.v + b.v;
    if (s >= p) s -= p;
    return Fp(s, p);
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    std::uint64_t p = fp_combine(a, b);
    if (p == 0) return Fp{};
    std::uint64_t s = a.v + p - b.v;
    if (s >= p) s -= p;
    return Fp(s, p);
  }
  friend Fp operator*(const Fp& a, const Fp& b) {
    std::uint64_t p = fp_combine(a, b);
    if (p == 0) return Fp{};
    unsigned __int128 t = static_cast<unsigned __int128>(a.v) * b.v;
    return Fp(static_cast<std::uint64_t>(t % p), p);
  }
  Fp operator-() const {
    if (p == 0 || v == 0) return Fp{0, p == 0 ? 1 : p};
    return Fp(p - v, p);
  }
  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }

  friend bool operator==(const Fp& a, const Fp& b) {
    if (a.v == 0 && b.v == 0) return true;
    return fp_combine(a, b) != 0 && a.v == b.v;
  }

  Fp pow(std::uint64_t e) const {
    Fp r(1, p), base = *this;
    while (e) {
      if (e & 1) r *= base;
      base *= base;
      e >>= 1;
    }
    return r;
  }

  Fp inverse() const {
    if (v == 0) throw Error("inverse of zero");
    return pow(p - 2);
  }

  std::string to_string() const { return std::to_string(v); }
};

inline Fp fp_div(const Fp& a, const Fp& b) { return a * b.inverse(); }

// Reduce an exact rational into F_p; throws if the denominator vanishes mod p.
inline Fp fp_from_rat(const Rat& q, std::uint64_t p) {
  mpz_class num = q.get_num(), den = q.get_den();
  mpz_class pz(static_cast<unsigned long>(p));
  // 2^61-1 and other 64-bit primes exceed unsigned long on no platform we target.
  mpz_class nr = num % pz, dr = den % pz;
  if (nr < 0) nr += pz;
  if (dr == 0) throw DomainMismatch("denominator divisible by p");
  Fp n(nr.get_ui(), p), d(dr.get_ui(), p);
  return fp_div(n, d);
}

bool is_prime_u64(std::uint64_t n);

// Tonelli-Shanks; false when a is a quadratic non-residue.
bool fp_sqrt(const Fp& a, Fp* out);

inline constexpr std::uint64_t kDefaultPrime = 2305843009213693951ull;  // 2^61 - 1

}  // namespace bertini

#endif
