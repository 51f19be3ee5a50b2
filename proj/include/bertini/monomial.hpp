#ifndef BERTINI_MONOMIAL_HPP
#define BERTINI_MONOMIAL_HPP

#include <array>
#include <cstdint>
#include <cstring>

#include "bertini/errors.hpp"
#include "bertini/variable.hpp"

namespace bertini {

// Exponent vector over the fixed 21-variable universe, packed into 24 bytes:
// d[0..20] are the exponents, d[21] caches the total degree, d[22..23] stay
// zero so the whole struct can be hashed and compared as three 64-bit words.
struct Monomial {
  std::array<std::uint8_t, 24> d{};

  static Monomial one() { return Monomial{}; }

  static Monomial var(Var v, unsigned e = 1) {
    Monomial m;
    m.set(v, e);
    return m;
  }

  unsigned exp(Var v) const { return d[idx(v)]; }
  unsigned deg() const { return d[21]; }

  void set(Var v, unsigned e) {
    if (e > 255) throw Error("exponent overflow");
    int total = deg() - d[idx(v)] + static_cast<int>(e);
    if (total > 255) throw Error("degree overflow");
    d[idx(v)] = static_cast<std::uint8_t>(e);
    d[21] = static_cast<std::uint8_t>(total);
  }

  bool is_one() const { return deg() == 0; }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    unsigned total = deg() + o.deg();
    if (total > 255) throw Error("degree overflow");
    for (int i = 0; i < kNumVars; ++i)
      r.d[i] = static_cast<std::uint8_t>(d[i] + o.d[i]);
    r.d[21] = static_cast<std::uint8_t>(total);
    return r;
  }

  bool divides(const Monomial& o) const {
    for (int i = 0; i < kNumVars; ++i)
      if (d[i] > o.d[i]) return false;
    return true;
  }

  // this / o; caller guarantees o.divides(*this).
  Monomial operator/(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kNumVars; ++i)
      r.d[i] = static_cast<std::uint8_t>(d[i] - o.d[i]);
    r.d[21] = static_cast<std::uint8_t>(deg() - o.deg());
    return r;
  }

  std::uint64_t word(int k) const {
    std::uint64_t w;
    std::memcpy(&w, d.data() + 8 * k, 8);
    return w;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.word(0) == b.word(0) && a.word(1) == b.word(1) && a.word(2) == b.word(2);
  }

  // Graded lexicographic: total degree first, then the exponent vector read
  // a1,a2,...,u3 (earlier variable dominates).
  friend int grlex_cmp(const Monomial& a, const Monomial& b) {
    if (a.deg() != b.deg()) return a.deg() < b.deg() ? -1 : 1;
    return std::memcmp(a.d.data(), b.d.data(), kNumVars);
  }
  friend bool operator<(const Monomial& a, const Monomial& b) { return grlex_cmp(a, b) < 0; }
  friend bool operator>(const Monomial& a, const Monomial& b) { return grlex_cmp(a, b) > 0; }
};

struct MonoHash {
  std::size_t operator()(const Monomial& m) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (int k = 0; k < 3; ++k) {
      std::uint64_t x = m.word(k) * 0xff51afd7ed558ccdull;
      x ^= x >> 33;
      h = (h ^ x) * 0xc4ceb9fe1a85ec53ull;
    }
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

}  // namespace bertini

#endif
