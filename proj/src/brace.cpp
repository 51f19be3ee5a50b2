#include "bertini/brace.hpp"

namespace bertini {

namespace {

mpz_class binom(unsigned n, unsigned k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace

PolyQ brace(const PolyQ& p, unsigned m) {
  std::vector<PolyQ::Term> out;
  for (const auto& t : p.terms()) {
    for (int i = 7; i < 14; ++i)
      if (t.m.d[i]) throw Error("brace input already contains primed variables");
    for (Var v : {Var::y1, Var::y2, Var::y3, Var::t1, Var::t2})
      if (t.m.exp(v)) throw Error("brace input contains point variables");

    unsigned n = 0;
    for (int i = 0; i < 7; ++i) n += t.m.d[i];
    if (m > n) continue;

    // enumerate all ways to distribute m replacements over the seven slots
    std::array<unsigned, 7> k{};
    auto emit = [&]() {
      Monomial mn = t.m;
      mpz_class mult = 1;
      for (int i = 0; i < 7; ++i) {
        if (!k[i]) continue;
        mult *= binom(t.m.d[i], k[i]);
        mn.set(var_at(i), t.m.d[i] - k[i]);
        mn.set(prime_partner(var_at(i)), k[i]);
      }
      out.push_back({mn, t.c * Rat(mult)});
    };
    // depth-first over slots with remaining budget
    auto rec = [&](auto&& self, int slot, unsigned left) -> void {
      if (slot == 7) {
        if (left == 0) emit();
        return;
      }
      unsigned cap = std::min<unsigned>(left, t.m.d[slot]);
      for (unsigned c = 0; c <= cap; ++c) {
        k[slot] = c;
        self(self, slot + 1, left - c);
      }
      k[slot] = 0;
    };
    rec(rec, 0, m);
  }
  return PolyQ::from_terms(std::move(out));
}

}  // namespace bertini
