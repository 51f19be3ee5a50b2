#ifndef BERTINI_PENCIL_HPP
#define BERTINI_PENCIL_HPP

#include <array>

#include "bertini/poly.hpp"

namespace bertini {

inline Rat coef_one_like(const Rat&) { return Rat(1); }
inline Fp coef_one_like(const Fp& s) { return Fp(1, s.p); }

// The fourteen pencil coefficients a1,a2,b1,b2,b3,c1,c2 and their primed
// partners, stored as polynomials: the matching variables in generic mode,
// constants in concrete mode.  One build path serves both.
template <class C>
struct PencilSpec {
  std::array<Poly<C>, 14> entry;
  bool generic = false;
  C unit{};  // multiplicative identity of the coefficient domain

  const Poly<C>& at(Var v) const { return entry[idx(v)]; }

  static PencilSpec from_values(const std::array<C, 14>& vals) {
    PencilSpec s;
    s.unit = coef_one_like(vals[0]);
    for (int i = 0; i < 14; ++i) s.entry[i] = Poly<C>::constant(vals[i]);
    return s;
  }

  bool is_geiser() const { return entry[idx(Var::a1)].is_zero() && entry[idx(Var::a2)].is_zero(); }

  Poly<C> yvar(Var v) const { return Poly<C>::variable(v, unit); }
};

PencilSpec<Rat> generic_pencil();
// The generic Geiser pencil: a1 = a2 = 0, everything else symbolic.
PencilSpec<Rat> generic_geiser_pencil();

// Projective point with the first nonzero coordinate scaled to 1, so that
// projective equality is plain equality.
template <class C>
struct ProjPoint {
  std::array<C, 3> x{};

  ProjPoint() = default;

  ProjPoint(C x1, C x2, C x3) : x{std::move(x1), std::move(x2), std::move(x3)} {
    int lead = -1;
    for (int i = 0; i < 3; ++i)
      if (!coef_is_zero(x[i])) {
        lead = i;
        break;
      }
    if (lead < 0) throw DegeneratePoint("projective point with all coordinates zero");
    C inv = x[lead];
    for (int i = 0; i < 3; ++i) x[i] = coef_div(x[i], inv);
  }

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.x == b.x; }
};

}  // namespace bertini

#endif
