#ifndef BERTINI_BUNDLE_HPP
#define BERTINI_BUNDLE_HPP

#include <map>

#include "bertini/pencil.hpp"

namespace bertini {

// Everything built from a pencil: the two cubics, the coefficient forms of
// the member through y, the residual tangent point r, the contracted sextics,
// the involution z and its fixed-locus curve K.
template <class C>
struct BertiniBundle {
  PencilSpec<C> spec;
  Poly<C> w, wp;
  Poly<C> A1, A2, B1, B2, B3, C1, C2;
  Poly<C> kappa;
  Poly<C> gamma4;
  Poly<C> rp1, rp3;  // r'_1, r'_3
  Poly<C> r1, r2, r3;
  Poly<C> C5, phi6, psi6;
  Poly<C> z1, z2, z3;
  Poly<C> K;
};

// Test hook: flip the sign of one term of a named construction step so the
// verification suite can prove it notices.
enum class Corrupt { none, C5, K, rp1 };

// Core skips the involution coordinates z1, z2, z3 (the expensive fields)
// for callers that only need the curves.
enum class BuildLevel { core, full };

namespace detail {

template <class C>
void flip_first_sign(Poly<C>& p) {
  if (p.is_zero()) throw Error("nothing to corrupt");
  auto terms = p.terms();
  terms[0].c = -terms[0].c;
  p = Poly<C>::from_terms(std::move(terms));
}

// x3^2(a1 x1 + a2 x2) + x3(b1 x1^2 + b2 x1 x2 + b3 x2^2) + c1 x1^2 x2 + c2 x1 x2^2
// with the seven coefficient entries starting at `base` (0 = unprimed block,
// 7 = primed block) and (x1,x2,x3) arbitrary polynomials.
template <class C>
Poly<C> cubic_shape_at(const PencilSpec<C>& s, int base, const Poly<C>& x1, const Poly<C>& x2,
                       const Poly<C>& x3) {
  auto e = [&](int i) -> const Poly<C>& { return s.entry[base + i]; };
  Poly<C> x11 = x1 * x1, x12 = x1 * x2, x22 = x2 * x2, x33 = x3 * x3;
  Poly<C> out = x33 * (e(0) * x1 + e(1) * x2);
  out = out + x3 * (e(2) * x11 + e(3) * x12 + e(4) * x22);
  out = out + x12 * (e(5) * x1 + e(6) * x2);
  return out;
}

}  // namespace detail

template <class C>
BertiniBundle<C> build_bundle(const PencilSpec<C>& spec, Corrupt corrupt = Corrupt::none,
                              BuildLevel level = BuildLevel::full) {
  BertiniBundle<C> b;
  b.spec = spec;
  Poly<C> y1 = spec.yvar(Var::y1), y2 = spec.yvar(Var::y2), y3 = spec.yvar(Var::y3);

  b.w = detail::cubic_shape_at(spec, 0, y1, y2, y3);
  b.wp = detail::cubic_shape_at(spec, 7, y1, y2, y3);

  auto pencil_form = [&](Var u) {
    return spec.at(u) * b.wp - spec.at(prime_partner(u)) * b.w;
  };
  b.A1 = pencil_form(Var::a1);
  b.A2 = pencil_form(Var::a2);
  b.B1 = pencil_form(Var::b1);
  b.B2 = pencil_form(Var::b2);
  b.B3 = pencil_form(Var::b3);
  b.C1 = pencil_form(Var::c1);
  b.C2 = pencil_form(Var::c2);

  b.kappa = spec.at(Var::a1) * spec.at(Var::b1p) - spec.at(Var::a1p) * spec.at(Var::b1);
  b.gamma4 = y1 * b.A1 + y2 * b.A2;

  b.rp1 = b.B1 * b.A2 * b.A2 - b.B2 * b.A1 * b.A2 + b.B3 * b.A1 * b.A1;
  if (corrupt == Corrupt::rp1) detail::flip_first_sign(b.rp1);
  b.rp3 = b.A2 * b.C1 - b.A1 * b.C2;
  b.r1 = b.A2 * b.rp1;
  b.r2 = -(b.A1 * b.rp1);
  b.r3 = b.A1 * b.A2 * b.rp3;

  b.C5 = b.A2 * (b.B1 + b.kappa * y1 * y3 * y3).exact_div(y2) +
         (b.A1 - b.kappa * y1 * y1 * y3).exact_div(y2) * (b.A2 * y3 + b.B3 * y2).exact_div(y1) +
         b.kappa * b.B3 * y1 * y3;
  if (corrupt == Corrupt::C5) detail::flip_first_sign(b.C5);

  b.phi6 = b.A1 * b.C2 + y3 * b.C5;
  b.psi6 = b.A2 * b.C1 + y3 * b.C5;

  if (level == BuildLevel::full) {
    b.z1 = b.phi6 * (b.A2 * b.A2 * b.phi6 + b.B3 * b.rp1).exact_div(y1);
    b.z2 = b.psi6 * (b.A1 * b.A1 * b.psi6 + b.B1 * b.rp1).exact_div(y2);
    b.z3 = b.psi6 * b.phi6 * b.C5;
  }

  b.K = b.psi6 * (b.A1 * y3 + b.B1 * y1).exact_div(y2) -
        b.phi6 * (b.A2 * y3 + b.B3 * y2).exact_div(y1);
  if (corrupt == Corrupt::K) detail::flip_first_sign(b.K);
  return b;
}

// W_3 evaluated at a polynomial triple: w(v) wp(y) - wp(v) w(y).
template <class C>
Poly<C> W3_of(const BertiniBundle<C>& b, const Poly<C>& v1, const Poly<C>& v2, const Poly<C>& v3) {
  return detail::cubic_shape_at(b.spec, 0, v1, v2, v3) * b.wp -
         detail::cubic_shape_at(b.spec, 7, v1, v2, v3) * b.w;
}

// The involution as a point map.  DegeneratePoint when y is a basepoint or
// lies on a contracted curve (all three coordinates vanish).
template <class C>
ProjPoint<C> apply_bertini(const BertiniBundle<C>& b, const ProjPoint<C>& y) {
  std::map<Var, C> at{{Var::y1, y.x[0]}, {Var::y2, y.x[1]}, {Var::y3, y.x[2]}};
  C v1 = b.z1.evaluate(at), v2 = b.z2.evaluate(at), v3 = b.z3.evaluate(at);
  if (coef_is_zero(v1) && coef_is_zero(v2) && coef_is_zero(v3))
    throw DegeneratePoint("basepoint or contracted locus");
  return ProjPoint<C>(v1, v2, v3);
}

template <class C>
ProjPoint<C> apply_bertini(const PencilSpec<C>& spec, const ProjPoint<C>& y) {
  return apply_bertini(build_bundle(spec), y);
}

}  // namespace bertini

#endif
