#ifndef BERTINI_GEISER_HPP
#define BERTINI_GEISER_HPP

#include "bertini/sigma2.hpp"

namespace bertini {

// The degree-8 specialization:  a1 = a2 = 0, all members of the pencil share
// a tangent at the distinguished basepoint.  Built independently from the
// reduced display formulas; the verification suite cross-checks every field
// against the specialized generic construction.
template <class C>
struct GeiserBundle {
  PencilSpec<C> spec;
  Poly<C> w, wp;
  Poly<C> B1, B2, B3, C1, C2;
  Poly<C> gamma1;
  Poly<C> rtp1, rtp3;  // \tilde r'_1, \tilde r'_3
  Poly<C> rt1, rt2, rt3;
  Poly<C> Ct;  // \tilde C
  Poly<C> phi3, psi3;
  Poly<C> z1, z2, z3;
  Poly<C> Kt;
};

template <class C>
GeiserBundle<C> build_geiser(const PencilSpec<C>& spec) {
  if (!spec.is_geiser()) throw SpecNotGeiser("a1 and a2 must vanish");
  GeiserBundle<C> g;
  g.spec = spec;
  Poly<C> y1 = spec.yvar(Var::y1), y2 = spec.yvar(Var::y2), y3 = spec.yvar(Var::y3);
  const Poly<C>&a1p = spec.at(Var::a1p), &a2p = spec.at(Var::a2p), &b1 = spec.at(Var::b1);

  g.w = detail::cubic_shape_at(spec, 0, y1, y2, y3);
  g.wp = detail::cubic_shape_at(spec, 7, y1, y2, y3);
  auto pencil_form = [&](Var u) {
    return spec.at(u) * g.wp - spec.at(prime_partner(u)) * g.w;
  };
  g.B1 = pencil_form(Var::b1);
  g.B2 = pencil_form(Var::b2);
  g.B3 = pencil_form(Var::b3);
  g.C1 = pencil_form(Var::c1);
  g.C2 = pencil_form(Var::c2);

  g.gamma1 = -(a1p * y1 + a2p * y2);
  g.rtp1 = a2p * a2p * g.B1 - a1p * a2p * g.B2 + a1p * a1p * g.B3;
  g.rtp3 = a1p * g.C2 - a2p * g.C1;
  g.rt1 = -(a2p * g.rtp1);
  g.rt2 = a1p * g.rtp1;
  g.rt3 = a1p * a2p * g.rtp3;

  g.Ct = -(a2p * (g.B1 - a1p * b1 * y1 * y3 * y3).exact_div(y2)) +
         a1p * (a2p * y3 * (g.w - b1 * y1 * y1 * y3) - g.B3 * y2).exact_div(y1 * y2);
  g.phi3 = -(a1p * g.C2) + y3 * g.Ct;
  g.psi3 = -(a2p * g.C1) + y3 * g.Ct;

  g.z1 = g.phi3 * (a2p * a2p * g.w * g.phi3 + g.B3 * g.rtp1).exact_div(y1);
  g.z2 = g.psi3 * (a1p * a1p * g.w * g.psi3 + g.B1 * g.rtp1).exact_div(y2);
  g.z3 = g.psi3 * g.phi3 * g.Ct;

  g.Kt = g.psi3 * (-(a1p * g.w * y3) + g.B1 * y1).exact_div(y2) -
         g.phi3 * (-(a2p * g.w * y3) + g.B3 * y2).exact_div(y1);
  return g;
}

// Coefficients of the shifted bivariate forms of the double plane: everything
// inherited from the generic data "with a shift by one" once the free terms
// vanish under a1 = a2 = 0.
template <class C>
struct GeiserRamData {
  std::array<Poly<C>, 2> st;  // \tilde S_1
  std::array<Poly<C>, 3> p;   // P_2 unchanged
  std::array<Poly<C>, 4> qt;  // \tilde Q_3
  std::array<Poly<C>, 3> rt;  // \tilde R_2
};

// ram must come from the generic closed forms (brace applied before the
// specialization) already evaluated at a Geiser spec.
template <class C>
GeiserRamData<C> geiser_ram(const RamData<C>& ram) {
  if (!ram.s[0].is_zero() || !ram.q[0].is_zero() || !ram.r[0].is_zero())
    throw NonzeroFreeTerm("s0, q0, r0 must vanish under a1 = a2 = 0");
  GeiserRamData<C> out;
  for (int i = 0; i < 2; ++i) out.st[i] = ram.s[i + 1];
  for (int i = 0; i < 3; ++i) out.p[i] = ram.p[i];
  for (int i = 0; i < 4; ++i) out.qt[i] = ram.q[i + 1];
  for (int i = 0; i < 3; ++i) out.rt[i] = ram.r[i + 1];
  return out;
}

template <class C>
ProjPoint<C> geiser_apply(const GeiserBundle<C>& g, const ProjPoint<C>& y) {
  std::map<Var, C> at{{Var::y1, y.x[0]}, {Var::y2, y.x[1]}, {Var::y3, y.x[2]}};
  C v1 = g.z1.evaluate(at), v2 = g.z2.evaluate(at), v3 = g.z3.evaluate(at);
  if (coef_is_zero(v1) && coef_is_zero(v2) && coef_is_zero(v3))
    throw DegeneratePoint("basepoint or contracted locus");
  return ProjPoint<C>(v1, v2, v3);
}

// anti-canonical map to the target plane: (phi3, w, wp)
template <class C>
ProjPoint<C> anticanonical_map(const GeiserBundle<C>& g, const ProjPoint<C>& y) {
  std::map<Var, C> at{{Var::y1, y.x[0]}, {Var::y2, y.x[1]}, {Var::y3, y.x[2]}};
  return ProjPoint<C>(g.phi3.evaluate(at), g.w.evaluate(at), g.wp.evaluate(at));
}

// 4 z0^3 z1 - z0^2 P2(z1,z2) - z0 Qt3(z1,z2) - Rt2(z1,z2)^2
template <class C>
C quartic_residual(const GeiserRamData<C>& gram, const ProjPoint<C>& zbar) {
  const C &z0 = zbar.x[0], &z1 = zbar.x[1], &z2 = zbar.x[2];
  C one = coef_one_like(z0);
  auto form = [&](const auto& coeffs) {
    const std::size_t n = coeffs.size() - 1;
    C acc{};
    for (std::size_t i = 0; i <= n; ++i) {
      C term = coeffs[i].constant_value();
      for (std::size_t k = 0; k < i; ++k) term = term * z1;
      for (std::size_t k = 0; k < n - i; ++k) term = term * z2;
      acc += term;
    }
    return acc;
  };
  C P = form(gram.p), Q = form(gram.qt), R = form(gram.rt);
  C four = one + one + one + one;
  C z0sq = z0 * z0;
  return four * z0sq * z0 * z1 - z0sq * P - z0 * Q - R * R;
}

template <class C>
struct GeiserBasepointSection {
  C u2{}, u3{};
  std::array<Poly<C>, 2> stu;  // \tilde S^u_1
  Poly<C> psi3_u;              // phi3 + \tilde S^u_1(w, wp)
};

template <class C>
GeiserBasepointSection<C> basepoint_section_geiser(const GeiserBundle<C>& g, const C& u2,
                                                   const C& u3) {
  std::map<Var, C> at{{Var::y1, coef_one_like(u2)}, {Var::y2, u2}, {Var::y3, u3}};
  if (!coef_is_zero(g.w.evaluate(at)) || !coef_is_zero(g.wp.evaluate(at)))
    throw NotABasepoint("(1,u2,u3) does not lie on both cubics");
  auto gen = basepoint_su_generic();
  std::array<Poly<C>, 3> su;
  for (int i = 0; i < 3; ++i) {
    Poly<C> coef = specialize_generic(gen[i], g.spec);
    std::map<Var, Poly<C>> uat{{Var::u2, Poly<C>::constant(u2)}, {Var::u3, Poly<C>::constant(u3)}};
    su[i] = coef.substitute(uat);
  }
  if (!su[0].is_zero()) throw NonzeroFreeTerm("S^u_2 free term survived the specialization");
  GeiserBasepointSection<C> out;
  out.u2 = u2;
  out.u3 = u3;
  out.stu = {su[1], su[2]};
  out.psi3_u = g.phi3 + su[1] * g.wp + su[2] * g.w;
  return out;
}

}  // namespace bertini

#endif
