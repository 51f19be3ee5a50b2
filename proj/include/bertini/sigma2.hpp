#ifndef BERTINI_SIGMA2_HPP
#define BERTINI_SIGMA2_HPP

#include <optional>

#include "bertini/brace.hpp"
#include "bertini/bundle.hpp"
#include "bertini/poly_sliced.hpp"

namespace bertini {

// Coefficients of the bivariate forms attached to the two-to-one map to the
// quadric cone: S (degree 2), P (2), Q (4) and R (3), stored low index first;
// entry i multiplies w^i wp^(deg-i).
template <class C>
struct RamData {
  std::array<Poly<C>, 3> s;
  std::array<Poly<C>, 3> p;
  std::array<Poly<C>, 5> q;
  std::array<Poly<C>, 4> r;
};

// The displayed closed forms: free terms from the four displays, the rest by
// the sign/brace rule entry_i = (-1)^i {entry_0}_i.
RamData<Rat> ram_closed_form();

// Substitute concrete (or specialized) pencil entries into a generic
// coefficient polynomial.
template <class C>
Poly<C> specialize_generic(const PolyQ& generic, const PencilSpec<C>& spec) {
  if constexpr (std::is_same_v<C, Rat>) {
    std::map<Var, PolyQ> bind;
    for (int i = 0; i < 14; ++i) bind[var_at(i)] = spec.entry[i];
    return generic.substitute(bind);
  } else {
    Poly<C> reduced = reduce_mod(generic, spec.unit.p);
    std::map<Var, Poly<C>> bind;
    for (int i = 0; i < 14; ++i) bind[var_at(i)] = spec.entry[i];
    return reduced.substitute(bind);
  }
}

template <class C>
RamData<C> ram_eval(const PencilSpec<C>& spec) {
  RamData<Rat> g = ram_closed_form();
  RamData<C> out;
  for (int i = 0; i < 3; ++i) out.s[i] = specialize_generic(g.s[i], spec);
  for (int i = 0; i < 3; ++i) out.p[i] = specialize_generic(g.p[i], spec);
  for (int i = 0; i < 5; ++i) out.q[i] = specialize_generic(g.q[i], spec);
  for (int i = 0; i < 4; ++i) out.r[i] = specialize_generic(g.r[i], spec);
  return out;
}

template <class C>
struct OracleResult {
  RamData<C> ram;
  bool sign_flipped;  // which global sign of R matched the displayed r0
};

// Independent derivation of every coefficient from the bundle alone: the S
// coefficients from psi6 - phi6, then P, Q and a free sextic form U from
// K^2 + 4 phi6^3 by slice-by-slice elimination, a perfect-square certificate
// extracting R from U, and a full residual check of the solved system.
template <class C>
OracleResult<C> ram_oracle(const BertiniBundle<C>& b);

// ---- maps to the cone / Sigma_2 ----

template <class C>
struct ConePoint {
  std::array<C, 4> z{};  // normalized: first nonzero coordinate 1
};

template <class C>
struct Sigma2Point {
  C x_num{}, x_den{};     // xbar as the projective pair (w : wp)
  std::optional<C> ybar;  // absent when wp = 0 (chart undefined)
};

template <class C>
ConePoint<C> cone_map(const BertiniBundle<C>& b, const ProjPoint<C>& y) {
  std::map<Var, C> at{{Var::y1, y.x[0]}, {Var::y2, y.x[1]}, {Var::y3, y.x[2]}};
  C z0 = b.phi6.evaluate(at);
  C wv = b.w.evaluate(at), wpv = b.wp.evaluate(at);
  C z1 = wv * wv, z2 = wv * wpv, z3 = wpv * wpv;
  if (coef_is_zero(z0) && coef_is_zero(z1) && coef_is_zero(z2) && coef_is_zero(z3))
    throw DegeneratePoint("basepoint of the anti-bicanonical system");
  ConePoint<C> out;
  out.z = {z0, z1, z2, z3};
  int lead = -1;
  for (int i = 0; i < 4; ++i)
    if (!coef_is_zero(out.z[i])) {
      lead = i;
      break;
    }
  C inv = out.z[lead];
  for (int i = 0; i < 4; ++i) out.z[i] = coef_div(out.z[i], inv);
  return out;
}

template <class C>
Sigma2Point<C> sigma2_chart(const BertiniBundle<C>& b, const ProjPoint<C>& y) {
  std::map<Var, C> at{{Var::y1, y.x[0]}, {Var::y2, y.x[1]}, {Var::y3, y.x[2]}};
  Sigma2Point<C> out;
  out.x_num = b.w.evaluate(at);
  out.x_den = b.wp.evaluate(at);
  if (coef_is_zero(out.x_num) && coef_is_zero(out.x_den))
    throw DegeneratePoint("both cubics vanish");
  if (!coef_is_zero(out.x_den)) {
    C d2 = out.x_den * out.x_den;
    out.ybar = coef_div(b.phi6.evaluate(at), d2);
  }
  return out;
}

// -4 y^3 + y^2 P(x) + y Q(x) + R(x)^2 with F(x) := F(x, 1)
template <class C>
C trigonal_residual(const RamData<C>& ram, const Sigma2Point<C>& pt) {
  if (!pt.ybar) throw ChartUndefined("no affine ybar on the fiber wp = 0");
  C x = coef_div(pt.x_num, pt.x_den);
  C y = *pt.ybar;
  auto univ = [&](const auto& coeffs) {
    C acc{};
    C power = coef_one_like(x);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      acc += coeffs[i].constant_value() * power;
      power = power * x;
    }
    return acc;
  };
  C P = univ(ram.p), Q = univ(ram.q), R = univ(ram.r);
  C y2 = y * y, y3 = y2 * y;
  C four = coef_one_like(y) + coef_one_like(y) + coef_one_like(y) + coef_one_like(y);
  return -(four * y3) + y2 * P + y * Q + R * R;
}

// ---- basepoint sections (eq. for other basepoints) ----

// Generic s^u coefficients, with u2, u3 symbolic and inert under the brace.
std::array<PolyQ, 3> basepoint_su_generic();

template <class C>
struct BasepointSection {
  C u2{}, u3{};
  std::array<Poly<C>, 3> su;  // constants in concrete mode
  Poly<C> psi6_u;             // phi6 + S^u_2(w, wp)
};

template <class C>
Poly<C> expand_bivariate_form(const BertiniBundle<C>& b, const auto& coeffs) {
  // sum_i coeffs[i] w^i wp^(n-i)
  const std::size_t n = coeffs.size() - 1;
  Poly<C> acc;
  for (std::size_t i = 0; i <= n; ++i) {
    if (coeffs[i].is_zero()) continue;
    Poly<C> term = coeffs[i];
    for (std::size_t k = 0; k < i; ++k) term = term * b.w;
    for (std::size_t k = 0; k < n - i; ++k) term = term * b.wp;
    acc = acc + term;
  }
  return acc;
}

// ---- oracle implementation ----

namespace oracle_detail {

template <class C>
Poly<C> coeff_of_t(const Poly<C>& g, unsigned i, unsigned j) {
  return g.slice(Var::t1, i).slice(Var::t2, j);
}

// Shared tail: extract R from the free sextic form U (perfect-square
// certificate), then fix the global sign against the displayed r0.
template <class C>
void finish_r(const std::array<Poly<C>, 7>& u, const PencilSpec<C>& spec, OracleResult<C>* out) {
  C one = spec.unit;
  Poly<C> two = Poly<C>::constant(one + one);
  Poly<C> r3 = poly_sqrt(u[6]);
  if (r3.is_zero()) throw NotAPerfectSquare("top coefficient of U vanishes");
  Poly<C> twor3 = two * r3;
  Poly<C> r2 = u[5].exact_div(twor3);
  Poly<C> r1 = (u[4] - r2 * r2).exact_div(twor3);
  Poly<C> r0 = (u[3] - two * r2 * r1).exact_div(twor3);
  // certify U = R^2 via the remaining coefficients
  if (!(u[2] == r1 * r1 + two * r2 * r0) || !(u[1] == two * r1 * r0) || !(u[0] == r0 * r0))
    throw NotAPerfectSquare("U is not the square of a cubic form");
  std::array<Poly<C>, 4> r{r0, r1, r2, r3};

  RamData<C> closed = ram_eval(spec);
  int pivot = -1;
  for (int i = 0; i < 4 && pivot < 0; ++i)
    if (!closed.r[i].is_zero()) pivot = i;
  if (pivot < 0) throw InconsistentSystem("closed-form R vanished entirely");
  if (r[pivot] == closed.r[pivot]) {
    out->sign_flipped = false;
  } else if (r[pivot] == -closed.r[pivot]) {
    out->sign_flipped = true;
    for (auto& e : r) e = -e;
  } else {
    throw InconsistentSystem("extracted R matches neither sign of the displayed form");
  }
  out->ram.r = std::move(r);
}

}  // namespace oracle_detail

template <class C>
OracleResult<C> ram_oracle(const BertiniBundle<C>& b) {
  using P = Poly<C>;
  const PencilSpec<C>& sp = b.spec;
  C one = sp.unit;
  P y1 = sp.yvar(Var::y1), y2 = sp.yvar(Var::y2);
  P t1 = P::variable(Var::t1, one), t2 = P::variable(Var::t2, one);
  P four = P::constant(one + one + one + one);

  OracleResult<C> out{};
  unsigned mw = b.w.degree_in(Var::y3), mwp = b.wp.degree_in(Var::y3);

  // T = K^2 + 4 phi6^3, the combination whose (phi6, w, wp)-decomposition
  // carries P, Q and R^2
  P phi2 = b.phi6 * b.phi6;
  P T = b.K * b.K + four * (phi2 * b.phi6);

  if (mw == 2 && mwp == 2) {
    // leads are the linear forms of the two cubics
    P la = sp.at(Var::a1) * y1 + sp.at(Var::a2) * y2;
    P lap = sp.at(Var::a1p) * y1 + sp.at(Var::a2p) * y2;
    if (!(b.w.slice(Var::y3, 2) == la) || !(b.wp.slice(Var::y3, 2) == lap))
      throw Error("oracle: unexpected top slices of the cubics");
    P Da = sp.at(Var::a1) * sp.at(Var::a2p) - sp.at(Var::a1p) * sp.at(Var::a2);
    if (Da.is_zero()) throw InconsistentSystem("degenerate linear leads");
    P Da2 = Da * Da;
    P Da6 = Da2 * Da2 * Da2;
    // substitution sending (la, lap) to (Da*t1, Da*t2)
    std::map<Var, P> kernel{{Var::y1, sp.at(Var::a2p) * t1 - sp.at(Var::a2) * t2},
                            {Var::y2, sp.at(Var::a1) * t2 - sp.at(Var::a1p) * t1}};
    auto extract = [&](const P& g, unsigned n, const P& divisor) {
      P gs = g.substitute(kernel);
      std::vector<P> f(n + 1);
      for (unsigned i = 0; i <= n; ++i)
        f[i] = oracle_detail::coeff_of_t(gs, i, n - i).exact_div(divisor);
      return f;
    };

    // S from psi6 - phi6
    P D = b.psi6 - b.phi6;
    if (D.degree_in(Var::y3) > 4) throw InconsistentSystem("psi6 - phi6 has excessive y3-degree");
    auto s = extract(D.slice(Var::y3, 4), 2, Da2);
    for (int i = 0; i < 3; ++i) out.ram.s[i] = s[i];
    if (!(D == expand_bivariate_form(b, out.ram.s)))
      throw InconsistentSystem("S solution fails the full identity");

    if (!T.slice(Var::y3, 18).is_zero() || !T.slice(Var::y3, 17).is_zero())
      throw InconsistentSystem("T has slices beyond the decomposable band");
    auto p = extract(T.slice(Var::y3, 16), 2, Da6);
    for (int i = 0; i < 3; ++i) out.ram.p[i] = p[i];
    P F2P = mul_big(phi2, expand_bivariate_form(b, out.ram.p));
    auto q = extract(T.slice(Var::y3, 14) - F2P.slice(Var::y3, 14), 4, -Da6);
    for (int i = 0; i < 5; ++i) out.ram.q[i] = q[i];
    P F1Q = mul_big(b.phi6, expand_bivariate_form(b, out.ram.q));
    P GU = T.slice(Var::y3, 12) - F2P.slice(Var::y3, 12) - F1Q.slice(Var::y3, 12);
    auto uvec = extract(GU, 6, Da6);
    std::array<P, 7> u;
    for (int i = 0; i < 7; ++i) u[i] = uvec[i];
    // full residual certification of the solved linear system
    P resid = T - F2P - F1Q - expand_bivariate_form(b, u);
    if (!resid.is_zero()) throw InconsistentSystem("decomposition residual is nonzero");
    oracle_detail::finish_r(u, sp, &out);
    return out;
  }

  if (mw == 1 && mwp == 2) {
    // the double-basepoint specialization: w has a quadratic-form lead
    P qb = b.w.slice(Var::y3, 1);
    P lap = sp.at(Var::a1p) * y1 + sp.at(Var::a2p) * y2;
    if (!(b.wp.slice(Var::y3, 2) == lap))
      throw Error("oracle: unexpected top slice of wp");
    std::map<Var, P> kernel{{Var::y1, sp.at(Var::a2p) * t1},
                            {Var::y2, -(sp.at(Var::a1p) * t1)}};
    P rho_t = qb.substitute(kernel);  // rho * t1^2
    P rho = oracle_detail::coeff_of_t(rho_t, 2, 0);
    if (rho.is_zero()) throw InconsistentSystem("degenerate quadratic lead");
    P rho2 = rho * rho, rho4 = rho2 * rho2;
    P phihat = b.phi6.slice(Var::y3, 4);
    if (!(phihat == -(rho * qb))) throw Error("oracle: unexpected top slice of phi6");
    P lap2 = lap * lap;

    // S part, triangular in the y3-grading
    P D = b.psi6 - b.phi6;
    P W02 = b.wp * b.wp, W11 = b.w * b.wp, W20 = b.w * b.w;
    out.ram.s[0] = D.slice(Var::y3, 4).exact_div(lap2);
    out.ram.s[1] = (D.slice(Var::y3, 3) - (out.ram.s[0] * W02).slice(Var::y3, 3)).exact_div(qb * lap);
    out.ram.s[2] = (D.slice(Var::y3, 2) - ((out.ram.s[0] * W02 + out.ram.s[1] * W11)).slice(Var::y3, 2))
                       .exact_div(qb * qb);
    if (!(D == expand_bivariate_form(b, out.ram.s)))
      throw InconsistentSystem("S solution fails the full identity");

    std::array<P, 7> u;
    P res = T;
    auto wpow = [&](unsigned i) {
      P r = P::constant(one);
      for (unsigned k = 0; k < i; ++k) r = r * b.w;
      return r;
    };
    auto wppow = [&](unsigned j) {
      P r = P::constant(one);
      for (unsigned k = 0; k < j; ++k) r = r * b.wp;
      return r;
    };
    auto qbpow = [&](unsigned i) {
      P r = P::constant(one);
      for (unsigned k = 0; k < i; ++k) r = r * qb;
      return r;
    };
    auto lappow = [&](unsigned j) {
      P r = P::constant(one);
      for (unsigned k = 0; k < j; ++k) r = r * lap;
      return r;
    };
    for (int n = 0; n <= 6; ++n) {
      int d = 12 - n;
      P rs = res.slice(Var::y3, d);
      if (n <= 2) {
        P G = rs.exact_div(qbpow(n) * lappow(2 - n));
        out.ram.p[n] = oracle_detail::coeff_of_t(G.substitute(kernel), 4, 0).exact_div(rho4);
        P H = (G - out.ram.p[n] * rho2 * qb * qb).exact_div(lap2);
        out.ram.q[n] = -(oracle_detail::coeff_of_t(H.substitute(kernel), 2, 0).exact_div(rho2));
        u[n] = (H + out.ram.q[n] * rho * qb).exact_div(lap2);
        res = res - mul_big(phi2, out.ram.p[n] * wpow(n) * wppow(2 - n)) -
              mul_big(b.phi6, out.ram.q[n] * wpow(n) * wppow(4 - n)) -
              mul_big(u[n] * wpow(n), wppow(6 - n));
      } else if (n <= 4) {
        P G = rs.exact_div(qbpow(n) * lappow(4 - n));
        out.ram.q[n] = -(oracle_detail::coeff_of_t(G.substitute(kernel), 2, 0).exact_div(rho2));
        u[n] = (G + out.ram.q[n] * rho * qb).exact_div(lap2);
        res = res - mul_big(b.phi6, out.ram.q[n] * wpow(n) * wppow(4 - n)) -
              mul_big(u[n] * wpow(n), wppow(6 - n));
      } else {
        u[n] = rs.exact_div(qbpow(n) * lappow(6 - n));
        res = res - mul_big(u[n] * wpow(n), wppow(6 - n));
      }
    }
    if (!res.is_zero()) throw InconsistentSystem("decomposition residual is nonzero");
    oracle_detail::finish_r(u, sp, &out);
    return out;
  }

  throw Error("oracle: unsupported pencil shape");
}

template <class C>
BasepointSection<C> basepoint_section(const BertiniBundle<C>& b, const C& u2, const C& u3) {
  std::map<Var, C> at{{Var::y1, coef_one_like(u2)}, {Var::y2, u2}, {Var::y3, u3}};
  if (!coef_is_zero(b.w.evaluate(at)) || !coef_is_zero(b.wp.evaluate(at)))
    throw NotABasepoint("(1,u2,u3) does not lie on both cubics");
  BasepointSection<C> out;
  out.u2 = u2;
  out.u3 = u3;
  auto gen = basepoint_su_generic();
  for (int i = 0; i < 3; ++i) {
    PolyQ g = gen[i];
    Poly<C> coef = specialize_generic(g, b.spec);
    std::map<Var, Poly<C>> uat{{Var::u2, Poly<C>::constant(u2)}, {Var::u3, Poly<C>::constant(u3)}};
    out.su[i] = coef.substitute(uat);
  }
  out.psi6_u = b.phi6 + expand_bivariate_form(b, out.su);
  return out;
}

// ---- independent construction of psi6^u by a coordinate change ----

// Shape coefficients of w(Y1, Y2 + u2 Y1, Y3 + u3 Y1).  The discarded Y1^3
// coefficient equals w(1, u2, u3), which vanishes on the basepoint locus.
template <class C>
std::array<Poly<C>, 7> shifted_pencil_entries(const Poly<C>& w, const Poly<C>& u2v,
                                              const Poly<C>& u3v, const PencilSpec<C>& spec) {
  Poly<C> y1 = spec.yvar(Var::y1), y2 = spec.yvar(Var::y2), y3 = spec.yvar(Var::y3);
  std::map<Var, Poly<C>> fwd{{Var::y2, y2 + u2v * y1}, {Var::y3, y3 + u3v * y1}};
  Poly<C> wt = w.substitute(fwd);
  auto coef = [&](unsigned e1, unsigned e2, unsigned e3) {
    return wt.slice(Var::y1, e1).slice(Var::y2, e2).slice(Var::y3, e3);
  };
  return {coef(1, 0, 2), coef(0, 1, 2), coef(2, 0, 1), coef(1, 1, 1),
          coef(0, 2, 1), coef(2, 1, 0), coef(1, 2, 0)};
}

// psi6 of the pencil moved so that the basepoint (1,u2,u3) sits at (1:0:0),
// pulled back to the original coordinates.  Agrees with phi6 + S^u_2(w, wp)
// modulo the two basepoint relations.
template <class C>
Poly<C> psi6_u_independent(const BertiniBundle<C>& b, const Poly<C>& u2v, const Poly<C>& u3v) {
  PencilSpec<C> tspec;
  tspec.unit = b.spec.unit;
  auto te = shifted_pencil_entries(b.w, u2v, u3v, b.spec);
  auto tep = shifted_pencil_entries(b.wp, u2v, u3v, b.spec);
  for (int i = 0; i < 7; ++i) {
    tspec.entry[i] = te[i];
    tspec.entry[i + 7] = tep[i];
  }
  auto tb = build_bundle(tspec, Corrupt::none, BuildLevel::core);
  Poly<C> y1 = b.spec.yvar(Var::y1), y2 = b.spec.yvar(Var::y2), y3 = b.spec.yvar(Var::y3);
  std::map<Var, Poly<C>> back{{Var::y2, y2 - u2v * y1}, {Var::y3, y3 - u3v * y1}};
  return tb.psi6.substitute(back);
}

// lc^deg(p) * p|_{var -> -rest/lc}: clears a relation lc*var + rest = 0
// without leaving the polynomial ring.
template <class C>
Poly<C> pseudo_eliminate(const Poly<C>& p, Var var, const Poly<C>& lc, const Poly<C>& rest) {
  unsigned d = p.degree_in(var);
  Poly<C> out;
  Poly<C> neg_rest = -rest;
  for (unsigned k = 0; k <= d; ++k) {
    Poly<C> piece = p.slice(var, k);
    if (piece.is_zero()) continue;
    for (unsigned i = 0; i < k; ++i) piece = piece * neg_rest;
    for (unsigned i = 0; i < d - k; ++i) piece = piece * lc;
    out = out + piece;
  }
  return out;
}

}  // namespace bertini

#endif
