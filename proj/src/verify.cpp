#include "bertini/verify.hpp"

#include <chrono>
#include <functional>
#include <iostream>

#include "bertini/fproots.hpp"
#include "bertini/geiser.hpp"
#include "bertini/poly_sliced.hpp"
#include "bertini/rng.hpp"

namespace bertini {

namespace {

struct CheckFailure {
  std::map<std::string, std::string> witness;
};

[[noreturn]] void fail(std::string detail) {
  throw CheckFailure{{{"detail", std::move(detail)}}};
}

void expect_zero(const PolyQ& p, const char* what) {
  if (p.is_zero()) return;
  throw CheckFailure{{{"detail", std::string(what) + " is a nonzero polynomial"},
                      {"terms", std::to_string(p.size())}}};
}

void expect(bool ok, const char* what) {
  if (!ok) fail(what);
}

// ---- shared generic constructions, built once per suite run ----

struct Ctx {
  VerifyOptions opts;
  bool z_phi_identity_ok = false;
  bool z_psi_identity_ok = false;
  std::optional<BertiniBundle<Rat>> bundle_;
  std::optional<BertiniBundle<Rat>> gspec_;
  std::optional<GeiserBundle<Rat>> geiser_;
  std::optional<RamData<Rat>> closed_;

  const BertiniBundle<Rat>& bundle() {
    if (!bundle_) bundle_ = build_bundle(generic_pencil(), opts.corrupt);
    return *bundle_;
  }
  const BertiniBundle<Rat>& gspec() {
    if (!gspec_) gspec_ = build_bundle(generic_geiser_pencil(), opts.corrupt);
    return *gspec_;
  }
  const GeiserBundle<Rat>& geiser() {
    if (!geiser_) geiser_ = build_geiser(generic_geiser_pencil());
    return *geiser_;
  }
  const RamData<Rat>& closed() {
    if (!closed_) closed_ = ram_closed_form();
    return *closed_;
  }
};

// ---- one modular trial: a full assignment of the variable universe ----

struct Draw {
  std::array<Fp, 21> v;
  std::uint64_t prime = 0;

  Fp at(Var x) const { return v[idx(x)]; }

  std::map<Var, Fp> point() const {
    return {{Var::y1, at(Var::y1)}, {Var::y2, at(Var::y2)}, {Var::y3, at(Var::y3)}};
  }

  PencilSpec<Fp> spec(bool geiser) const {
    std::array<Fp, 14> vals;
    for (int i = 0; i < 14; ++i) vals[i] = v[i];
    if (geiser) {
      vals[idx(Var::a1)] = Fp(0, prime);
      vals[idx(Var::a2)] = Fp(0, prime);
    }
    return PencilSpec<Fp>::from_values(vals);
  }

  std::map<std::string, std::string> witness(unsigned trial) const {
    std::map<std::string, std::string> w;
    w["trial"] = std::to_string(trial);
    for (int i = 0; i < kNumVars; ++i) w[var_name(var_at(i))] = v[i].to_string();
    return w;
  }
};

Draw draw_all(SplitMix64& rng, std::uint64_t prime) {
  Draw d;
  d.prime = prime;
  for (int i = 0; i < kNumVars; ++i) d.v[i] = Fp(rng.below(prime), prime);
  return d;
}

// per-trial concrete constructions, built on demand
struct ModEnv {
  Draw d;
  Corrupt corrupt = Corrupt::none;
  std::optional<BertiniBundle<Fp>> bundle_;
  std::optional<BertiniBundle<Fp>> gspec_;
  std::optional<GeiserBundle<Fp>> geiser_;
  std::optional<RamData<Fp>> ram_;
  std::optional<RamData<Fp>> gram_;

  const BertiniBundle<Fp>& bundle() {
    if (!bundle_) bundle_ = build_bundle(d.spec(false), corrupt);
    return *bundle_;
  }
  const BertiniBundle<Fp>& gspec() {
    if (!gspec_) gspec_ = build_bundle(d.spec(true), corrupt);
    return *gspec_;
  }
  const GeiserBundle<Fp>& geiser() {
    if (!geiser_) geiser_ = build_geiser(d.spec(true));
    return *geiser_;
  }
  const RamData<Fp>& ram() {
    if (!ram_) ram_ = ram_eval(d.spec(false));
    return *ram_;
  }
  const RamData<Fp>& gram() {
    if (!gram_) gram_ = ram_eval(d.spec(true));
    return *gram_;
  }

  Fp eval(const Poly<Fp>& f) { return f.evaluate(d.point()); }

  void expect_zero(const Fp& x, const char* what) {
    if (!x.is_zero()) throw CheckFailure{[&] {
      auto w = d.witness(0);
      w["detail"] = what;
      return w;
    }()};
  }
};

// symbolic checks return the trial count to report (0 except for the checks
// that may degrade to modular mode)
using SymbolicFn = std::function<unsigned(Ctx&)>;
using ModularFn = std::function<void(ModEnv&)>;

struct CheckDef {
  const char* name;
  Suite suite;
  SymbolicFn symbolic;
  ModularFn modular;
};

// ---- helpers shared by several checks ----

// partial derivatives of the cubic-shape polynomial of the pencil member
// through y, evaluated at x = y
template <class C>
Poly<C> dW3_at_y(const BertiniBundle<C>& b, int which) {
  Poly<C> y1 = b.spec.yvar(Var::y1), y2 = b.spec.yvar(Var::y2), y3 = b.spec.yvar(Var::y3);
  Poly<C> two = Poly<C>::constant(b.spec.unit + b.spec.unit);
  if (which == 1)
    return y3 * y3 * b.A1 + y3 * (two * b.B1 * y1 + b.B2 * y2) + two * b.C1 * y1 * y2 +
           b.C2 * y2 * y2;
  if (which == 2)
    return y3 * y3 * b.A2 + y3 * (b.B2 * y1 + two * b.B3 * y2) + b.C1 * y1 * y1 +
           two * b.C2 * y1 * y2;
  return two * (y3 * (b.A1 * y1 + b.A2 * y2)) + b.B1 * y1 * y1 + b.B2 * y1 * y2 +
         b.B3 * y2 * y2;
}

// closed-form bivariate forms pushed through w, wp
template <class C, std::size_t N>
Poly<C> form_in_cubics(const BertiniBundle<C>& b, const std::array<Poly<C>, N>& coeffs) {
  return expand_bivariate_form(b, coeffs);
}

PolyQ geiser_form_in_cubics(const GeiserBundle<Rat>& g, const auto& coeffs) {
  const std::size_t n = coeffs.size() - 1;
  PolyQ acc;
  for (std::size_t i = 0; i <= n; ++i) {
    if (coeffs[i].is_zero()) continue;
    PolyQ term = coeffs[i];
    for (std::size_t k = 0; k < i; ++k) term = term * g.w;
    for (std::size_t k = 0; k < n - i; ++k) term = term * g.wp;
    acc = acc + term;
  }
  return acc;
}

Fp eval_mod(const PolyQ& f, const Draw& d) {
  Fp acc(0, d.prime);
  for (auto& t : f.terms()) {
    Fp c = fp_from_rat(t.c, d.prime);
    for (int i = 0; i < kNumVars; ++i)
      for (unsigned e = 0; e < t.m.d[i]; ++e) c *= d.v[i];
    acc += c;
  }
  return acc;
}

// scalar cubic shape w(x) for free-input self-tests
Fp shape_at(const std::array<Fp, 7>& e, const std::array<Fp, 3>& x) {
  return x[2] * x[2] * (e[0] * x[0] + e[1] * x[1]) +
         x[2] * (e[2] * x[0] * x[0] + e[3] * x[0] * x[1] + e[4] * x[1] * x[1]) +
         x[0] * x[1] * (e[5] * x[0] + e[6] * x[1]);
}

Fp shape_d1(const std::array<Fp, 7>& e, const std::array<Fp, 3>& x) {
  Fp two(2, x[0].p);
  return x[2] * x[2] * e[0] + x[2] * (two * e[2] * x[0] + e[3] * x[1]) +
         two * e[5] * x[0] * x[1] + e[6] * x[1] * x[1];
}
Fp shape_d2(const std::array<Fp, 7>& e, const std::array<Fp, 3>& x) {
  Fp two(2, x[0].p);
  return x[2] * x[2] * e[1] + x[2] * (e[3] * x[0] + two * e[4] * x[1]) + e[5] * x[0] * x[0] +
         two * e[6] * x[0] * x[1];
}
Fp shape_d3(const std::array<Fp, 7>& e, const std::array<Fp, 3>& x) {
  Fp two(2, x[0].p);
  return two * x[2] * (e[0] * x[0] + e[1] * x[1]) + e[2] * x[0] * x[0] + e[3] * x[0] * x[1] +
         e[4] * x[1] * x[1];
}

// W(a+b) == W(a) + <grad W(a), b> + <grad W(b), a> + W(b) on random free
// inputs: validates the derivative shapes used by the W3(z) reduction.
void polarization_selftest(std::uint64_t prime, std::uint64_t seed) {
  SplitMix64 rng = stream_for(seed, "polarization_selftest");
  for (int t = 0; t < 10; ++t) {
    std::array<Fp, 7> e;
    for (auto& x : e) x = Fp(rng.below(prime), prime);
    std::array<Fp, 3> a, b, ab;
    for (int i = 0; i < 3; ++i) {
      a[i] = Fp(rng.below(prime), prime);
      b[i] = Fp(rng.below(prime), prime);
      ab[i] = a[i] + b[i];
    }
    Fp lhs = shape_at(e, ab);
    Fp cross1 = shape_d1(e, a) * b[0] + shape_d2(e, a) * b[1] + shape_d3(e, a) * b[2];
    Fp cross2 = shape_d1(e, b) * a[0] + shape_d2(e, b) * a[1] + shape_d3(e, b) * a[2];
    Fp rhs = shape_at(e, a) + cross1 + cross2 + shape_at(e, b);
    if (!(lhs == rhs)) fail("cubic polarization self-test failed");
  }
}

// ---- the catalogue ----

std::vector<CheckDef> catalogue() {
  std::vector<CheckDef> defs;
  auto add = [&](const char* name, Suite suite, SymbolicFn s, ModularFn m) {
    defs.push_back({name, suite, std::move(s), std::move(m)});
  };

  // -------- bertini --------
  add("bertini_identity_r_phi6", Suite::bertini,
      [](Ctx& c) -> unsigned {
        auto& b = c.bundle();
        PolyQ y1 = qvar(Var::y1), y3 = qvar(Var::y3);
        expect_zero(y3 * b.r1 - y1 * b.r3 - b.A2 * b.gamma4 * b.phi6, "y3 r1 - y1 r3 - A2 g4 phi6");
        return 0;
      },
      [](ModEnv& m) {
        auto& b = m.bundle();
        auto d = m.d;
        Fp v = d.at(Var::y3) * m.eval(b.r1) - d.at(Var::y1) * m.eval(b.r3) -
               m.eval(b.A2) * m.eval(b.gamma4) * m.eval(b.phi6);
        m.expect_zero(v, "y3 r1 - y1 r3 - A2 g4 phi6");
      });

  add("bertini_identity_r_psi6", Suite::bertini,
      [](Ctx& c) -> unsigned {
        auto& b = c.bundle();
        PolyQ y2 = qvar(Var::y2), y3 = qvar(Var::y3);
        expect_zero(y2 * b.r3 - y3 * b.r2 - b.A1 * b.gamma4 * b.psi6, "y2 r3 - y3 r2 - A1 g4 psi6");
        return 0;
      },
      [](ModEnv& m) {
        auto& b = m.bundle();
        auto d = m.d;
        Fp v = d.at(Var::y2) * m.eval(b.r3) - d.at(Var::y3) * m.eval(b.r2) -
               m.eval(b.A1) * m.eval(b.gamma4) * m.eval(b.psi6);
        m.expect_zero(v, "y2 r3 - y3 r2 - A1 g4 psi6");
      });

  add("bertini_identity_r_cross", Suite::bertini,
      [](Ctx& c) -> unsigned {
        auto& b = c.bundle();
        PolyQ y1 = qvar(Var::y1), y2 = qvar(Var::y2);
        expect_zero(y1 * b.r2 - y2 * b.r1 + b.rp1 * b.gamma4, "y1 r2 - y2 r1 + rp1 g4");
        return 0;
      },
      [](ModEnv& m) {
        auto& b = m.bundle();
        auto d = m.d;
        Fp v = d.at(Var::y1) * m.eval(b.r2) - d.at(Var::y2) * m.eval(b.r1) +
               m.eval(b.rp1) * m.eval(b.gamma4);
        m.expect_zero(v, "y1 r2 - y2 r1 + rp1 g4");
      });

  add("bertini_identity_z_phi6", Suite::bertini,
      [](Ctx& c) -> unsigned {
        auto& b = c.bundle();
        PolyQ y1 = qvar(Var::y1), y3 = qvar(Var::y3);
        expect_zero(y3 * b.z1 - y1 * b.z3 + b.phi6 * b.K * b.A2, "y3 z1 - y1 z3 + phi6 K A2");
        c.z_phi_identity_ok = true;
        return 0;
      },
      [](ModEnv& m) {
        auto& b = m.bundle();
        auto d = m.d;
        Fp v = d.at(Var::y3) * m.eval(b.z1) - d.at(Var::y1) * m.eval(b.z3) +
               m.eval(b.phi6) * m.eval(b.K) * m.eval(b.A2);
        m.expect_zero(v, "y3 z1 - y1 z3 + phi6 K A2");
      });

  add("bertini_identity_z_psi6", Suite::bertini,
      [](Ctx& c) -> unsigned {
        auto& b = c.bundle();
        PolyQ y2 = qvar(Var::y2), y3 = qvar(Var::y3);
        expect_zero(y2 * b.z3 - y3 * b.z2 + b.psi6 * b.K * b.A1, "y2 z3 - y3 z2 + psi6 K A1");
        c.z_psi_identity_ok = true;
        return 0;
      },
      [](ModEnv& m) {
        auto& b = m.bundle();
        auto d = m.d;
        Fp v = d.at(Var::y2) * m.eval(b.z3) - d.at(Var::y3) * m.eval(b.z2) +
               m.eval(b.psi6) * m.eval(b.K) * m.eval(b.A1);
        m.expect_zero(v, "y2 z3 - y3 z2 + psi6 K A1");
      });

  add("bertini_tangency", Suite::bertini,
      [](Ctx& c) -> unsigned {
        auto& b = c.bundle();
        expect_zero(b.A1 * b.r1 + b.A2 * b.r2, "A1 r1 + A2 r2");
        return 0;
      },
      [](ModEnv& m) {
        auto& b = m.bundle();
        m.expect_zero(m.eval(b.A1) * m.eval(b.r1) + m.eval(b.A2) * m.eval(b.r2),
                      "A1 r1 + A2 r2");
      });

  add("bertini_W3_r", Suite::bertini,
      [](Ctx& c) -> unsigned {
        auto& b = c.bundle();
        // w(r) = A1 A2 rp1 * G_w and likewise for wp, so W3(r) vanishes iff
        // G_w wp - G_wp w does.  G_w = AArp3sq*ga + rp3rp1*gb + rp1sq*gc with
        // small cofactors; fusing the six products into one sliced pass never
        // materializes G_w itself.
        const auto& sp = b.spec;
        PolyQ AArp3sq = b.A1 * b.A2 * (b.rp3 * b.rp3);
        PolyQ rp3rp1 = b.rp3 * b.rp1;
        PolyQ rp1sq = mul_big(b.rp1, b.rp1);
        PolyQ A11 = b.A1 * b.A1, A12 = b.A1 * b.A2, A22 = b.A2 * b.A2;
        auto cof_a = [&](Var a1v, Var a2v) { return sp.at(a1v) * b.A2 - sp.at(a2v) * b.A1; };
        auto cof_b = [&](Var b1v, Var b2v, Var b3v) {
          return sp.at(b1v) * A22 - sp.at(b2v) * A12 + sp.at(b3v) * A11;
        };
        auto cof_c = [&](Var c1v, Var c2v) { return sp.at(c2v) * b.A1 - sp.at(c1v) * b.A2; };
        PolyQ ga = cof_a(Var::a1, Var::a2) * b.wp - cof_a(Var::a1p, Var::a2p) * b.w;
        PolyQ gb = cof_b(Var::b1, Var::b2, Var::b3) * b.wp -
                   cof_b(Var::b1p, Var::b2p, Var::b3p) * b.w;
        PolyQ gc = cof_c(Var::c1, Var::c2) * b.wp - cof_c(Var::c1p, Var::c2p) * b.w;
        {
          Sliced s1 = y3_slices(AArp3sq), f1 = y3_slices(ga);
          Sliced s2 = y3_slices(rp3rp1), f2 = y3_slices(gb);
          Sliced s3 = y3_slices(rp1sq), f3 = y3_slices(gc);
          Sliced diff =
              slices_combine({{&s1, &f1, false}, {&s2, &f2, false}, {&s3, &f3, false}});
          if (!slices_zero(diff)) fail("Gw wp - Gwp w is nonzero");
        }
        // numeric guard that the factorization w(r) = A1 A2 rp1 Gw was
        // transcribed right
        SplitMix64 rng = stream_for(c.opts.seed, "bertini_W3_r");
        for (int t = 0; t < 3; ++t) {
          Draw d = draw_all(rng, c.opts.prime);
          ModEnv env;
          env.d = d;
          auto& cb = env.bundle();
          std::map<Var, Fp> at{{Var::y1, env.eval(cb.r1)}, {Var::y2, env.eval(cb.r2)},
                               {Var::y3, env.eval(cb.r3)}};
          Fp wr = cb.w.evaluate(at);
          Fp gw_val = eval_mod(AArp3sq, d) * eval_mod(cof_a(Var::a1, Var::a2), d) +
                      eval_mod(rp3rp1, d) * eval_mod(cof_b(Var::b1, Var::b2, Var::b3), d) +
                      eval_mod(rp1sq, d) * eval_mod(cof_c(Var::c1, Var::c2), d);
          Fp rhs = env.eval(cb.A1) * env.eval(cb.A2) * env.eval(cb.rp1) * gw_val;
          if (!(wr == rhs)) fail("factored w(r) disagrees with direct substitution");
        }
        return 0;
      },
      [](ModEnv& m) {
        auto& b = m.bundle();
        std::map<Var, Fp> at{{Var::y1, m.eval(b.r1)}, {Var::y2, m.eval(b.r2)},
                             {Var::y3, m.eval(b.r3)}};
        Fp v = b.w.evaluate(at) * m.eval(b.wp) - b.wp.evaluate(at) * m.eval(b.w);
        m.expect_zero(v, "W3(r)");
      });

  add("bertini_W3_z", Suite::bertini,
      [](Ctx& c) -> unsigned {
        auto& b = c.bundle();
        PolyQ y1 = qvar(Var::y1), y2 = qvar(Var::y2), y3 = qvar(Var::y3);
        // free-input check of the polarization formulas used below
        polarization_selftest(c.opts.prime, c.opts.seed);
        // W3(y) = 0 identically
        expect_zero(W3_of(b, y1, y2, y3), "W3(y)");
        // the two z-identities let W3(z)*y3^3 factor through K; they are
        // their own catalogue entries, so only re-verify when this check runs
        // before (or without) them
        if (!c.z_phi_identity_ok)
          expect_zero(y3 * b.z1 - y1 * b.z3 + b.phi6 * b.K * b.A2, "z identity (phi side)");
        if (!c.z_psi_identity_ok)
          expect_zero(y2 * b.z3 - y3 * b.z2 + b.psi6 * b.K * b.A1, "z identity (psi side)");
        PolyQ beta1 = (b.A1 * y3 + b.B1 * y1).exact_div(y2);
        PolyQ beta3 = (b.A2 * y3 + b.B3 * y2).exact_div(y1);
        expect_zero(b.K - (b.psi6 * beta1 - b.phi6 * beta3), "K bracket split");
        // with t1, t2 standing for phi6, psi6:
        //   y3^3 W3(z) = K * t1 t2 * B(t1,t2)|_{t->phi,psi}
        PolyQ t1 = qvar(Var::t1), t2 = qvar(Var::t2);
        PolyQ d1 = dW3_at_y(b, 1), d2 = dW3_at_y(b, 2);
        PolyQ Dv = t2 * (b.A1 * d2) - t1 * (b.A2 * d1);
        PolyQ X20 = y2 * (b.A2 * b.A2 * b.C1) + y3 * (b.B1 * b.A2 * b.A2);
        PolyQ X11 = -(qconst(2) * (y1 * (b.A1 * b.A2 * b.C1) + y2 * (b.A1 * b.A2 * b.C2)) +
                      y3 * (b.B2 * b.A1 * b.A2));
        PolyQ X02 = y1 * (b.A1 * b.A1 * b.C2) + y3 * (b.B3 * b.A1 * b.A1);
        PolyQ Dyv = t1 * t1 * X20 + t1 * t2 * X11 + t2 * t2 * X02;
        PolyQ Kt = t2 * beta1 - t1 * beta3;
        PolyQ W3vcore = b.A1 * b.A2 * (b.C1 * b.A2 * t1 - b.C2 * b.A1 * t2);
        PolyQ Bt = t1 * t2 * (b.C5 * b.C5) * Dv + b.C5 * (Kt * Dyv) + Kt * Kt * W3vcore;
        // every term must carry total t-degree 3, else slicing below would
        // silently drop content
        for (auto& bt : Bt.terms())
          if (bt.m.exp(Var::t1) + bt.m.exp(Var::t2) != 3)
            fail("B(t) is not a homogeneous cubic in (t1, t2)");
        // end-to-end numeric guard of the polarization reduction:
        //   y3^3 W3(z) = K phi6 psi6 B(phi6, psi6)  and  W3(z) = 0
        // at random points
        {
          SplitMix64 rng = stream_for(c.opts.seed, "bertini_W3_z");
          for (int t = 0; t < 3; ++t) {
            Draw d = draw_all(rng, c.opts.prime);
            ModEnv env;
            env.d = d;
            auto& cb = env.bundle();
            std::map<Var, Fp> at{{Var::y1, env.eval(cb.z1)}, {Var::y2, env.eval(cb.z2)},
                                 {Var::y3, env.eval(cb.z3)}};
            Fp w3z = cb.w.evaluate(at) * env.eval(cb.wp) - cb.wp.evaluate(at) * env.eval(cb.w);
            Fp y3v = d.at(Var::y3);
            Draw dt = d;
            dt.v[idx(Var::t1)] = env.eval(cb.phi6);
            dt.v[idx(Var::t2)] = env.eval(cb.psi6);
            Fp btv = eval_mod(Bt, dt);
            Fp lhs = y3v * y3v * y3v * w3z;
            Fp expected = env.eval(cb.K) * env.eval(cb.phi6) * env.eval(cb.psi6) * btv;
            if (!(lhs == expected)) fail("polarization reduction failed numerically");
            if (!w3z.is_zero()) fail("W3(z) nonzero at a random point");
          }
        }
        // B = Phi^2 (Phi S0 + Psi S1) + Psi^2 (Phi S2 + Psi S3) at t = (Phi, Psi);
        // with coprime Phi, Psi:  U = Psi^2 g forces V = -Phi^2 g, and then B
        // vanishes identically
        std::array<PolyQ, 4> S;
        for (int j = 0; j <= 3; ++j) S[j] = Bt.slice(Var::t1, 3 - j).slice(Var::t2, j);
        Bt = PolyQ::zero();
        Sliced sphi = y3_slices(b.phi6), spsi = y3_slices(b.psi6);
        PolyQ psi2 = b.psi6 * b.psi6, phi2 = b.phi6 * b.phi6;
        Sliced spsi2 = y3_slices(psi2), sphi2 = y3_slices(phi2);
        Sliced g;
        {
          Sliced s0 = y3_slices(S[0]), s1 = y3_slices(S[1]);
          S[0] = S[1] = PolyQ::zero();
          Sliced U = slices_combine({{&sphi, &s0, false}, {&spsi, &s1, false}});
          g = slices_divide_exact(U, spsi2);
        }
        {
          Sliced s2 = y3_slices(S[2]), s3 = y3_slices(S[3]);
          S[2] = S[3] = PolyQ::zero();
          Sliced V = slices_combine({{&sphi, &s2, false}, {&spsi, &s3, false}});
          s2.clear();
          s3.clear();
          Sliced rest = slices_combine({{&sphi2, &g, false}}, {{&V, false}});
          if (!slices_zero(rest)) fail("V + Phi^2 (U / Psi^2) is nonzero");
        }
        return 0;
      },
      [](ModEnv& m) {
        auto& b = m.bundle();
        std::map<Var, Fp> at{{Var::y1, m.eval(b.z1)}, {Var::y2, m.eval(b.z2)},
                             {Var::y3, m.eval(b.z3)}};
        Fp v = b.w.evaluate(at) * m.eval(b.wp) - b.wp.evaluate(at) * m.eval(b.w);
        m.expect_zero(v, "W3(z)");
      });

  add("bertini_double_vanishing", Suite::bertini,
      [](Ctx& c) -> unsigned {
        auto& b = c.bundle();
        for (const PolyQ* f : {&b.phi6, &b.psi6}) {
          for (int vertex = 0; vertex < 2; ++vertex) {
            std::map<Var, PolyQ> at{{Var::y1, qconst(vertex == 0 ? 1 : 0)},
                                    {Var::y2, qconst(vertex == 0 ? 0 : 1)},
                                    {Var::y3, qconst(0)}};
            expect_zero(f->substitute(at), "sextic value at a vertex");
            for (Var yv : {Var::y1, Var::y2, Var::y3})
              expect_zero(f->derivative(yv).substitute(at), "sextic first partial at a vertex");
          }
        }
        return 0;
      },
      [](ModEnv& m) {
        auto& b = m.bundle();
        Fp one(1, m.d.prime), zero(0, m.d.prime);
        for (const Poly<Fp>* f : {&b.phi6, &b.psi6}) {
          for (int vertex = 0; vertex < 2; ++vertex) {
            std::map<Var, Fp> at{{Var::y1, vertex == 0 ? one : zero},
                                 {Var::y2, vertex == 0 ? zero : one},
                                 {Var::y3, zero}};
            m.expect_zero(f->evaluate(at), "sextic value at a vertex");
            for (Var yv : {Var::y1, Var::y2, Var::y3})
              m.expect_zero(f->derivative(yv).evaluate(at), "sextic partial at a vertex");
          }
        }
      });

  // -------- sigma2 --------
  add("sigma2_eq_psi", Suite::sigma2,
      [](Ctx& c) -> unsigned {
        auto& b = c.bundle();
        expect_zero(b.psi6 - b.phi6 - form_in_cubics(b, c.closed().s), "psi6 - phi6 - S2(w,wp)");
        return 0;
      },
      [](ModEnv& m) {
        auto& b = m.bundle();
        Fp wv = m.eval(b.w), wpv = m.eval(b.wp);
        auto& r = m.ram();
        Fp S = r.s[0].constant_value() * wpv * wpv + r.s[1].constant_value() * wv * wpv +
               r.s[2].constant_value() * wv * wv;
        m.expect_zero(m.eval(b.psi6) - m.eval(b.phi6) - S, "psi6 - phi6 - S2(w,wp)");
      });

  add("sigma2_eq_K2", Suite::sigma2,
      [](Ctx& c) -> unsigned {
        try {
          TermBudgetGuard guard(c.opts.mem_budget / kBytesPerTerm);
          auto& b = c.bundle();
          auto& cf = c.closed();
          PolyQ K2 = mul_big(b.K, b.K);
          PolyQ phi2 = b.phi6 * b.phi6;
          PolyQ phi3 = mul_big(phi2, b.phi6);
          PolyQ Pww = form_in_cubics(b, cf.p);
          PolyQ Qww = form_in_cubics(b, cf.q);
          PolyQ Rww = form_in_cubics(b, cf.r);
          PolyQ resid = K2 + phi3.scaled(Rat(4)) - mul_big(phi2, Pww) - mul_big(b.phi6, Qww) -
                        mul_big(Rww, Rww);
          expect_zero(resid, "K^2 + 4 phi6^3 - phi6^2 P - phi6 Q - R^2");
          return 0;
        } catch (const BudgetExceeded&) {
          // degrade to randomized modular verification; the reported trial
          // count signals which mode ran
          unsigned trials = std::max(40u, c.opts.trials);
          SplitMix64 rng = stream_for(c.opts.seed, "sigma2_eq_K2");
          for (unsigned t = 0; t < trials; ++t) {
            Draw d = draw_all(rng, c.opts.prime);
            ModEnv env;
            env.d = d;
            env.corrupt = c.opts.corrupt;
            auto& b = env.bundle();
            auto& r = env.ram();
            Fp wv = env.eval(b.w), wpv = env.eval(b.wp), K = env.eval(b.K),
               phi = env.eval(b.phi6);
            auto form = [&](const auto& coeffs) {
              Fp acc(0, d.prime);
              const std::size_t n = coeffs.size() - 1;
              for (std::size_t i = 0; i <= n; ++i) {
                Fp term = coeffs[i].constant_value();
                for (std::size_t k = 0; k < i; ++k) term *= wv;
                for (std::size_t k = 0; k < n - i; ++k) term *= wpv;
                acc += term;
              }
              return acc;
            };
            Fp P = form(r.p), Q = form(r.q), R = form(r.r);
            Fp four(4, d.prime);
            Fp v = K * K + four * phi * phi * phi - phi * phi * P - phi * Q - R * R;
            if (!v.is_zero()) {
              auto w = d.witness(t);
              w["detail"] = "K^2 relation failed at a random point";
              throw CheckFailure{w};
            }
          }
          return trials;
        }
      },
      [](ModEnv& m) {
        auto& b = m.bundle();
        auto& r = m.ram();
        Fp wv = m.eval(b.w), wpv = m.eval(b.wp), K = m.eval(b.K), phi = m.eval(b.phi6);
        auto form = [&](const auto& coeffs) {
          Fp acc(0, m.d.prime);
          const std::size_t n = coeffs.size() - 1;
          for (std::size_t i = 0; i <= n; ++i) {
            Fp term = coeffs[i].constant_value();
            for (std::size_t k = 0; k < i; ++k) term *= wv;
            for (std::size_t k = 0; k < n - i; ++k) term *= wpv;
            acc += term;
          }
          return acc;
        };
        Fp P = form(r.p), Q = form(r.q), R = form(r.r);
        Fp four(4, m.d.prime);
        m.expect_zero(K * K + four * phi * phi * phi - phi * phi * P - phi * Q - R * R,
                      "K^2 relation");
      });

  add("sigma2_prime_swap_symmetry", Suite::sigma2,
      [](Ctx& c) -> unsigned {
        auto& b = c.bundle();
        auto& cf = c.closed();
        PolyQ S = form_in_cubics(b, cf.s), P = form_in_cubics(b, cf.p),
              Q = form_in_cubics(b, cf.q), R = form_in_cubics(b, cf.r);
        expect_zero(S.swap_primes() - S, "S2(w,wp) under the prime swap");
        expect_zero(P.swap_primes() - P, "P2(w,wp) under the prime swap");
        expect_zero(Q.swap_primes() - Q, "Q4(w,wp) under the prime swap");
        expect_zero(R.swap_primes() + R, "R3(w,wp) under the prime swap");
        return 0;
      },
      [](ModEnv& m) {
        // evaluate at the draw and at the prime-swapped draw
        Draw swapped = m.d;
        for (int i = 0; i < 7; ++i) std::swap(swapped.v[i], swapped.v[i + 7]);
        ModEnv env2;
        env2.d = swapped;
        env2.corrupt = m.corrupt;
        auto& b1 = m.bundle();
        auto& b2 = env2.bundle();
        auto& r1 = m.ram();
        auto& r2 = env2.ram();
        Fp w1 = m.eval(b1.w), wp1 = m.eval(b1.wp);
        Fp w2 = env2.eval(b2.w), wp2 = env2.eval(b2.wp);
        auto form = [](const auto& coeffs, Fp wv, Fp wpv) {
          Fp acc(0, wv.p);
          const std::size_t n = coeffs.size() - 1;
          for (std::size_t i = 0; i <= n; ++i) {
            Fp term = coeffs[i].constant_value();
            for (std::size_t k = 0; k < i; ++k) term *= wv;
            for (std::size_t k = 0; k < n - i; ++k) term *= wpv;
            acc += term;
          }
          return acc;
        };
        m.expect_zero(form(r1.s, w1, wp1) - form(r2.s, w2, wp2), "S2 symmetry");
        m.expect_zero(form(r1.p, w1, wp1) - form(r2.p, w2, wp2), "P2 symmetry");
        m.expect_zero(form(r1.q, w1, wp1) - form(r2.q, w2, wp2), "Q4 symmetry");
        m.expect_zero(form(r1.r, w1, wp1) + form(r2.r, w2, wp2), "R3 antisymmetry");
      });

  add("sigma2_oracle_agreement", Suite::sigma2,
      [](Ctx& c) -> unsigned {
        auto res = ram_oracle(c.bundle());
        auto& cf = c.closed();
        for (int i = 0; i < 3; ++i) expect(res.ram.s[i] == cf.s[i], "oracle s mismatch");
        for (int i = 0; i < 3; ++i) expect(res.ram.p[i] == cf.p[i], "oracle p mismatch");
        for (int i = 0; i < 5; ++i) expect(res.ram.q[i] == cf.q[i], "oracle q mismatch");
        for (int i = 0; i < 4; ++i) expect(res.ram.r[i] == cf.r[i], "oracle r mismatch");
        return 0;
      },
      [](ModEnv& m) {
        auto res = ram_oracle(m.bundle());
        auto& cf = m.ram();
        for (int i = 0; i < 3; ++i)
          m.expect_zero(res.ram.s[i].constant_value() - cf.s[i].constant_value(), "oracle s");
        for (int i = 0; i < 3; ++i)
          m.expect_zero(res.ram.p[i].constant_value() - cf.p[i].constant_value(), "oracle p");
        for (int i = 0; i < 5; ++i)
          m.expect_zero(res.ram.q[i].constant_value() - cf.q[i].constant_value(), "oracle q");
        for (int i = 0; i < 4; ++i)
          m.expect_zero(res.ram.r[i].constant_value() - cf.r[i].constant_value(), "oracle r");
      });

  add("sigma2_basepoint_section", Suite::sigma2,
      [](Ctx& c) -> unsigned {
        // generic: the independent construction agrees with phi6 + S^u(w,wp)
        // modulo the two basepoint relations, eliminated through c1 and c1p
        auto b = build_bundle(generic_pencil(), c.opts.corrupt, BuildLevel::core);
        PolyQ u2v = qvar(Var::u2), u3v = qvar(Var::u3);
        PolyQ psi_u = psi6_u_independent(b, u2v, u3v);
        auto su = basepoint_su_generic();
        PolyQ su_form = su[0] * (b.wp * b.wp) + su[1] * (b.w * b.wp) + su[2] * (b.w * b.w);
        PolyQ res = psi_u - b.phi6 - su_form;
        std::map<Var, PolyQ> atbp{{Var::y1, qconst(1)}, {Var::y2, u2v}, {Var::y3, u3v}};
        PolyQ rel1 = b.w.substitute(atbp), rel2 = b.wp.substitute(atbp);
        expect(rel1.degree_in(Var::c1) == 1 && rel2.degree_in(Var::c1p) == 1,
               "basepoint relations not linear in c1, c1p");
        res = pseudo_eliminate(res, Var::c1, rel1.slice(Var::c1, 1), rel1.slice(Var::c1, 0));
        res = pseudo_eliminate(res, Var::c1p, rel2.slice(Var::c1p, 1), rel2.slice(Var::c1p, 0));
        expect_zero(res, "psi6^u - phi6 - S^u(w,wp) modulo the basepoint relations");
        return 0;
      },
      [](ModEnv& m) {
        // build a pencil with the basepoint (1, u2, u3) and test the section
        const std::uint64_t p = m.d.prime;
        Fp u2 = m.d.at(Var::u2), u3 = m.d.at(Var::u3);
        if (u2.is_zero()) u2 = Fp(1, p);
        std::array<Fp, 14> vals;
        for (int i = 0; i < 14; ++i) vals[i] = m.d.v[i];
        auto solve_c1 = [&](int base) {
          Fp rest = u3 * u3 * (vals[base] + vals[base + 1] * u2) +
                    u3 * (vals[base + 2] + vals[base + 3] * u2 + vals[base + 4] * u2 * u2) +
                    vals[base + 6] * u2 * u2;
          vals[base + 5] = fp_div(-rest, u2);
        };
        solve_c1(0);
        solve_c1(7);
        auto spec = PencilSpec<Fp>::from_values(vals);
        auto b = build_bundle(spec, Corrupt::none, BuildLevel::core);
        auto sec = basepoint_section(b, u2, u3);
        std::map<Var, Fp> at{{Var::y1, Fp(1, p)}, {Var::y2, u2}, {Var::y3, u3}};
        m.expect_zero(sec.psi6_u.evaluate(at), "psi6^u at the basepoint");
        for (Var yv : {Var::y1, Var::y2, Var::y3})
          m.expect_zero(sec.psi6_u.derivative(yv).evaluate(at), "psi6^u partial at the basepoint");
        // independent construction agrees on the nose at a concrete basepoint
        Poly<Fp> u2c = Poly<Fp>::constant(u2), u3c = Poly<Fp>::constant(u3);
        Poly<Fp> indep = psi6_u_independent(b, u2c, u3c);
        if (!(indep == sec.psi6_u)) {
          auto w = m.d.witness(0);
          w["detail"] = "independent psi6^u construction disagrees";
          throw CheckFailure{w};
        }
      });

  // -------- geiser --------
  add("geiser_splittings", Suite::geiser,
      [](Ctx& c) -> unsigned {
        auto& s = c.gspec();   // generic construction specialized to a1 = a2 = 0
        auto& g = c.geiser();  // independent reduced construction
        expect_zero(s.gamma4 - s.w * g.gamma1, "gamma4 - w gamma1");
        expect_zero(s.rp1 - s.w * s.w * g.rtp1, "rp1 - w^2 rtp1");
        expect_zero(s.rp3 - s.w * g.rtp3, "rp3 - w rtp3");
        PolyQ w3 = s.w * s.w * s.w;
        expect_zero(s.r1 - w3 * g.rt1, "r1 - w^3 rt1");
        expect_zero(s.r2 - w3 * g.rt2, "r2 - w^3 rt2");
        expect_zero(s.r3 - w3 * g.rt3, "r3 - w^3 rt3");
        expect_zero(s.C5 - s.w * g.Ct, "C5 - w Ct");
        expect_zero(s.phi6 - s.w * g.phi3, "phi6 - w phi3");
        expect_zero(s.psi6 - s.w * g.psi3, "psi6 - w psi3");
        expect_zero(s.K - s.w * g.Kt, "K - w Kt");
        return 0;
      },
      [](ModEnv& m) {
        auto& s = m.gspec();
        auto& g = m.geiser();
        Fp wv = m.eval(s.w);
        Fp w3 = wv * wv * wv;
        m.expect_zero(m.eval(s.gamma4) - wv * m.eval(g.gamma1), "gamma4 - w gamma1");
        m.expect_zero(m.eval(s.rp1) - wv * wv * m.eval(g.rtp1), "rp1 - w^2 rtp1");
        m.expect_zero(m.eval(s.rp3) - wv * m.eval(g.rtp3), "rp3 - w rtp3");
        m.expect_zero(m.eval(s.r1) - w3 * m.eval(g.rt1), "r1 - w^3 rt1");
        m.expect_zero(m.eval(s.r2) - w3 * m.eval(g.rt2), "r2 - w^3 rt2");
        m.expect_zero(m.eval(s.r3) - w3 * m.eval(g.rt3), "r3 - w^3 rt3");
        m.expect_zero(m.eval(s.C5) - wv * m.eval(g.Ct), "C5 - w Ct");
        m.expect_zero(m.eval(s.phi6) - wv * m.eval(g.phi3), "phi6 - w phi3");
        m.expect_zero(m.eval(s.psi6) - wv * m.eval(g.psi3), "psi6 - w psi3");
        m.expect_zero(m.eval(s.K) - wv * m.eval(g.Kt), "K - w Kt");
      });

  add("geiser_identity_r_phi3", Suite::geiser,
      [](Ctx& c) -> unsigned {
        auto& g = c.geiser();
        PolyQ y1 = qvar(Var::y1), y3 = qvar(Var::y3);
        expect_zero(y3 * g.rt1 - y1 * g.rt3 + qvar(Var::a2p) * g.gamma1 * g.phi3,
                    "y3 rt1 - y1 rt3 + a2p gamma1 phi3");
        return 0;
      },
      [](ModEnv& m) {
        auto& g = m.geiser();
        Fp v = m.d.at(Var::y3) * m.eval(g.rt1) - m.d.at(Var::y1) * m.eval(g.rt3) +
               m.d.at(Var::a2p) * m.eval(g.gamma1) * m.eval(g.phi3);
        m.expect_zero(v, "y3 rt1 - y1 rt3 + a2p gamma1 phi3");
      });

  add("geiser_identity_r_psi3", Suite::geiser,
      [](Ctx& c) -> unsigned {
        auto& g = c.geiser();
        PolyQ y2 = qvar(Var::y2), y3 = qvar(Var::y3);
        expect_zero(y2 * g.rt3 - y3 * g.rt2 + qvar(Var::a1p) * g.gamma1 * g.psi3,
                    "y2 rt3 - y3 rt2 + a1p gamma1 psi3");
        return 0;
      },
      [](ModEnv& m) {
        auto& g = m.geiser();
        Fp v = m.d.at(Var::y2) * m.eval(g.rt3) - m.d.at(Var::y3) * m.eval(g.rt2) +
               m.d.at(Var::a1p) * m.eval(g.gamma1) * m.eval(g.psi3);
        m.expect_zero(v, "y2 rt3 - y3 rt2 + a1p gamma1 psi3");
      });

  add("geiser_identity_r_cross", Suite::geiser,
      [](Ctx& c) -> unsigned {
        auto& g = c.geiser();
        PolyQ y1 = qvar(Var::y1), y2 = qvar(Var::y2);
        expect_zero(y1 * g.rt2 - y2 * g.rt1 + g.rtp1 * g.gamma1, "y1 rt2 - y2 rt1 + rtp1 gamma1");
        return 0;
      },
      [](ModEnv& m) {
        auto& g = m.geiser();
        Fp v = m.d.at(Var::y1) * m.eval(g.rt2) - m.d.at(Var::y2) * m.eval(g.rt1) +
               m.eval(g.rtp1) * m.eval(g.gamma1);
        m.expect_zero(v, "y1 rt2 - y2 rt1 + rtp1 gamma1");
      });

  add("geiser_identity_z_phi3", Suite::geiser,
      [](Ctx& c) -> unsigned {
        auto& g = c.geiser();
        PolyQ y1 = qvar(Var::y1), y3 = qvar(Var::y3);
        expect_zero(y3 * g.z1 - y1 * g.z3 - qvar(Var::a2p) * g.phi3 * g.Kt,
                    "y3 z1 - y1 z3 - a2p phi3 Kt");
        return 0;
      },
      [](ModEnv& m) {
        auto& g = m.geiser();
        Fp v = m.d.at(Var::y3) * m.eval(g.z1) - m.d.at(Var::y1) * m.eval(g.z3) -
               m.d.at(Var::a2p) * m.eval(g.phi3) * m.eval(g.Kt);
        m.expect_zero(v, "y3 z1 - y1 z3 - a2p phi3 Kt");
      });

  add("geiser_identity_z_psi3", Suite::geiser,
      [](Ctx& c) -> unsigned {
        auto& g = c.geiser();
        PolyQ y2 = qvar(Var::y2), y3 = qvar(Var::y3);
        expect_zero(y2 * g.z3 - y3 * g.z2 - qvar(Var::a1p) * g.psi3 * g.Kt,
                    "y2 z3 - y3 z2 - a1p psi3 Kt");
        return 0;
      },
      [](ModEnv& m) {
        auto& g = m.geiser();
        Fp v = m.d.at(Var::y2) * m.eval(g.z3) - m.d.at(Var::y3) * m.eval(g.z2) -
               m.d.at(Var::a1p) * m.eval(g.psi3) * m.eval(g.Kt);
        m.expect_zero(v, "y2 z3 - y3 z2 - a1p psi3 Kt");
      });

  add("geiser_eq_psi", Suite::geiser,
      [](Ctx& c) -> unsigned {
        auto& g = c.geiser();
        auto gram = geiser_ram(ram_eval(g.spec));
        expect_zero(g.psi3 - g.phi3 - (gram.st[0] * g.wp + gram.st[1] * g.w),
                    "psi3 - phi3 - S~1(w,wp)");
        return 0;
      },
      [](ModEnv& m) {
        auto& g = m.geiser();
        auto gram = geiser_ram(m.gram());
        Fp v = m.eval(g.psi3) - m.eval(g.phi3) -
               (gram.st[0].constant_value() * m.eval(g.wp) +
                gram.st[1].constant_value() * m.eval(g.w));
        m.expect_zero(v, "psi3 - phi3 - S~1(w,wp)");
      });

  add("geiser_eq_K2", Suite::geiser,
      [](Ctx& c) -> unsigned {
        auto& g = c.geiser();
        auto gram = geiser_ram(ram_eval(g.spec));
        PolyQ P = geiser_form_in_cubics(g, gram.p);
        PolyQ Q = geiser_form_in_cubics(g, gram.qt);
        PolyQ R = geiser_form_in_cubics(g, gram.rt);
        PolyQ phi3cubed = g.phi3 * g.phi3 * g.phi3;
        PolyQ resid = g.Kt * g.Kt + phi3cubed.scaled(Rat(4)) * g.w - g.phi3 * g.phi3 * P -
                      g.phi3 * Q - R * R;
        expect_zero(resid, "Kt^2 + 4 phi3^3 w - phi3^2 P - phi3 Qt - Rt^2");
        return 0;
      },
      [](ModEnv& m) {
        auto& g = m.geiser();
        auto gram = geiser_ram(m.gram());
        Fp wv = m.eval(g.w), wpv = m.eval(g.wp), phi = m.eval(g.phi3), Kt = m.eval(g.Kt);
        auto form = [&](const auto& coeffs) {
          Fp acc(0, m.d.prime);
          const std::size_t n = coeffs.size() - 1;
          for (std::size_t i = 0; i <= n; ++i) {
            Fp term = coeffs[i].constant_value();
            for (std::size_t k = 0; k < i; ++k) term *= wv;
            for (std::size_t k = 0; k < n - i; ++k) term *= wpv;
            acc += term;
          }
          return acc;
        };
        Fp P = form(gram.p), Q = form(gram.qt), R = form(gram.rt);
        Fp four(4, m.d.prime);
        m.expect_zero(Kt * Kt + four * phi * phi * phi * wv - phi * phi * P - phi * Q - R * R,
                      "Kt^2 relation");
      });

  add("q0r0s0_vanish", Suite::geiser,
      [](Ctx&) -> unsigned {
        auto ram = ram_eval(generic_geiser_pencil());
        expect_zero(ram.s[0], "s0 under a1 = a2 = 0");
        expect_zero(ram.q[0], "q0 under a1 = a2 = 0");
        expect_zero(ram.r[0], "r0 under a1 = a2 = 0");
        (void)geiser_ram(ram);  // the shift must be well defined
        return 0;
      },
      [](ModEnv& m) {
        auto& r = m.gram();
        m.expect_zero(r.s[0].constant_value(), "s0 under a1 = a2 = 0");
        m.expect_zero(r.q[0].constant_value(), "q0 under a1 = a2 = 0");
        m.expect_zero(r.r[0].constant_value(), "r0 under a1 = a2 = 0");
      });

  add("geiser_brace_order_guard", Suite::geiser,
      [](Ctx& c) -> unsigned {
        // brace after the substitution collapses to zero; brace before does
        // not -- the two orders must be distinguishable
        auto spec = generic_geiser_pencil();
        PolyQ s0_spec = specialize_generic(c.closed().s[0], spec);  // zero
        PolyQ wrong_s1 = -brace(s0_spec, 1);
        PolyQ right_s1 = specialize_generic(c.closed().s[1], spec);
        expect(!(wrong_s1 == right_s1), "brace order made no difference for s1");
        PolyQ wrong_q1 = -brace(specialize_generic(c.closed().q[0], spec), 1);
        PolyQ right_q1 = specialize_generic(c.closed().q[1], spec);
        expect(!(wrong_q1 == right_q1), "brace order made no difference for q1");
        return 0;
      },
      [](ModEnv& m) {
        // the difference of the two orders is a fixed nonzero polynomial;
        // evaluate it at the draw
        auto spec = generic_geiser_pencil();
        RamData<Rat> cf = ram_closed_form();
        PolyQ wrong_s1 = -brace(specialize_generic(cf.s[0], spec), 1);
        PolyQ right_s1 = specialize_generic(cf.s[1], spec);
        Fp diff = eval_mod(right_s1 - wrong_s1, m.d);
        if (diff.is_zero()) {
          auto w = m.d.witness(0);
          w["detail"] = "brace-order difference evaluated to zero";
          throw CheckFailure{w};
        }
      });

  add("geiser_w3_reduction", Suite::geiser,
      [](Ctx& c) -> unsigned {
        auto& s = c.gspec();
        auto& g = c.geiser();
        PolyQ w3 = s.w * s.w * s.w;
        expect_zero(s.z1 - mul_big(w3, g.z1), "z1 - w^3 zt1");
        expect_zero(s.z2 - mul_big(w3, g.z2), "z2 - w^3 zt2");
        expect_zero(s.z3 - mul_big(w3, g.z3), "z3 - w^3 zt3");
        return 0;
      },
      [](ModEnv& m) {
        auto& s = m.gspec();
        auto& g = m.geiser();
        Fp w3 = m.eval(s.w);
        w3 = w3 * w3 * w3;
        m.expect_zero(m.eval(s.z1) - w3 * m.eval(g.z1), "z1 - w^3 zt1");
        m.expect_zero(m.eval(s.z2) - w3 * m.eval(g.z2), "z2 - w^3 zt2");
        m.expect_zero(m.eval(s.z3) - w3 * m.eval(g.z3), "z3 - w^3 zt3");
      });

  add("geiser_basepoint_section", Suite::geiser,
      [](Ctx&) -> unsigned {
        // the free term of S^u_2 dies under a1 = a2 = 0, so the shifted
        // section is well defined generically in u2, u3
        auto su = basepoint_su_generic();
        PolyQ su0_spec = specialize_generic(su[0], generic_geiser_pencil());
        expect_zero(su0_spec, "S^u_2 free term under a1 = a2 = 0");
        return 0;
      },
      [](ModEnv& m) {
        const std::uint64_t p = m.d.prime;
        Fp u2 = m.d.at(Var::u2), u3 = m.d.at(Var::u3);
        if (u2.is_zero()) u2 = Fp(1, p);
        std::array<Fp, 14> vals;
        for (int i = 0; i < 14; ++i) vals[i] = m.d.v[i];
        vals[idx(Var::a1)] = Fp(0, p);
        vals[idx(Var::a2)] = Fp(0, p);
        auto solve_c1 = [&](int base) {
          Fp rest = u3 * u3 * (vals[base] + vals[base + 1] * u2) +
                    u3 * (vals[base + 2] + vals[base + 3] * u2 + vals[base + 4] * u2 * u2) +
                    vals[base + 6] * u2 * u2;
          vals[base + 5] = fp_div(-rest, u2);
        };
        solve_c1(0);
        solve_c1(7);
        auto g = build_geiser(PencilSpec<Fp>::from_values(vals));
        auto sec = basepoint_section_geiser(g, u2, u3);
        std::map<Var, Fp> at{{Var::y1, Fp(1, p)}, {Var::y2, u2}, {Var::y3, u3}};
        m.expect_zero(sec.psi3_u.evaluate(at), "psi3^u at the basepoint");
        for (Var yv : {Var::y1, Var::y2, Var::y3})
          m.expect_zero(sec.psi3_u.derivative(yv).evaluate(at), "psi3^u partial at the basepoint");
      });

  return defs;
}

const char* suite_name(Suite s) {
  switch (s) {
    case Suite::bertini: return "bertini";
    case Suite::sigma2: return "sigma2";
    case Suite::geiser: return "geiser";
    default: return "all";
  }
}

}  // namespace

Report run_suite(const VerifyOptions& opts) {
  Report rep;
  rep.suite = suite_name(opts.suite);
  rep.mode = opts.mode == Mode::symbolic ? "symbolic" : "modular";
  rep.prime = opts.prime;
  rep.seed = opts.seed;

  Ctx ctx;
  ctx.opts = opts;
  for (auto& def : catalogue()) {
    if (opts.suite != Suite::all && def.suite != opts.suite) continue;
    CheckResult res;
    res.name = def.name;
    auto t0 = std::chrono::steady_clock::now();
    try {
      if (opts.mode == Mode::symbolic) {
        res.trials = def.symbolic(ctx);
        res.pass = true;
      } else {
        SplitMix64 rng = stream_for(opts.seed, def.name);
        for (unsigned t = 0; t < opts.trials; ++t) {
          Draw d = draw_all(rng, opts.prime);
          ModEnv env;
          env.d = d;
          env.corrupt = opts.corrupt;
          try {
            def.modular(env);
          } catch (CheckFailure& f) {
            f.witness["trial"] = std::to_string(t);
            throw;
          }
        }
        res.trials = opts.trials;
        res.pass = true;
      }
    } catch (const CheckFailure& f) {
      res.pass = false;
      res.witness = f.witness;
      if (opts.mode == Mode::modular) res.trials = opts.trials;
    } catch (const Error& e) {
      res.pass = false;
      res.witness = {{"detail", std::string("construction error: ") + e.what()}};
    }
    res.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                 .count();
    std::cerr << "[" << (res.pass ? "pass" : "FAIL") << "] " << res.name << " ("
              << static_cast<long>(res.ms) << " ms)\n";
    rep.checks.push_back(std::move(res));
  }
  std::sort(rep.checks.begin(), rep.checks.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
  return rep;
}

// ---- randomized numeric operations ----

PencilSpec<Fp> random_pencil(std::uint64_t prime, std::uint64_t seed, bool geiser) {
  SplitMix64 rng = stream_for(seed, "pencil");
  std::array<Fp, 14> vals;
  for (auto& v : vals) v = Fp(rng.below(prime), prime);
  if (geiser) {
    vals[idx(Var::a1)] = Fp(0, prime);
    vals[idx(Var::a2)] = Fp(0, prime);
  }
  return PencilSpec<Fp>::from_values(vals);
}

namespace {

template <class Apply>
RoundtripStats roundtrip_impl(unsigned n, std::uint64_t seed, std::uint64_t prime,
                              const char* stream, Apply&& apply) {
  SplitMix64 rng = stream_for(seed, stream);
  RoundtripStats st;
  st.requested = n;
  for (unsigned i = 0; i < n; ++i) {
    Fp x1(rng.below(prime), prime), x2(rng.below(prime), prime), x3(rng.below(prime), prime);
    if (x1.is_zero() && x2.is_zero() && x3.is_zero()) {
      ++st.degenerate;
      continue;
    }
    ProjPoint<Fp> y(x1, x2, x3);
    try {
      ProjPoint<Fp> z = apply(y);
      ProjPoint<Fp> back = apply(z);
      if (!(back == y)) throw Error("involution roundtrip failed");
      ++st.verified;
    } catch (const DegeneratePoint&) {
      ++st.degenerate;
    }
  }
  if (st.degenerate * 5 > st.requested)
    throw ExcessiveDegeneracy("more than 20% of the samples were degenerate");
  return st;
}

}  // namespace

RoundtripStats involution_roundtrip(const PencilSpec<Fp>& spec, unsigned n, std::uint64_t seed) {
  auto b = build_bundle(spec);
  return roundtrip_impl(n, seed, spec.unit.p, "roundtrip",
                        [&](const ProjPoint<Fp>& y) { return apply_bertini(b, y); });
}

RoundtripStats involution_roundtrip_geiser(const PencilSpec<Fp>& spec, unsigned n,
                                           std::uint64_t seed) {
  auto g = build_geiser(spec);
  return roundtrip_impl(n, seed, spec.unit.p, "roundtrip_geiser",
                        [&](const ProjPoint<Fp>& y) { return geiser_apply(g, y); });
}

FixedLocusStats fixed_locus_sample(const PencilSpec<Fp>& spec, unsigned n, std::uint64_t seed) {
  const std::uint64_t p = spec.unit.p;
  auto b = build_bundle(spec);
  auto ram = ram_eval(spec);
  SplitMix64 rng = stream_for(seed, "fixed_locus");
  FixedLocusStats st;
  const unsigned max_lines = 60 + 20 * n;
  while (st.verified < n) {
    if (++st.lines_tried > max_lines)
      throw SamplingExhausted("not enough fixed points found within the line budget");
    std::array<Fp, 3> A, B;
    for (auto& x : A) x = Fp(rng.below(p), p);
    for (auto& x : B) x = Fp(rng.below(p), p);
    UniPoly f = restrict_to_line(b.K, A, B);
    if (f.is_zero()) continue;
    for (std::uint64_t root : fp_roots(f, rng)) {
      if (st.verified >= n) break;
      Fp s(root, p);
      try {
        ProjPoint<Fp> y(s * A[0] + B[0], s * A[1] + B[1], s * A[2] + B[2]);
        std::map<Var, Fp> at{{Var::y1, y.x[0]}, {Var::y2, y.x[1]}, {Var::y3, y.x[2]}};
        if (!b.K.evaluate(at).is_zero()) throw Error("sampled point not on K = 0");
        ProjPoint<Fp> z = apply_bertini(b, y);
        if (!(z == y)) throw Error("point of K = 0 not fixed by the involution");
        Sigma2Point<Fp> img = sigma2_chart(b, y);
        if (!img.ybar) continue;  // fiber wp = 0: no affine chart, resample
        if (!trigonal_residual(ram, img).is_zero())
          throw Error("image of a fixed point misses the trigonal curve");
        ++st.verified;
      } catch (const DegeneratePoint&) {
        continue;
      }
    }
  }
  return st;
}

FixedLocusStats fixed_locus_sample_geiser(const PencilSpec<Fp>& spec, unsigned n,
                                          std::uint64_t seed) {
  const std::uint64_t p = spec.unit.p;
  auto g = build_geiser(spec);
  auto gram = geiser_ram(ram_eval(spec));
  SplitMix64 rng = stream_for(seed, "fixed_locus_geiser");
  FixedLocusStats st;
  const unsigned max_lines = 60 + 20 * n;
  while (st.verified < n) {
    if (++st.lines_tried > max_lines)
      throw SamplingExhausted("not enough fixed points found within the line budget");
    std::array<Fp, 3> A, B;
    for (auto& x : A) x = Fp(rng.below(p), p);
    for (auto& x : B) x = Fp(rng.below(p), p);
    UniPoly f = restrict_to_line(g.Kt, A, B);
    if (f.is_zero()) continue;
    for (std::uint64_t root : fp_roots(f, rng)) {
      if (st.verified >= n) break;
      Fp s(root, p);
      try {
        ProjPoint<Fp> y(s * A[0] + B[0], s * A[1] + B[1], s * A[2] + B[2]);
        ProjPoint<Fp> z = geiser_apply(g, y);
        if (!(z == y)) throw Error("point of Kt = 0 not fixed by the involution");
        ProjPoint<Fp> img = anticanonical_map(g, y);
        if (!quartic_residual(gram, img).is_zero())
          throw Error("image of a fixed point misses the branch quartic");
        ++st.verified;
      } catch (const DegeneratePoint&) {
        continue;
      }
    }
  }
  return st;
}

}  // namespace bertini
