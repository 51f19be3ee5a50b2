#include <doctest.h>

#include "bertini/bundle.hpp"
#include "bertini/rng.hpp"
#include "test_util.hpp"

using namespace bertini;

namespace {

const BertiniBundle<Rat>& generic_bundle() {
  static BertiniBundle<Rat> b = build_bundle(generic_pencil());
  return b;
}

bool homogeneous_in_y(const PolyQ& p, unsigned d) {
  auto deg = p.homogeneous_degree_in([](Var v) { return is_y(v); });
  return deg && *deg == d;
}

bool homogeneous_in_coeffs(const PolyQ& p, unsigned d) {
  auto deg = p.homogeneous_degree_in([](Var v) { return is_coeff(v); });
  return deg && *deg == d;
}

PencilSpec<Fp> sample_spec(std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::array<Fp, 14> vals;
  for (auto& v : vals) v = Fp(rng.below(kDefaultPrime), kDefaultPrime);
  return PencilSpec<Fp>::from_values(vals);
}

}  // namespace

TEST_CASE("bundle fields are homogeneous of the right y-degrees") {
  auto& b = generic_bundle();
  CHECK(homogeneous_in_y(b.w, 3));
  CHECK(homogeneous_in_y(b.wp, 3));
  for (const PolyQ* f : {&b.A1, &b.A2, &b.B1, &b.B2, &b.B3, &b.C1, &b.C2})
    CHECK(homogeneous_in_y(*f, 3));
  CHECK(homogeneous_in_y(b.gamma4, 4));
  CHECK(homogeneous_in_y(b.rp1, 9));
  CHECK(homogeneous_in_y(b.rp3, 6));
  CHECK(homogeneous_in_y(b.r1, 12));
  CHECK(homogeneous_in_y(b.r2, 12));
  CHECK(homogeneous_in_y(b.r3, 12));
  CHECK(homogeneous_in_y(b.C5, 5));
  CHECK(homogeneous_in_y(b.phi6, 6));
  CHECK(homogeneous_in_y(b.psi6, 6));
  CHECK(homogeneous_in_y(b.z1, 17));
  CHECK(homogeneous_in_y(b.z2, 17));
  CHECK(homogeneous_in_y(b.z3, 17));
  CHECK(homogeneous_in_y(b.K, 9));
}

TEST_CASE("bundle coefficient-variable degrees") {
  auto& b = generic_bundle();
  for (const PolyQ* f : {&b.A1, &b.A2, &b.B1, &b.B2, &b.B3, &b.C1, &b.C2})
    CHECK(homogeneous_in_coeffs(*f, 2));
  CHECK(homogeneous_in_coeffs(b.gamma4, 2));
  CHECK(homogeneous_in_coeffs(b.C5, 4));
  CHECK(homogeneous_in_coeffs(b.phi6, 4));
  CHECK(homogeneous_in_coeffs(b.psi6, 4));
  CHECK(homogeneous_in_coeffs(b.K, 6));
}

TEST_CASE("the first bracket division, expanded by hand") {
  auto& b = generic_bundle();
  PolyQ y1 = qvar(Var::y1), y2 = qvar(Var::y2), y3 = qvar(Var::y3);
  PolyQ quotient = (b.B1 + b.kappa * y1 * y3 * y3).exact_div(y2);
  auto pair = [](Var u, Var v, Var up, Var vp) {
    return qvar(u) * qvar(vp) - qvar(up) * qvar(v);
  };
  PolyQ expected = pair(Var::b1, Var::a2, Var::b1p, Var::a2p) * y3 * y3 +
                   pair(Var::b1, Var::b2, Var::b1p, Var::b2p) * y1 * y3 +
                   pair(Var::b1, Var::b3, Var::b1p, Var::b3p) * y2 * y3 +
                   pair(Var::b1, Var::c1, Var::b1p, Var::c1p) * y1 * y1 +
                   pair(Var::b1, Var::c2, Var::b1p, Var::c2p) * y1 * y2;
  CHECK(quotient == expected);
}

TEST_CASE("misconstructed bracket raises NotDivisible") {
  auto& b = generic_bundle();
  PolyQ y2 = qvar(Var::y2);
  CHECK_THROWS_AS((b.B1 + qvar(Var::y1)).exact_div(y2), NotDivisible);
}

TEST_CASE("W3 vanishes at y itself and r stays on the tangent line") {
  auto& b = generic_bundle();
  CHECK(W3_of(b, qvar(Var::y1), qvar(Var::y2), qvar(Var::y3)).is_zero());
  CHECK((b.A1 * b.r1 + b.A2 * b.r2).is_zero());
}

TEST_CASE("the distinguished basepoint is fixed, not degenerate") {
  // A_i, B_i, C_i vanish at (0:0:1) but the bracket quotients do not;
  // the involution fixes the distinguished basepoint.
  auto spec = sample_spec(2024);
  auto b = build_bundle(spec);
  Fp zero(0, kDefaultPrime), one(1, kDefaultPrime);
  ProjPoint<Fp> v(zero, zero, one);
  ProjPoint<Fp> img = apply_bertini(b, v);
  CHECK(img == v);
}

TEST_CASE("a fully degenerate pencil collapses to DegeneratePoint") {
  // w == wp makes every pencil form vanish identically
  SplitMix64 rng(555);
  std::array<Fp, 14> vals;
  for (int i = 0; i < 7; ++i) {
    vals[i] = Fp(rng.below(kDefaultPrime), kDefaultPrime);
    vals[i + 7] = vals[i];
  }
  auto b = build_bundle(PencilSpec<Fp>::from_values(vals));
  Fp one(1, kDefaultPrime), two(2, kDefaultPrime), three(3, kDefaultPrime);
  CHECK_THROWS_AS(apply_bertini(b, ProjPoint<Fp>(one, two, three)), DegeneratePoint);
}

TEST_CASE("involution roundtrip on a sample of points") {
  auto b = build_bundle(sample_spec(77));
  SplitMix64 rng(78);
  for (int i = 0; i < 10; ++i) {
    ProjPoint<Fp> y(Fp(rng.below(kDefaultPrime), kDefaultPrime),
                    Fp(rng.below(kDefaultPrime), kDefaultPrime),
                    Fp(rng.below(kDefaultPrime), kDefaultPrime));
    ProjPoint<Fp> z = apply_bertini(b, y);
    CHECK(apply_bertini(b, z) == y);
  }
}

TEST_CASE("building concretely agrees with specializing the generic bundle") {
  auto& g = generic_bundle();
  auto spec = sample_spec(31337);
  auto c = build_bundle(spec);
  SplitMix64 rng(31338);
  std::map<Var, Fp> at;
  for (int i = 0; i < 14; ++i) at[var_at(i)] = spec.entry[i].constant_value();
  for (Var v : {Var::y1, Var::y2, Var::y3}) at[v] = Fp(rng.below(kDefaultPrime), kDefaultPrime);
  std::map<Var, Fp> yonly{{Var::y1, at[Var::y1]}, {Var::y2, at[Var::y2]}, {Var::y3, at[Var::y3]}};
  auto agree = [&](const PolyQ& gen, const Poly<Fp>& conc) {
    Fp lhs(0, kDefaultPrime);
    for (auto& t : gen.terms()) {
      Fp c = fp_from_rat(t.c, kDefaultPrime);
      for (int i = 0; i < kNumVars; ++i)
        for (unsigned e = 0; e < t.m.d[i]; ++e) c *= at[var_at(i)];
      lhs += c;
    }
    return lhs == conc.evaluate(yonly);
  };
  CHECK(agree(g.phi6, c.phi6));
  CHECK(agree(g.psi6, c.psi6));
  CHECK(agree(g.K, c.K));
  CHECK(agree(g.z1, c.z1));
  CHECK(agree(g.rp1, c.rp1));
}

TEST_CASE("canonical text of real constructions round-trips") {
  auto& b = generic_bundle();
  CHECK(parse_poly_q(b.gamma4.canonical_text()) == b.gamma4);
  CHECK(parse_poly_q(b.C5.canonical_text()) == b.C5);
  CHECK(parse_poly_q(b.K.canonical_text()) == b.K);
}

TEST_CASE("corruption hooks flip one sign") {
  auto spec = sample_spec(9);
  auto clean = build_bundle(spec);
  auto bad = build_bundle(spec, Corrupt::K);
  CHECK(!(clean.K == bad.K));
  CHECK(clean.C5 == bad.C5);
}
