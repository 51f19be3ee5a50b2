#include <doctest.h>

#include "bertini/fproots.hpp"
#include "bertini/geiser.hpp"
#include "bertini/rng.hpp"
#include "test_util.hpp"

using namespace bertini;

namespace {

PencilSpec<Fp> sample_geiser(std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::array<Fp, 14> vals;
  for (auto& v : vals) v = Fp(rng.below(kDefaultPrime), kDefaultPrime);
  vals[idx(Var::a1)] = Fp(0, kDefaultPrime);
  vals[idx(Var::a2)] = Fp(0, kDefaultPrime);
  return PencilSpec<Fp>::from_values(vals);
}

}  // namespace

TEST_CASE("non-Geiser specs are rejected") {
  SplitMix64 rng(1);
  std::array<Fp, 14> vals;
  for (auto& v : vals) v = Fp(1 + rng.below(kDefaultPrime - 1), kDefaultPrime);
  CHECK_THROWS_AS(build_geiser(PencilSpec<Fp>::from_values(vals)), SpecNotGeiser);
}

TEST_CASE("the pencil forms collapse as expected under the specialization") {
  auto spec = generic_geiser_pencil();
  auto s = build_bundle(spec);
  // A1 = -a1p w, A2 = -a2p w
  CHECK(s.A1 == -(qvar(Var::a1p) * s.w));
  CHECK(s.A2 == -(qvar(Var::a2p) * s.w));
  auto g = build_geiser(spec);
  CHECK(s.gamma4 == s.w * g.gamma1);
}

TEST_CASE("geiser bundle degrees") {
  auto g = build_geiser(generic_geiser_pencil());
  auto ydeg = [](const PolyQ& p) {
    return p.homogeneous_degree_in([](Var v) { return is_y(v); });
  };
  CHECK(*ydeg(g.gamma1) == 1);
  CHECK(*ydeg(g.Ct) == 2);
  CHECK(*ydeg(g.phi3) == 3);
  CHECK(*ydeg(g.psi3) == 3);
  CHECK(*ydeg(g.rtp1) == 3);
  CHECK(*ydeg(g.Kt) == 6);
  CHECK(*ydeg(g.z1) == 8);
  CHECK(*ydeg(g.z2) == 8);
  CHECK(*ydeg(g.z3) == 8);
}

TEST_CASE("shifted coefficients and the free-term guard") {
  auto gram = geiser_ram(ram_eval(generic_geiser_pencil()));
  auto full = ram_eval(generic_geiser_pencil());
  CHECK(gram.st[0] == full.s[1]);
  CHECK(gram.st[1] == full.s[2]);
  for (int i = 0; i < 4; ++i) CHECK(gram.qt[i] == full.q[i + 1]);
  for (int i = 0; i < 3; ++i) CHECK(gram.rt[i] == full.r[i + 1]);
  // a generic (non-Geiser) evaluation has nonzero free terms
  CHECK_THROWS_AS(geiser_ram(ram_closed_form()), NonzeroFreeTerm);
}

TEST_CASE("applying the involution commutes with the anti-canonical map") {
  auto g = build_geiser(sample_geiser(5));
  SplitMix64 rng(6);
  for (int i = 0; i < 8; ++i) {
    ProjPoint<Fp> y(Fp(rng.below(kDefaultPrime), kDefaultPrime),
                    Fp(rng.below(kDefaultPrime), kDefaultPrime),
                    Fp(rng.below(kDefaultPrime), kDefaultPrime));
    ProjPoint<Fp> z = geiser_apply(g, y);
    CHECK(geiser_apply(g, z) == y);
    // the two-to-one quotient cannot separate y from its involution image
    CHECK(anticanonical_map(g, y) == anticanonical_map(g, z));
  }
}

TEST_CASE("quartic residual on and off the branch curve") {
  const std::uint64_t p = kDefaultPrime;
  auto spec = sample_geiser(7);
  auto gram = geiser_ram(ram_eval(spec));
  SplitMix64 rng(8);
  // z0 = 0 with Rt2(z1,z2) = 0: taking (z1, z2) = (root, 1)
  std::vector<std::uint64_t> rc;
  for (auto& e : gram.rt) rc.push_back(e.constant_value().v);
  auto roots = fp_roots(UniPoly{rc, p}, rng);
  if (!roots.empty()) {
    ProjPoint<Fp> zb(Fp(0, p), Fp(roots[0], p), Fp(1, p));
    CHECK(quartic_residual(gram, zb).is_zero());
  }
  ProjPoint<Fp> off(Fp(1 + rng.below(p - 1), p), Fp(rng.below(p), p), Fp(rng.below(p), p));
  CHECK(!quartic_residual(gram, off).is_zero());
}

TEST_CASE("phi3 = 0 maps to the line z0 = 0 in the target plane") {
  const std::uint64_t p = kDefaultPrime;
  auto g = build_geiser(sample_geiser(21));
  SplitMix64 rng(22);
  for (int tries = 0; tries < 100; ++tries) {
    std::array<Fp, 3> A{Fp(rng.below(p), p), Fp(rng.below(p), p), Fp(rng.below(p), p)};
    std::array<Fp, 3> B{Fp(rng.below(p), p), Fp(rng.below(p), p), Fp(rng.below(p), p)};
    auto roots = fp_roots(restrict_to_line(g.phi3, A, B), rng);
    if (roots.empty()) continue;
    Fp s(roots[0], p);
    ProjPoint<Fp> y(s * A[0] + B[0], s * A[1] + B[1], s * A[2] + B[2]);
    ProjPoint<Fp> img = anticanonical_map(g, y);
    CHECK(img.x[0].is_zero());
    return;
  }
  FAIL("no point found on phi3 = 0");
}

TEST_CASE("contracted locus maps to the coordinate basepoints") {
  // phi3(y) = 0 forces z1 = z3 = 0, i.e. the image is (0:1:0)
  auto spec = sample_geiser(9);
  auto g = build_geiser(spec);
  SplitMix64 rng(10);
  // find a point with phi3 = 0 by restricting to lines
  const std::uint64_t p = kDefaultPrime;
  for (int tries = 0; tries < 100; ++tries) {
    std::array<Fp, 3> A{Fp(rng.below(p), p), Fp(rng.below(p), p), Fp(rng.below(p), p)};
    std::array<Fp, 3> B{Fp(rng.below(p), p), Fp(rng.below(p), p), Fp(rng.below(p), p)};
    UniPoly f = restrict_to_line(g.phi3, A, B);
    auto roots = fp_roots(f, rng);
    if (roots.empty()) continue;
    Fp s(roots[0], p);
    ProjPoint<Fp> y(s * A[0] + B[0], s * A[1] + B[1], s * A[2] + B[2]);
    ProjPoint<Fp> z = geiser_apply(g, y);
    CHECK(z.x[0].is_zero());
    CHECK(z.x[2].is_zero());
    return;
  }
  FAIL("no point found on phi3 = 0");
}

TEST_CASE("geiser basepoint sections") {
  const std::uint64_t p = kDefaultPrime;

  SUBCASE("the vertex recovers psi3") {
    auto spec = sample_geiser(11);
    auto g = build_geiser(spec);
    Fp zero(0, p);
    auto sec = basepoint_section_geiser(g, zero, zero);
    CHECK(sec.psi3_u == g.psi3);
  }

  SUBCASE("psi3_u is singular at a constructed basepoint") {
    SplitMix64 rng(12);
    Fp u2(1 + rng.below(p - 1), p), u3(rng.below(p), p);
    std::array<Fp, 14> vals;
    for (auto& v : vals) v = Fp(rng.below(p), p);
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
    CHECK(sec.psi3_u.evaluate(at).is_zero());
    for (Var yv : {Var::y1, Var::y2, Var::y3})
      CHECK(sec.psi3_u.derivative(yv).evaluate(at).is_zero());
  }

  SUBCASE("rejects non-basepoints") {
    auto g = build_geiser(sample_geiser(13));
    CHECK_THROWS_AS(basepoint_section_geiser(g, Fp(5, p), Fp(6, p)), NotABasepoint);
  }
}

TEST_CASE("points with phi3 = psi3 = 0 are degenerate for the involution") {
  // the intersection contains the five non-vertex basepoints; construct one
  const std::uint64_t p = kDefaultPrime;
  SplitMix64 rng(14);
  Fp u2(1 + rng.below(p - 1), p), u3(1 + rng.below(p - 1), p);
  std::array<Fp, 14> vals;
  for (auto& v : vals) v = Fp(rng.below(p), p);
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
  ProjPoint<Fp> bp(Fp(1, p), u2, u3);
  std::map<Var, Fp> at{{Var::y1, Fp(1, p)}, {Var::y2, u2}, {Var::y3, u3}};
  // every member of the web through the seven points passes through bp, and
  // in particular the contracted cubics do
  CHECK(g.w.evaluate(at).is_zero());
  CHECK(g.wp.evaluate(at).is_zero());
  CHECK_THROWS_AS(geiser_apply(g, bp), DegeneratePoint);
  // the anti-canonical map is undefined there for the same reason:
  // phi3 vanishes at the non-distinguished basepoints too
  CHECK_THROWS_AS(anticanonical_map(g, bp), DegeneratePoint);
}
