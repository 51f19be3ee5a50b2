#include <doctest.h>

#include <map>

#include "bertini/brace.hpp"
#include "test_util.hpp"

using namespace bertini;

namespace {
PolyQ v(Var x) { return qvar(x); }
}

TEST_CASE("brace on the worked monomials") {
  // {a1 c2}_1 = a1 c2' + a1' c2
  CHECK(brace(v(Var::a1) * v(Var::c2), 1) ==
        v(Var::a1) * v(Var::c2p) + v(Var::a1p) * v(Var::c2));
  // {b2^2}_1 = 2 b2 b2'
  CHECK(brace(v(Var::b2) * v(Var::b2), 1) == (v(Var::b2) * v(Var::b2p)).scaled(Rat(2)));
  // {a1 b1 c1}_2
  CHECK(brace(v(Var::a1) * v(Var::b1) * v(Var::c1), 2) ==
        v(Var::a1) * v(Var::b1p) * v(Var::c1p) + v(Var::a1p) * v(Var::b1) * v(Var::c1p) +
            v(Var::a1p) * v(Var::b1p) * v(Var::c1));
}

TEST_CASE("brace with m = 0 is the identity") {
  SplitMix64 rng(41);
  for (int i = 0; i < 20; ++i) {
    // unprimed-only random polynomial
    std::vector<PolyQ::Term> ts;
    for (int k = 0; k < 4; ++k) {
      Monomial m;
      for (int j = 0; j < 3; ++j) m.set(var_at(static_cast<int>(rng.below(7))), 1 + static_cast<unsigned>(rng.below(2)));
      ts.push_back({m, Rat(static_cast<long>(rng.below(9)) - 4)});
    }
    PolyQ p = PolyQ::from_terms(std::move(ts));
    CHECK(brace(p, 0) == p);
  }
}

TEST_CASE("brace beyond the degree vanishes") {
  CHECK(brace(v(Var::a1) * v(Var::c2), 3).is_zero());
}

TEST_CASE("top brace equals full prime swap on a monomial") {
  PolyQ e = v(Var::a1) * v(Var::b2) * v(Var::b2) * v(Var::c1);
  CHECK(brace(e, 4) == e.swap_primes());
}

TEST_CASE("sum rule: substituting x -> x + x' expands into all braces") {
  PolyQ e = v(Var::a2) * v(Var::b1) * v(Var::c2) * v(Var::c2);  // degree 4
  std::map<Var, PolyQ> shift;
  for (int i = 0; i < 7; ++i)
    shift[var_at(i)] = qvar(var_at(i)) + qvar(prime_partner(var_at(i)));
  PolyQ lhs = e.substitute(shift);
  PolyQ rhs;
  for (unsigned m = 0; m <= 4; ++m) rhs = rhs + brace(e, m);
  CHECK(lhs == rhs);
}

TEST_CASE("linearity") {
  PolyQ p = v(Var::a1) * v(Var::c2), q = (v(Var::b2) * v(Var::b2)).scaled(Rat(3));
  CHECK(brace(p + q, 1) == brace(p, 1) + brace(q, 1));
}

TEST_CASE("u variables are inert and uncounted") {
  // {a2^2 u3^2}_1: n = 2 (u3 not counted), u-exponents preserved, never primed
  PolyQ e = v(Var::a2) * v(Var::a2) * v(Var::u3) * v(Var::u3);
  PolyQ expect = (v(Var::a2) * v(Var::a2p) * v(Var::u3) * v(Var::u3)).scaled(Rat(2));
  CHECK(brace(e, 1) == expect);
  CHECK(brace(e, 2) == v(Var::a2p) * v(Var::a2p) * v(Var::u3) * v(Var::u3));
  CHECK(brace(e, 3).is_zero());
}

TEST_CASE("primed input rejected") {
  CHECK_THROWS_AS(brace(v(Var::a1p), 1), Error);
  CHECK_THROWS_AS(brace(v(Var::y1) * v(Var::a1), 1), Error);
}
