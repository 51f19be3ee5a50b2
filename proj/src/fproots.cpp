#include "bertini/fproots.hpp"

#include <algorithm>

namespace bertini {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

void trim(UniPoly& f) {
  while (!f.c.empty() && f.c.back() == 0) f.c.pop_back();
}

UniPoly make(std::uint64_t p, std::vector<std::uint64_t> c) {
  UniPoly f{std::move(c), p};
  trim(f);
  return f;
}

UniPoly mul(const UniPoly& a, const UniPoly& b) {
  if (a.c.empty() || b.c.empty()) return {{}, a.p};
  std::vector<std::uint64_t> out(a.c.size() + b.c.size() - 1, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (!a.c[i]) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) {
      out[i + j] = (out[i + j] + static_cast<unsigned __int128>(a.c[i]) * b.c[j]) % a.p;
    }
  }
  return make(a.p, std::move(out));
}

// remainder of a mod b, b nonzero
UniPoly rem(UniPoly a, const UniPoly& b) {
  const std::uint64_t p = b.p;
  std::uint64_t lead_inv = powmod(b.c.back(), p - 2, p);
  while (a.c.size() >= b.c.size()) {
    std::uint64_t q = mulmod(a.c.back(), lead_inv, p);
    std::size_t shift = a.c.size() - b.c.size();
    if (q) {
      for (std::size_t i = 0; i < b.c.size(); ++i) {
        std::uint64_t sub = mulmod(q, b.c[i], p);
        std::uint64_t& t = a.c[shift + i];
        t = (t + p - sub) % p;
      }
    } else {
      a.c.pop_back();
      continue;
    }
    trim(a);
    if (a.c.empty()) break;
  }
  return a;
}

UniPoly gcd(UniPoly a, UniPoly b) {
  trim(a);
  trim(b);
  while (!b.c.empty()) {
    UniPoly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  // monic normalization
  if (!a.c.empty()) {
    std::uint64_t inv = powmod(a.c.back(), a.p - 2, a.p);
    for (auto& x : a.c) x = mulmod(x, inv, a.p);
  }
  return a;
}

// base^e mod f, for base of degree < deg f
UniPoly powmod_poly(UniPoly base, std::uint64_t e, const UniPoly& f) {
  UniPoly r = make(f.p, {1});
  while (e) {
    if (e & 1) r = rem(mul(r, base), f);
    base = rem(mul(base, base), f);
    e >>= 1;
  }
  return r;
}

void collect_roots(const UniPoly& g, SplitMix64& rng, std::vector<std::uint64_t>* out) {
  const std::uint64_t p = g.p;
  if (g.c.size() <= 1) return;
  if (g.c.size() == 2) {
    // ax + b = 0
    out->push_back(mulmod(p - g.c[0] % p, powmod(g.c[1], p - 2, p), p));
    return;
  }
  // split with gcd(g, (x+a)^((p-1)/2) - 1)
  for (;;) {
    std::uint64_t a = rng.below(p);
    UniPoly shifted = make(p, {a, 1});
    UniPoly h = powmod_poly(shifted, (p - 1) / 2, g);
    if (h.c.empty())
      h = make(p, {p - 1});
    else
      h.c[0] = (h.c[0] + p - 1) % p;
    trim(h);
    UniPoly d = gcd(g, h);
    if (d.c.size() > 1 && d.c.size() < g.c.size()) {
      collect_roots(d, rng, out);
      // divide g by d exactly
      UniPoly quotient;
      {
        UniPoly num = g;
        std::vector<std::uint64_t> qc(num.c.size() - d.c.size() + 1, 0);
        std::uint64_t lead_inv = powmod(d.c.back(), p - 2, p);
        while (num.c.size() >= d.c.size() && !num.c.empty()) {
          std::uint64_t qq = mulmod(num.c.back(), lead_inv, p);
          std::size_t shift = num.c.size() - d.c.size();
          qc[shift] = qq;
          for (std::size_t i = 0; i < d.c.size(); ++i) {
            std::uint64_t sub = mulmod(qq, d.c[i], p);
            num.c[shift + i] = (num.c[shift + i] + p - sub) % p;
          }
          trim(num);
        }
        quotient = make(p, std::move(qc));
      }
      collect_roots(quotient, rng, out);
      return;
    }
  }
}

}  // namespace

unsigned UniPoly::degree() const { return c.empty() ? 0 : static_cast<unsigned>(c.size() - 1); }
bool UniPoly::is_zero() const {
  for (auto x : c)
    if (x) return false;
  return true;
}

std::vector<std::uint64_t> fp_roots(const UniPoly& f_in, SplitMix64& rng) {
  UniPoly f = f_in;
  trim(f);
  std::vector<std::uint64_t> out;
  if (f.c.empty() || f.c.size() == 1) return out;  // zero or constant: no isolated roots reported
  const std::uint64_t p = f.p;
  // distinct-root part: gcd(f, x^p - x)
  UniPoly x = make(p, {0, 1});
  UniPoly xp = powmod_poly(x, p, f);
  // xp - x
  if (xp.c.size() < 2) xp.c.resize(2, 0);
  xp.c[1] = (xp.c[1] + p - 1) % p;
  trim(xp);
  UniPoly g = gcd(f, xp);
  if (g.c.size() <= 1) return out;
  collect_roots(g, rng, &out);
  std::sort(out.begin(), out.end());
  return out;
}

UniPoly restrict_to_line(const PolyP& f, const std::array<Fp, 3>& A, const std::array<Fp, 3>& B) {
  std::uint64_t p = 0;
  for (auto& x : A) p = p ? p : x.p;
  for (auto& x : B) p = p ? p : x.p;
  std::vector<std::uint64_t> acc(1, 0);
  auto addmul = [&](std::vector<std::uint64_t>& dst, const std::vector<std::uint64_t>& a,
                    const std::vector<std::uint64_t>& b) {
    dst.assign(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j)
        dst[i + j] = (dst[i + j] + static_cast<unsigned __int128>(a[i]) * b[j]) % p;
  };
  std::array<std::vector<std::uint64_t>, 3> lin{
      std::vector<std::uint64_t>{B[0].v, A[0].v},
      std::vector<std::uint64_t>{B[1].v, A[1].v},
      std::vector<std::uint64_t>{B[2].v, A[2].v}};
  for (auto& t : f.terms()) {
    std::vector<std::uint64_t> term{t.c.v};
    std::vector<std::uint64_t> tmp;
    const Var ys[3] = {Var::y1, Var::y2, Var::y3};
    for (int k = 0; k < 3; ++k) {
      for (unsigned e = 0; e < t.m.exp(ys[k]); ++e) {
        addmul(tmp, term, lin[k]);
        term.swap(tmp);
      }
    }
    if (term.size() > acc.size()) acc.resize(term.size(), 0);
    for (std::size_t i = 0; i < term.size(); ++i) acc[i] = (acc[i] + term[i]) % p;
  }
  return make(p, std::move(acc));
}

}  // namespace bertini
