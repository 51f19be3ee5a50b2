#include "bertini/poly_sliced.hpp"

namespace bertini {

Sliced y3_slices(const PolyQ& p) {
  Sliced out(p.degree_in(Var::y3) + 1);
  std::vector<std::vector<PolyQ::Term>> buckets(out.size());
  for (auto& t : p.terms()) {
    unsigned e = t.m.exp(Var::y3);
    Monomial m = t.m;
    m.set(Var::y3, 0);
    buckets[e].push_back({m, t.c});
  }
  for (std::size_t k = 0; k < out.size(); ++k) {
    std::sort(buckets[k].begin(), buckets[k].end(),
              [](const PolyQ::Term& a, const PolyQ::Term& b) { return a.m < b.m; });
    out[k] = PolyQ::from_sorted_terms(std::move(buckets[k]));
  }
  return out;
}

PolyQ assemble_y3(const Sliced& slices) {
  std::vector<PolyQ::Term> all;
  for (std::size_t k = 0; k < slices.size(); ++k) {
    for (auto& t : slices[k].terms()) {
      Monomial m = t.m;
      m.set(Var::y3, k);
      all.push_back({m, t.c});
    }
  }
  return PolyQ::from_terms(std::move(all));
}

bool slices_zero(const Sliced& s) {
  for (auto& p : s)
    if (!p.is_zero()) return false;
  return true;
}

namespace {

struct PackedSlice {
  std::vector<std::uint64_t> w0, w1, w2;
  std::vector<std::int64_t> c;
  bool empty() const { return c.empty(); }
};

using PackedSliced = std::vector<PackedSlice>;

bool pack_slice(const PolyQ& s, PackedSlice* out, std::array<unsigned, 24>* maxima) {
  out->w0.resize(s.size());
  out->w1.resize(s.size());
  out->w2.resize(s.size());
  out->c.resize(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!rat_fits_i64(s.terms()[i].c, &out->c[i])) return false;
    const Monomial& m = s.terms()[i].m;
    out->w0[i] = m.word(0);
    out->w1[i] = m.word(1);
    out->w2[i] = m.word(2);
    for (int k = 0; k < 24; ++k) (*maxima)[k] = std::max<unsigned>((*maxima)[k], m.d[k]);
  }
  return true;
}

bool pack_all(const Sliced& slices, PackedSliced* out, std::array<unsigned, 24>* maxima) {
  out->resize(slices.size());
  for (std::size_t k = 0; k < slices.size(); ++k)
    if (!pack_slice(slices[k], &(*out)[k], maxima)) return false;
  return true;
}

bool accumulate_product(detail::I64Table& acc, const PackedSlice& a, const PackedSlice& b,
                        bool negate) {
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    const std::uint64_t a0 = a.w0[i], a1 = a.w1[i], a2 = a.w2[i];
    const std::int64_t ac = negate ? -a.c[i] : a.c[i];
    for (std::size_t j = 0; j < b.c.size(); ++j) {
      std::int64_t prod;
      if (__builtin_mul_overflow(ac, b.c[j], &prod)) return false;
      if (!acc.add(a0 + b.w0[j], a1 + b.w1[j], a2 + b.w2[j], prod)) return false;
    }
  }
  return true;
}

bool accumulate_addend(detail::I64Table& acc, const PackedSlice& a, bool negate) {
  for (std::size_t i = 0; i < a.c.size(); ++i)
    if (!acc.add(a.w0[i], a.w1[i], a.w2[i], negate ? -a.c[i] : a.c[i])) return false;
  return true;
}

PolyQ extract_slice(const detail::I64Table& acc) {
  struct MI {
    Monomial m;
    std::int64_t v;
  };
  std::vector<MI> flat;
  flat.reserve(acc.size());
  acc.for_each([&](const Monomial& m, std::int64_t v) { flat.push_back({m, v}); });
  std::sort(flat.begin(), flat.end(), [](const MI& x, const MI& y) { return x.m < y.m; });
  std::vector<PolyQ::Term> terms;
  terms.reserve(flat.size());
  for (const MI& e : flat) terms.push_back({e.m, Rat(mpz_class(e.v))});
  return PolyQ::from_sorted_terms(std::move(terms));
}

// exact但 slow path for coefficients beyond int64
Sliced combine_generic(const std::vector<SlicedProduct>& products,
                       const std::vector<std::pair<const Sliced*, bool>>& addends) {
  std::size_t n = 1;
  for (auto& p : products)
    if (!p.a->empty() && !p.b->empty()) n = std::max(n, p.a->size() + p.b->size() - 1);
  for (auto& [s, neg] : addends) n = std::max(n, s->size());
  Sliced out(n);
  for (std::size_t m = 0; m < n; ++m) {
    PolyQ acc;
    for (auto& [s, neg] : addends)
      if (m < s->size()) acc = neg ? acc - (*s)[m] : acc + (*s)[m];
    for (auto& p : products)
      for (std::size_t i = 0; i < p.a->size(); ++i) {
        if (m < i || m - i >= p.b->size()) continue;
        PolyQ prod = (*p.a)[i] * (*p.b)[m - i];
        acc = p.negate ? acc - prod : acc + prod;
      }
    out[m] = std::move(acc);
  }
  return out;
}

}  // namespace

Sliced slices_combine(const std::vector<SlicedProduct>& products,
                      const std::vector<std::pair<const Sliced*, bool>>& addends) {
  // pack every distinct operand once
  std::vector<PackedSliced> packs;
  std::vector<const Sliced*> packed_of;
  std::vector<std::array<unsigned, 24>> maxima;
  auto pack_index = [&](const Sliced* s) -> int {
    for (std::size_t i = 0; i < packed_of.size(); ++i)
      if (packed_of[i] == s) return static_cast<int>(i);
    packs.emplace_back();
    maxima.emplace_back();
    if (!pack_all(*s, &packs.back(), &maxima.back())) return -1;
    packed_of.push_back(s);
    return static_cast<int>(packs.size() - 1);
  };

  bool fast = true;
  std::vector<std::pair<int, int>> prod_idx;
  for (auto& p : products) {
    int ia = pack_index(p.a), ib = fast && ia >= 0 ? pack_index(p.b) : -1;
    if (ia < 0 || ib < 0) {
      fast = false;
      break;
    }
    for (int k = 0; fast && k < 24; ++k)
      if (maxima[ia][k] + maxima[ib][k] > 255) fast = false;
    prod_idx.push_back({ia, ib});
  }
  std::vector<int> add_idx;
  for (auto& [s, neg] : addends) {
    if (!fast) break;
    int i = pack_index(s);
    if (i < 0) {
      fast = false;
      break;
    }
    add_idx.push_back(i);
  }
  if (!fast) return combine_generic(products, addends);

  std::size_t n = 1;
  for (auto& p : products)
    if (!p.a->empty() && !p.b->empty()) n = std::max(n, p.a->size() + p.b->size() - 1);
  for (auto& [s, neg] : addends) n = std::max(n, s->size());

  Sliced out(n);
  for (std::size_t m = 0; m < n; ++m) {
    std::size_t est = 64;
    for (std::size_t t = 0; t < products.size(); ++t) {
      auto [ia, ib] = prod_idx[t];
      for (std::size_t i = 0; i < packs[ia].size(); ++i)
        if (m >= i && m - i < packs[ib].size())
          est += std::max(packs[ia][i].c.size(), packs[ib][m - i].c.size());
    }
    detail::I64Table acc(est);
    bool ok = true;
    for (std::size_t t = 0; ok && t < addends.size(); ++t) {
      const PackedSliced& ps = packs[add_idx[t]];
      if (m < ps.size()) ok = accumulate_addend(acc, ps[m], addends[t].second);
    }
    for (std::size_t t = 0; ok && t < products.size(); ++t) {
      auto [ia, ib] = prod_idx[t];
      const PackedSliced& pa = packs[ia];
      const PackedSliced& pb = packs[ib];
      for (std::size_t i = 0; ok && i < pa.size(); ++i) {
        if (m < i || m - i >= pb.size()) continue;
        if (pa[i].empty() || pb[m - i].empty()) continue;
        ok = accumulate_product(acc, pa[i], pb[m - i], products[t].negate);
      }
    }
    if (!ok) return combine_generic(products, addends);  // int64 overflow
    out[m] = extract_slice(acc);
  }
  return out;
}

Sliced slices_divide_exact(const Sliced& u, const Sliced& d) {
  int dmax = static_cast<int>(d.size()) - 1;
  while (dmax >= 0 && d[dmax].is_zero()) --dmax;
  if (dmax < 0) throw Error("division by zero polynomial");
  if (slices_zero(u)) return Sliced{PolyQ::zero()};
  const PolyQ& lead = d[dmax];
  int umax = static_cast<int>(u.size()) - 1;
  int gdeg = umax - dmax;
  if (gdeg < 0) throw NotDivisible("quotient would have negative y3-degree");

  PackedSliced pd;
  std::array<unsigned, 24> md{}, mg{};
  bool fast = pack_all(d, &pd, &md);

  Sliced g(gdeg + 1);
  PackedSliced pg(gdeg + 1);

  // slice m of (u - d*g) using only the quotient slices computed so far
  auto combine = [&](int m) -> PolyQ {
    if (fast) {
      PackedSlice pu;
      std::array<unsigned, 24> mu{};
      bool ok = pack_slice(m <= umax ? u[m] : PolyQ::zero(), &pu, &mu);
      for (int k = 0; ok && k < 24; ++k)
        if (md[k] + mg[k] > 255) ok = false;
      if (ok) {
        detail::I64Table acc(pu.c.size() * 2 + 256);
        ok = accumulate_addend(acc, pu, false);
        for (int j = 0; ok && j <= std::min(m, dmax); ++j) {
          int kk = m - j;
          if (kk > gdeg || g[kk].is_zero() || pd[j].empty()) continue;
          ok = accumulate_product(acc, pd[j], pg[kk], true);
        }
        if (ok) return extract_slice(acc);
      }
      fast = false;
    }
    PolyQ acc = m <= umax ? u[m] : PolyQ::zero();
    for (int j = 0; j <= std::min(m, dmax); ++j) {
      int kk = m - j;
      if (kk > gdeg || g[kk].is_zero() || d[j].is_zero()) continue;
      acc = acc - d[j] * g[kk];
    }
    return acc;
  };

  for (int k = gdeg; k >= 0; --k) {
    g[k] = combine(k + dmax).exact_div(lead);
    if (fast && !pack_slice(g[k], &pg[k], &mg)) fast = false;
  }
  for (int m = 0; m < dmax; ++m)
    if (!combine(m).is_zero()) throw NotDivisible("remainder is nonzero");
  return g;
}

PolyQ mul_big(const PolyQ& a, const PolyQ& b) {
  if (a.is_zero() || b.is_zero()) return PolyQ::zero();
  Sliced sa = y3_slices(a), sb = y3_slices(b);
  return assemble_y3(slices_combine({{&sa, &sb, false}}));
}

}  // namespace bertini
