#include "bertini/poly.hpp"

#include <cctype>

namespace bertini {

namespace {
thread_local std::uint64_t g_term_budget = 0;
}

std::uint64_t term_budget() { return g_term_budget; }
void set_term_budget(std::uint64_t limit) { g_term_budget = limit; }

namespace detail {

namespace {

struct PackedOperand {
  std::vector<std::uint64_t> w0, w1, w2;
  std::vector<std::int64_t> c;

  // false when a coefficient is not an int64 integer
  bool load(const PolyQ& p) {
    std::size_t n = p.size();
    w0.resize(n);
    w1.resize(n);
    w2.resize(n);
    c.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (!rat_fits_i64(p.terms()[i].c, &c[i])) return false;
      const Monomial& m = p.terms()[i].m;
      w0[i] = m.word(0);
      w1[i] = m.word(1);
      w2[i] = m.word(2);
    }
    return true;
  }
};

// Byte-wise maxima; word-parallel exponent addition is carry-free when the
// per-byte maxima of the two operands sum below 256.
std::array<unsigned, 24> byte_maxima(const PolyQ& p) {
  std::array<unsigned, 24> mx{};
  for (auto& t : p.terms())
    for (int k = 0; k < 24; ++k) mx[k] = std::max<unsigned>(mx[k], t.m.d[k]);
  return mx;
}

}  // namespace

bool try_mul_i64(const PolyQ& a, const PolyQ& b, PolyQ* out) {
  const auto& outer = a.size() <= b.size() ? a : b;
  const auto& inner = a.size() <= b.size() ? b : a;

  auto amax = byte_maxima(outer), bmax = byte_maxima(inner);
  for (int k = 0; k < 24; ++k)
    if (amax[k] + bmax[k] > 255) return false;

  PackedOperand po, pi;
  if (!po.load(outer) || !pi.load(inner)) return false;

  std::size_t products = outer.size() * inner.size();
  I64Table acc(std::min<std::size_t>(products, (std::size_t{1} << 21)));
  const std::size_t ni = inner.size();
  for (std::size_t i = 0; i < outer.size(); ++i) {
    const std::uint64_t a0 = po.w0[i], a1 = po.w1[i], a2 = po.w2[i];
    const std::int64_t ac = po.c[i];
    for (std::size_t j = 0; j < ni; ++j) {
      std::int64_t prod;
      if (__builtin_mul_overflow(ac, pi.c[j], &prod)) return false;
      if (!acc.add(a0 + pi.w0[j], a1 + pi.w1[j], a2 + pi.w2[j], prod)) return false;
    }
  }
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
  *out = PolyQ::from_sorted_terms(std::move(terms));
  return true;
}

}  // namespace detail

PolyP reduce_mod(const PolyQ& p, std::uint64_t prime) {
  std::vector<PolyP::Term> out;
  out.reserve(p.size());
  for (auto& t : p.terms()) {
    Fp c = fp_from_rat(t.c, prime);
    if (!c.is_zero()) out.push_back({t.m, c});
  }
  return PolyP::from_terms(std::move(out));
}

namespace {

struct Cursor {
  std::string_view s;
  std::size_t i = 0;
  bool done() const { return i >= s.size(); }
  char peek() const { return s[i]; }
  bool eat(std::string_view lit) {
    if (s.substr(i, lit.size()) != lit) return false;
    i += lit.size();
    return true;
  }
  std::string digits() {
    std::size_t b = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == b) throw ParseError("expected digits at offset " + std::to_string(b));
    return std::string(s.substr(b, i - b));
  }
  std::string ident() {
    std::size_t b = i;
    while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])))) ++i;
    if (i == b) throw ParseError("expected variable name at offset " + std::to_string(b));
    return std::string(s.substr(b, i - b));
  }
};

template <class C, class MakeCoef>
Poly<C> parse_impl(std::string_view text, MakeCoef make) {
  if (text == "0") return Poly<C>::zero();
  Cursor cur{text};
  std::vector<typename Poly<C>::Term> terms;
  bool neg = cur.eat("-");
  for (;;) {
    std::string num = cur.digits();
    std::string den;
    if (!cur.done() && cur.peek() == '/') {
      cur.i++;
      den = cur.digits();
    }
    Monomial m;
    while (!cur.done() && cur.peek() == '*') {
      cur.i++;
      std::string name = cur.ident();
      auto v = var_from_name(name);
      if (!v) throw ParseError("unknown variable: " + name);
      unsigned e = 1;
      if (!cur.done() && cur.peek() == '^') {
        cur.i++;
        e = static_cast<unsigned>(std::stoul(cur.digits()));
        if (e == 0) throw ParseError("zero exponent");
      }
      if (m.exp(*v) != 0) throw ParseError("repeated variable: " + name);
      m.set(*v, e);
    }
    terms.push_back({m, make(num, den, neg)});
    if (cur.done()) break;
    if (cur.eat(" + "))
      neg = false;
    else if (cur.eat(" - "))
      neg = true;
    else
      throw ParseError("expected ' + ' or ' - ' at offset " + std::to_string(cur.i));
  }
  return Poly<C>::from_terms(std::move(terms));
}

}  // namespace

PolyQ parse_poly_q(std::string_view text) {
  return parse_impl<Rat>(text, [](const std::string& num, const std::string& den, bool neg) {
    Rat q = rat_parse(den.empty() ? num : num + "/" + den);
    return neg ? Rat(-q) : q;
  });
}

PolyP parse_poly_mod(std::string_view text, std::uint64_t prime) {
  return parse_impl<Fp>(text, [&](const std::string& num, const std::string& den, bool neg) {
    Rat q = rat_parse(den.empty() ? num : num + "/" + den);
    Fp x = fp_from_rat(q, prime);
    return neg ? -x : x;
  });
}

}  // namespace bertini
