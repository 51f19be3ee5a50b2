#ifndef BERTINI_POLY_HPP
#define BERTINI_POLY_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "bertini/errors.hpp"
#include "bertini/fp.hpp"
#include "bertini/monomial.hpp"
#include "bertini/rat.hpp"
#include "bertini/variable.hpp"

namespace bertini {

// ---- coefficient shims ----------------------------------------------------

inline bool coef_is_zero(const Rat& q) { return rat_is_zero(q); }
inline bool coef_is_zero(const Fp& x) { return x.is_zero(); }
inline Rat coef_div(const Rat& a, const Rat& b) { return a / b; }
inline Fp coef_div(const Fp& a, const Fp& b) { return fp_div(a, b); }
inline std::string coef_to_string(const Rat& q) { return rat_to_string(q); }
inline std::string coef_to_string(const Fp& x) { return x.to_string(); }
inline bool coef_is_negative(const Rat& q) { return sgn(q) < 0; }
inline bool coef_is_negative(const Fp&) { return false; }
inline Rat coef_abs(const Rat& q) { return abs(q); }
inline Fp coef_abs(const Fp& x) { return x; }

// ---- term budget ----------------------------------------------------------

// A soft cap on the number of live terms inside multiplication kernels; used
// to keep the heaviest symbolic expansions inside a configured memory budget.
// 0 means unlimited.
std::uint64_t term_budget();
void set_term_budget(std::uint64_t limit);

struct TermBudgetGuard {
  std::uint64_t saved;
  explicit TermBudgetGuard(std::uint64_t limit) : saved(term_budget()) { set_term_budget(limit); }
  ~TermBudgetGuard() { set_term_budget(saved); }
};

// Rough in-memory footprint of one stored term; used to translate a byte
// budget into a term budget.
inline constexpr std::uint64_t kBytesPerTerm = 96;

namespace detail {

inline void check_budget(std::size_t live_terms) {
  std::uint64_t cap = term_budget();
  if (cap && live_terms > cap) throw BudgetExceeded("term budget exceeded");
}

// Open-addressing accumulation table for the integer fast path.  Keys are the
// three 64-bit words of a Monomial with an occupancy marker planted in the
// always-zero padding byte, so one 32-byte slot holds key and value together.
class I64Table {
 public:
  static constexpr std::uint64_t kUsedMark = 0x0100000000000000ull;  // byte d[23]

  struct Slot {
    std::uint64_t w0, w1, w2m;
    std::int64_t v;
  };

  explicit I64Table(std::size_t expected) {
    std::size_t cap = 64;
    while (cap < expected * 2) cap <<= 1;
    slot_.assign(cap, Slot{0, 0, 0, 0});
    mask_ = cap - 1;
  }

  static std::uint64_t hash3(std::uint64_t w0, std::uint64_t w1, std::uint64_t w2) {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    h = (h ^ (w0 * 0xff51afd7ed558ccdull)) * 0xc4ceb9fe1a85ec53ull;
    h = (h ^ (w1 * 0xff51afd7ed558ccdull)) * 0xc4ceb9fe1a85ec53ull;
    h = (h ^ (w2 * 0xff51afd7ed558ccdull)) * 0xc4ceb9fe1a85ec53ull;
    return h ^ (h >> 29);
  }

  // false on int64 overflow (caller falls back to exact arithmetic)
  bool add(std::uint64_t w0, std::uint64_t w1, std::uint64_t w2, std::int64_t v) {
    std::uint64_t w2m = w2 | kUsedMark;
    std::size_t i = hash3(w0, w1, w2) & mask_;
    for (;;) {
      Slot& s = slot_[i];
      if (s.w2m == 0) {
        s = Slot{w0, w1, w2m, v};
        ++count_;
        check_budget(count_);
        if (count_ * 2 > mask_) grow();
        return true;
      }
      if (s.w0 == w0 && s.w1 == w1 && s.w2m == w2m)
        return !__builtin_add_overflow(s.v, v, &s.v);
      i = (i + 1) & mask_;
    }
  }

  std::size_t size() const { return count_; }

  template <class F>
  void for_each(F&& f) const {
    for (const Slot& s : slot_) {
      if (s.w2m == 0 || s.v == 0) continue;
      Monomial m;
      std::uint64_t w2 = s.w2m & ~kUsedMark;
      std::memcpy(m.d.data(), &s.w0, 8);
      std::memcpy(m.d.data() + 8, &s.w1, 8);
      std::memcpy(m.d.data() + 16, &w2, 8);
      f(m, s.v);
    }
  }

 private:
  void grow() {
    std::vector<Slot> old;
    old.swap(slot_);
    std::size_t cap = (mask_ + 1) * 2;
    slot_.assign(cap, Slot{0, 0, 0, 0});
    mask_ = cap - 1;
    for (const Slot& s : old) {
      if (s.w2m == 0) continue;
      std::size_t i = hash3(s.w0, s.w1, s.w2m & ~kUsedMark) & mask_;
      while (slot_[i].w2m != 0) i = (i + 1) & mask_;
      slot_[i] = s;
    }
  }

  std::vector<Slot> slot_;
  std::size_t mask_ = 0, count_ = 0;
};

}  // namespace detail

// ---- polynomial -----------------------------------------------------------

// Immutable-after-construction sparse polynomial; terms kept in ascending
// graded-lex order with no zero coefficients.
template <class C>
class Poly {
 public:
  struct Term {
    Monomial m;
    C c;
  };

  Poly() = default;

  static Poly zero() { return Poly(); }

  static Poly constant(C c) {
    Poly p;
    if (!coef_is_zero(c)) p.t_.push_back({Monomial::one(), std::move(c)});
    return p;
  }

  static Poly term(Monomial m, C c) {
    Poly p;
    if (!coef_is_zero(c)) p.t_.push_back({std::move(m), std::move(c)});
    return p;
  }

  static Poly variable(Var v, C unit) { return term(Monomial::var(v), std::move(unit)); }

  static Poly from_terms(std::vector<Term> terms) {
    Poly p;
    p.t_ = std::move(terms);
    p.normalize();
    return p;
  }

  // Caller guarantees strictly ascending monomials and no zero coefficients.
  static Poly from_sorted_terms(std::vector<Term> terms) {
    Poly p;
    p.t_ = std::move(terms);
    return p;
  }

  bool is_zero() const { return t_.empty(); }
  std::size_t size() const { return t_.size(); }
  const std::vector<Term>& terms() const { return t_; }
  const Term& leading() const { return t_.back(); }

  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].m.is_one()); }
  C constant_value() const {
    if (t_.empty()) return C{};
    if (!is_constant()) throw Error("not a constant polynomial");
    return t_[0].c;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.t_.size() != b.t_.size()) return false;
    for (std::size_t i = 0; i < a.t_.size(); ++i)
      if (!(a.t_[i].m == b.t_[i].m) || !(a.t_[i].c == b.t_[i].c)) return false;
    return true;
  }

  friend Poly operator+(const Poly& a, const Poly& b) { return merge(a, b, false); }
  friend Poly operator-(const Poly& a, const Poly& b) { return merge(a, b, true); }

  Poly operator-() const {
    Poly r = *this;
    for (auto& t : r.t_) t.c = -t.c;
    return r;
  }

  Poly scaled(const C& s) const {
    if (coef_is_zero(s)) return Poly();
    Poly r;
    r.t_.reserve(t_.size());
    for (auto& t : t_) {
      C c = t.c * s;
      if (!coef_is_zero(c)) r.t_.push_back({t.m, std::move(c)});
    }
    return r;
  }

  Poly mul_term(const Monomial& m, const C& s) const {
    if (coef_is_zero(s)) return Poly();
    Poly r;
    r.t_.reserve(t_.size());
    for (auto& t : t_) {
      C c = t.c * s;
      if (!coef_is_zero(c)) r.t_.push_back({t.m * m, std::move(c)});
    }
    return r;  // order preserved under monomial shift
  }

  friend Poly operator*(const Poly& a, const Poly& b) { return mul(a, b); }

  Poly pow(unsigned e) const {
    if (e == 0) throw Error("pow(0) unsupported; build a constant instead");
    Poly r = *this;
    for (unsigned i = 1; i < e; ++i) r = mul(r, *this);
    return r;
  }

  // ---- queries ----

  unsigned degree() const {
    unsigned d = 0;
    for (auto& t : t_) d = std::max(d, t.m.deg());
    return d;
  }

  unsigned degree_in(Var v) const {
    unsigned d = 0;
    for (auto& t : t_) d = std::max<unsigned>(d, t.m.exp(v));
    return d;
  }

  template <class Pred>
  unsigned term_degree_in(const Term& t, Pred in_set) const {
    unsigned s = 0;
    for (int i = 0; i < kNumVars; ++i)
      if (in_set(var_at(i))) s += t.m.d[i];
    return s;
  }

  // Homogeneous degree w.r.t. the variables selected by the predicate, or
  // nullopt if not homogeneous.  The zero polynomial reports degree 0.
  template <class Pred>
  std::optional<unsigned> homogeneous_degree_in(Pred in_set) const {
    if (t_.empty()) return 0u;
    unsigned d = term_degree_in(t_[0], in_set);
    for (auto& t : t_)
      if (term_degree_in(t, in_set) != d) return std::nullopt;
    return d;
  }

  bool depends_on(Var v) const {
    for (auto& t : t_)
      if (t.m.exp(v)) return true;
    return false;
  }

  // Coefficient of v^k, with the v-exponent removed.
  Poly slice(Var v, unsigned k) const {
    Poly r;
    for (auto& t : t_)
      if (t.m.exp(v) == k) {
        Monomial m = t.m;
        m.set(v, 0);
        r.t_.push_back({m, t.c});
      }
    std::sort(r.t_.begin(), r.t_.end(), [](const Term& a, const Term& b) { return a.m < b.m; });
    return r;
  }

  // ---- calculus / structure maps ----

  Poly derivative(Var v) const {
    Poly r;
    for (auto& t : t_) {
      unsigned e = t.m.exp(v);
      if (!e) continue;
      Monomial m = t.m;
      m.set(v, e - 1);
      C c = t.c;
      for (unsigned i = 1; i < e; ++i) c += t.c;  // c = e * t.c without needing from_int
      r.t_.push_back({m, std::move(c)});
    }
    std::sort(r.t_.begin(), r.t_.end(), [](const Term& a, const Term& b) { return a.m < b.m; });
    return r;
  }

  // Exchange every coefficient variable with its primed partner.
  Poly swap_primes() const {
    std::vector<Term> out;
    out.reserve(t_.size());
    for (auto& t : t_) {
      Monomial m = t.m;
      for (int i = 0; i < 7; ++i) std::swap(m.d[i], m.d[i + 7]);
      out.push_back({m, t.c});
    }
    return from_terms(std::move(out));
  }

  // ---- substitution / evaluation ----

  // Simultaneous substitution; unbound variables unchanged.
  Poly substitute(const std::map<Var, Poly>& bind) const {
    std::array<const Poly*, kNumVars> b{};
    for (auto& [v, p] : bind) b[idx(v)] = &p;
    std::array<std::vector<Poly>, kNumVars> pows;
    auto power = [&](Var v, unsigned e) -> const Poly& {
      auto& vec = pows[idx(v)];
      if (vec.empty()) vec.push_back(*b[idx(v)]);
      while (vec.size() < e) vec.push_back(mul(vec.back(), vec.front()));
      return vec[e - 1];
    };

    std::unordered_map<Monomial, C, MonoHash> acc;
    for (auto& t : t_) {
      Monomial skel = t.m;
      C coef = t.c;
      Poly prod;
      bool have_poly = false;
      bool dead = false;
      for (int i = 0; i < kNumVars && !dead; ++i) {
        unsigned e = t.m.d[i];
        if (!e || !b[i]) continue;
        skel.set(var_at(i), 0);
        const Poly& pw = power(var_at(i), e);
        if (pw.is_zero()) {
          dead = true;
        } else if (pw.is_constant()) {
          coef = coef * pw.constant_value();
        } else if (!have_poly) {
          prod = pw;
          have_poly = true;
        } else {
          prod = mul(prod, pw);
        }
      }
      if (dead || coef_is_zero(coef)) continue;
      if (!have_poly) {
        auto [it, fresh] = acc.try_emplace(skel, C{});
        it->second += coef;
        if (fresh) detail::check_budget(acc.size());
      } else {
        for (auto& pt : prod.terms()) {
          auto [it, fresh] = acc.try_emplace(skel * pt.m, C{});
          it->second += pt.c * coef;
          if (fresh) detail::check_budget(acc.size());
        }
      }
    }
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (!coef_is_zero(c)) out.push_back({m, std::move(c)});
    return from_terms(std::move(out));
  }

  C evaluate(const std::map<Var, C>& assign) const {
    std::array<const C*, kNumVars> a{};
    for (auto& [v, c] : assign) a[idx(v)] = &c;
    C total{};
    for (auto& t : t_) {
      C prod = t.c;
      for (int i = 0; i < kNumVars; ++i) {
        unsigned e = t.m.d[i];
        if (!e) continue;
        if (!a[i]) throw MissingBinding(std::string("no value for ") + var_name(var_at(i)));
        C base = *a[i];
        for (unsigned k = 0; k < e; ++k) prod = prod * base;
      }
      total += prod;
    }
    return total;
  }

  // ---- exact division ----

  // Quotient q with *this == q * d exactly; NotDivisible otherwise.
  Poly exact_div(const Poly& d) const {
    if (d.is_zero()) throw Error("division by zero polynomial");
    if (is_zero()) return Poly();
    if (d.t_.size() == 1) {
      const Monomial& dm = d.t_[0].m;
      const C& dc = d.t_[0].c;
      Poly r;
      r.t_.reserve(t_.size());
      for (auto& t : t_) {
        if (!dm.divides(t.m)) throw NotDivisible("monomial divisor does not divide a term");
        r.t_.push_back({t.m / dm, coef_div(t.c, dc)});
      }
      return r;
    }
    // long division against a single divisor in graded-lex order
    std::map<Monomial, C, std::greater<Monomial>> rem;
    for (auto& t : t_) rem.emplace(t.m, t.c);
    const Monomial& ltm = d.leading().m;
    const C& ltc = d.leading().c;
    std::vector<Term> q;
    while (!rem.empty()) {
      auto it = rem.begin();
      Monomial m = it->first;
      C c = it->second;
      rem.erase(it);
      if (!ltm.divides(m)) throw NotDivisible("remainder is nonzero");
      Monomial qm = m / ltm;
      C qc = coef_div(c, ltc);
      for (auto& dt : d.t_) {
        if (dt.m == ltm) continue;
        Monomial key = qm * dt.m;
        C delta = qc * dt.c;
        auto [pos, fresh] = rem.try_emplace(key, C{});
        pos->second -= delta;
        if (coef_is_zero(pos->second)) rem.erase(pos);
      }
      q.push_back({qm, std::move(qc)});
    }
    std::reverse(q.begin(), q.end());
    Poly r;
    r.t_ = std::move(q);
    return r;
  }

  bool divisible_by(const Poly& d) const {
    try {
      (void)exact_div(d);
      return true;
    } catch (const NotDivisible&) {
      return false;
    }
  }

  // ---- text ----

  std::string canonical_text() const {
    if (t_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto& t : t_) {
      bool neg = coef_is_negative(t.c);
      if (first) {
        if (neg) out += "-";
        first = false;
      } else {
        out += neg ? " - " : " + ";
      }
      out += coef_to_string(coef_abs(t.c));
      for (int i = 0; i < kNumVars; ++i) {
        unsigned e = t.m.d[i];
        if (!e) continue;
        out += "*";
        out += var_name(var_at(i));
        if (e >= 2) {
          out += "^";
          out += std::to_string(e);
        }
      }
    }
    return out;
  }

 private:
  void normalize() {
    std::sort(t_.begin(), t_.end(), [](const Term& a, const Term& b) { return a.m < b.m; });
    std::size_t w = 0;
    for (std::size_t i = 0; i < t_.size();) {
      Monomial m = t_[i].m;
      C c = std::move(t_[i].c);
      std::size_t j = i + 1;
      while (j < t_.size() && t_[j].m == m) {
        c += t_[j].c;
        ++j;
      }
      if (!coef_is_zero(c)) t_[w++] = {m, std::move(c)};
      i = j;
    }
    t_.resize(w);
  }

  static Poly merge(const Poly& a, const Poly& b, bool subtract) {
    Poly r;
    r.t_.reserve(a.t_.size() + b.t_.size());
    std::size_t i = 0, j = 0;
    while (i < a.t_.size() || j < b.t_.size()) {
      int c;
      if (i == a.t_.size())
        c = 1;
      else if (j == b.t_.size())
        c = -1;
      else
        c = grlex_cmp(a.t_[i].m, b.t_[j].m);
      if (c < 0) {
        r.t_.push_back(a.t_[i++]);
      } else if (c > 0) {
        Term t = b.t_[j++];
        if (subtract) t.c = -t.c;
        r.t_.push_back(std::move(t));
      } else {
        C v = a.t_[i].c;
        if (subtract)
          v -= b.t_[j].c;
        else
          v += b.t_[j].c;
        if (!coef_is_zero(v)) r.t_.push_back({a.t_[i].m, std::move(v)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  static Poly mul(const Poly& a, const Poly& b);

  std::vector<Term> t_;
};

using PolyQ = Poly<Rat>;
using PolyP = Poly<Fp>;

// ---- multiplication kernels ----------------------------------------------

namespace detail {

template <class C>
Poly<C> mul_generic(const Poly<C>& a, const Poly<C>& b) {
  const auto& outer = a.size() <= b.size() ? a : b;
  const auto& inner = a.size() <= b.size() ? b : a;
  std::unordered_map<Monomial, C, MonoHash> acc;
  acc.reserve(inner.size() * 2);
  for (auto& ta : outer.terms()) {
    for (auto& tb : inner.terms()) {
      Monomial m = ta.m * tb.m;
      auto [it, fresh] = acc.try_emplace(m, C{});
      it->second += ta.c * tb.c;
      if (fresh) check_budget(acc.size());
    }
  }
  std::vector<typename Poly<C>::Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!coef_is_zero(c)) out.push_back({m, std::move(c)});
  return Poly<C>::from_terms(std::move(out));
}

// Integer fast path: valid when every coefficient is an int64 integer and no
// intermediate product or sum overflows (checked; falls back otherwise).
bool try_mul_i64(const PolyQ& a, const PolyQ& b, PolyQ* out);

}  // namespace detail

template <class C>
Poly<C> Poly<C>::mul(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  if constexpr (std::is_same_v<C, Rat>) {
    PolyQ fast;
    if (detail::try_mul_i64(a, b, &fast)) return fast;
  }
  return detail::mul_generic(a, b);
}

// Multiply a list of factors, smallest pair first.
template <class C>
Poly<C> mul_many(std::vector<Poly<C>> fs) {
  if (fs.empty()) throw Error("mul_many of nothing");
  while (fs.size() > 1) {
    std::sort(fs.begin(), fs.end(),
              [](const Poly<C>& x, const Poly<C>& y) { return x.size() > y.size(); });
    Poly<C> p = fs.back() * fs[fs.size() - 2];
    fs.pop_back();
    fs.back() = std::move(p);
  }
  return fs[0];
}

// ---- conversions / parsing ------------------------------------------------

PolyP reduce_mod(const PolyQ& p, std::uint64_t prime);
PolyQ parse_poly_q(std::string_view text);
PolyP parse_poly_mod(std::string_view text, std::uint64_t prime);

inline PolyQ qvar(Var v) { return PolyQ::variable(v, Rat(1)); }
inline PolyQ qconst(long n) { return PolyQ::constant(Rat(n)); }

inline bool coef_sqrt(const Rat& a, Rat* out) { return rat_sqrt(a, out); }
inline bool coef_sqrt(const Fp& a, Fp* out) { return fp_sqrt(a, out); }

// Polynomial square root by leading-term peeling; NotAPerfectSquare when no
// exact root exists.  The root's leading coefficient is the nonnegative (or
// Tonelli-chosen) square root, so the result is one fixed choice of sign.
template <class C>
Poly<C> poly_sqrt(const Poly<C>& p) {
  if (p.is_zero()) return p;
  const auto& lt = p.leading();
  Monomial rm;
  for (int i = 0; i < kNumVars; ++i) {
    if (lt.m.d[i] % 2) throw NotAPerfectSquare("odd exponent in leading monomial");
    rm.set(var_at(i), lt.m.d[i] / 2);
  }
  C rc;
  if (!coef_sqrt(lt.c, &rc)) throw NotAPerfectSquare("leading coefficient is not a square");
  Poly<C> root = Poly<C>::term(rm, rc);
  Poly<C> rem = p - root * root;
  C twice_rc = rc + rc;
  std::size_t guard = 4 * p.size() + 64;
  while (!rem.is_zero()) {
    if (guard-- == 0) throw NotAPerfectSquare("peeling did not terminate");
    const auto& lr = rem.leading();
    if (!rm.divides(lr.m)) throw NotAPerfectSquare("leading term not reducible");
    Poly<C> t = Poly<C>::term(lr.m / rm, coef_div(lr.c, twice_rc));
    rem = rem - t * (root + root + t);
    root = root + t;
  }
  return root;
}

}  // namespace bertini

#endif
