#ifndef BERTINI_VARIABLE_HPP
#define BERTINI_VARIABLE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace bertini {

// The fixed variable universe, in canonical order.  The first fourteen are the
// pencil coefficients (unprimed block, then primed block, with matching
// offsets so priming is "index +/- 7"), then the point coordinates y, the
// bivariate-form placeholders t, and the basepoint parameters u.
enum class Var : std::uint8_t {
  a1, a2, b1, b2, b3, c1, c2,
  a1p, a2p, b1p, b2p, b3p, c1p, c2p,
  y1, y2, y3,
  t1, t2,
  u2, u3,
};

inline constexpr int kNumVars = 21;

inline constexpr int idx(Var v) { return static_cast<int>(v); }
inline constexpr Var var_at(int i) { return static_cast<Var>(i); }

inline constexpr bool is_unprimed_coeff(Var v) { return idx(v) < 7; }
inline constexpr bool is_primed_coeff(Var v) { return idx(v) >= 7 && idx(v) < 14; }
inline constexpr bool is_coeff(Var v) { return idx(v) < 14; }
inline constexpr bool is_y(Var v) { return v == Var::y1 || v == Var::y2 || v == Var::y3; }
inline constexpr bool is_t(Var v) { return v == Var::t1 || v == Var::t2; }
inline constexpr bool is_u(Var v) { return v == Var::u2 || v == Var::u3; }

// a1 <-> a1p and so on; y/t/u variables have no partner.
inline constexpr Var prime_partner(Var v) {
  return var_at(idx(v) < 7 ? idx(v) + 7 : idx(v) - 7);
}

const char* var_name(Var v);
std::optional<Var> var_from_name(std::string_view name);

}  // namespace bertini

#endif
