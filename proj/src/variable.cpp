#include "bertini/variable.hpp"

namespace bertini {

namespace {
constexpr const char* kNames[kNumVars] = {
    "a1", "a2", "b1", "b2", "b3", "c1", "c2",
    "a1p", "a2p", "b1p", "b2p", "b3p", "c1p", "c2p",
    "y1", "y2", "y3",
    "t1", "t2",
    "u2", "u3",
};
}

const char* var_name(Var v) { return kNames[idx(v)]; }

std::optional<Var> var_from_name(std::string_view name) {
  for (int i = 0; i < kNumVars; ++i)
    if (name == kNames[i]) return var_at(i);
  return std::nullopt;
}

}  // namespace bertini
