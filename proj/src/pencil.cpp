#include "bertini/pencil.hpp"

namespace bertini {

PencilSpec<Rat> generic_pencil() {
  PencilSpec<Rat> s;
  s.generic = true;
  s.unit = Rat(1);
  for (int i = 0; i < 14; ++i) s.entry[i] = qvar(var_at(i));
  return s;
}

PencilSpec<Rat> generic_geiser_pencil() {
  PencilSpec<Rat> s = generic_pencil();
  s.entry[idx(Var::a1)] = PolyQ::zero();
  s.entry[idx(Var::a2)] = PolyQ::zero();
  return s;
}

}  // namespace bertini
