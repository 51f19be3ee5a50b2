#ifndef BERTINI_PENCIL_IO_HPP
#define BERTINI_PENCIL_IO_HPP

#include <string>

#include "bertini/pencil.hpp"

namespace bertini {

// A pencil file is JSON: {"w": {"a1": "...", ..., "c2": "..."},
// "wp": {same keys}} with exact rational strings "n/d" or integer strings,
// plus an optional {"field": {"prime": "p"}} selecting F_p (values are then
// reduced as residues).  All values must be strings.
struct LoadedPencil {
  bool modular = false;
  std::uint64_t prime = 0;
  PencilSpec<Rat> rat;
  PencilSpec<Fp> fp;
};

LoadedPencil load_pencil_file(const std::string& path);  // throws ParseError

}  // namespace bertini

#endif
