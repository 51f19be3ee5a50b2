#include "bertini/sigma2.hpp"

namespace bertini {

namespace {
PolyQ v(Var x) { return qvar(x); }
}

RamData<Rat> ram_closed_form() {
  RamData<Rat> out;
  PolyQ s0 = v(Var::a2) * v(Var::c1) - v(Var::a1) * v(Var::c2);
  PolyQ r0 = -(v(Var::a1) * v(Var::b2) * v(Var::c2)) + v(Var::a1) * v(Var::b3) * v(Var::c1) +
             v(Var::a2) * v(Var::b1) * v(Var::c2);
  PolyQ q0 = (v(Var::a1) * v(Var::c2) - v(Var::b1) * v(Var::b3)).scaled(Rat(4)) * s0 +
             v(Var::b2).scaled(Rat(2)) * r0;
  PolyQ p0 = v(Var::b2) * v(Var::b2) - (v(Var::a2) * v(Var::c1)).scaled(Rat(4)) -
             (v(Var::b1) * v(Var::b3)).scaled(Rat(4)) + (v(Var::a1) * v(Var::c2)).scaled(Rat(8));
  auto rule = [](const PolyQ& e0, auto& arr) {
    arr[0] = e0;
    for (unsigned i = 1; i < arr.size(); ++i) {
      arr[i] = brace(e0, i);
      if (i % 2) arr[i] = -arr[i];
    }
  };
  rule(s0, out.s);
  rule(p0, out.p);
  rule(q0, out.q);
  rule(r0, out.r);
  return out;
}

std::array<PolyQ, 3> basepoint_su_generic() {
  PolyQ s0 = v(Var::a2) * v(Var::c1) - v(Var::a1) * v(Var::c2);
  PolyQ su0 = s0 + v(Var::a2) * v(Var::c2) * v(Var::u2) +
              (v(Var::a2) * v(Var::b2) - v(Var::a1) * v(Var::b3)) * v(Var::u3) +
              v(Var::a2) * v(Var::b3) * v(Var::u2) * v(Var::u3) +
              v(Var::a2) * v(Var::a2) * v(Var::u3) * v(Var::u3);
  std::array<PolyQ, 3> su;
  su[0] = su0;
  su[1] = -brace(su0, 1);
  su[2] = brace(su0, 2);
  return su;
}

}  // namespace bertini
