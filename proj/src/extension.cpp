#include "superglinf/extension.hpp"

namespace superglinf {

Rational cocycle(const SuperMatrix& a, const SuperMatrix& b) {
  SuperMatrix c = bracket(a, b);
  Rational s(0);
  for (const auto& [pos, val] : c.entries()) {
    if (pos.first != pos.second) continue;
    int sign = parity_sign(c.parity().at(pos.first)) * j_sign(pos.first);
    s += Rational(sign) * val;
  }
  return s;
}

ExtendedElement extended_bracket(const ExtendedElement& x, const ExtendedElement& y) {
  ExtendedElement out(bracket(x.mat, y.mat));
  out.z = cocycle(x.mat, y.mat);
  return out;
}

}  // namespace superglinf
