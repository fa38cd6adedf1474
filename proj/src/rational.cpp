#include "superglinf/rational.hpp"

#include <stdexcept>

namespace superglinf {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("rational: empty string");
  Rational q;
  if (q.set_str(std::string(text), 10) != 0)
    throw std::invalid_argument("rational: cannot parse '" + std::string(text) + "'");
  if (q.get_den() == 0) throw std::invalid_argument("rational: zero denominator");
  q.canonicalize();
  return q;
}

std::string rational_str(const Rational& q) { return q.get_str(); }

}  // namespace superglinf
