#include "torlie/rational.hpp"

#include <stdexcept>

namespace torlie {

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rational r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + s);
  r.canonicalize();
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  return r;
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Integer height(const Rational& r) {
  Integer n = abs(r.get_num());
  const Integer& d = r.get_den();
  return n > d ? n : d;
}

Rational rational_gcd(const Rational& a, const Rational& b) {
  if (is_zero(a)) return abs(b);
  if (is_zero(b)) return abs(a);
  Integer num = gcd(a.get_num(), b.get_num());
  Integer den = lcm(a.get_den(), b.get_den());
  Rational g(num, den);
  g.canonicalize();
  return abs(g);
}

}  // namespace torlie
