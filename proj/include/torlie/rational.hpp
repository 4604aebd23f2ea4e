#ifndef TORLIE_RATIONAL_HPP
#define TORLIE_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace torlie {

/// Exact rational scalar. mpq_class keeps values canonical (reduced,
/// positive denominator), which is exactly the invariant we need.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// Parses "p/q" or "p". Throws std::invalid_argument on garbage.
Rational parse_rational(const std::string& s);

/// Serializes as "p/q" ("q" = 1 collapses to "p").
std::string to_string(const Rational& r);

/// Height of a rational: max(|num|, den). Used for pivot selection in the
/// fraction-free elimination.
Integer height(const Rational& r);

/// gcd of two nonnegative rationals, gcd(a/b, c/d) = gcd(a,c)/lcm(b,d);
/// used to strip content from matrix rows.
Rational rational_gcd(const Rational& a, const Rational& b);

}  // namespace torlie

#endif
