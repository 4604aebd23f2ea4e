#ifndef TORLIE_CYCLOTOMIC_HPP
#define TORLIE_CYCLOTOMIC_HPP

#include <string>
#include <vector>

#include "torlie/rational.hpp"

namespace torlie {

/// Dense polynomial over the rationals, coefficient of x^i at index i.
/// Just enough arithmetic for cyclotomic polynomials and the scalar solver.
struct Poly {
  std::vector<Rational> c;

  int degree() const;  // -1 for the zero polynomial
  bool is_zero() const { return degree() < 0; }
  void trim();

  static Poly zero() { return Poly{}; }
  static Poly monomial(int deg, const Rational& coeff);

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;

  /// Exact division; throws if the remainder is nonzero.
  Poly divide_exact(const Poly& d) const;
  /// Euclidean division returning (quotient, remainder).
  std::pair<Poly, Poly> divmod(const Poly& d) const;

  bool operator==(const Poly& o) const;
  std::string str(const std::string& var = "x") const;
};

/// Phi_L, the L-th cyclotomic polynomial: monic of degree phi(L), computed
/// by the recursive exact division of x^L - 1 by the lower Phi_d, d|L.
Poly cyclotomic_polynomial(int L);

int euler_phi(int L);

/// Element of Q(zeta_L), stored as a polynomial in zeta_L reduced mod
/// Phi_L. The reduced form is unique, so equality is coefficient equality.
/// All binary operations require equal levels (level_mismatch_error
/// otherwise); every value in a session shares the session level.
class Cyc {
 public:
  Cyc() : level_(1), c_(1) {}  // zero at level 1
  Cyc(int level, Rational rational_value);
  static Cyc zero(int level) { return Cyc(level, Rational(0)); }
  static Cyc one(int level) { return Cyc(level, Rational(1)); }
  static Cyc from_coeffs(int level, std::vector<Rational> coeffs);

  /// zeta_L^k inside the session field of level `session_level`.
  /// Requires L >= 1 and L | session_level.
  static Cyc root_of_unity(int session_level, int L, long k);

  int level() const { return level_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;  // all coefficients beyond degree 0 vanish
  const Rational& rational_part() const { return c_[0]; }
  /// Throws if the value is not rational.
  Rational to_rational() const;

  Cyc operator-() const;
  Cyc operator+(const Cyc& o) const;
  Cyc operator-(const Cyc& o) const;
  Cyc operator*(const Cyc& o) const;
  Cyc operator*(const Rational& r) const;
  Cyc operator/(const Cyc& o) const;
  Cyc inverse() const;
  Cyc pow(long e) const;

  Cyc& operator+=(const Cyc& o) { return *this = *this + o; }
  Cyc& operator-=(const Cyc& o) { return *this = *this - o; }
  Cyc& operator*=(const Cyc& o) { return *this = *this * o; }

  /// Adds coeff * o in place; the workhorse of the linear algebra.
  void add_mul(const Cyc& o, const Cyc& coeff);

  bool operator==(const Cyc& o) const;
  bool operator!=(const Cyc& o) const { return !(*this == o); }

  /// Multiplicative order when the value is a root of unity, 0 otherwise
  /// (bounded search up to `cap`).
  long multiplicative_order(long cap = 1000) const;

  /// Max height over coefficients; pivot-selection metric.
  Integer coeff_height() const;

  /// Canonical text form, e.g. "1/2+3*z^2" with z = zeta_L.
  std::string str() const;
  /// Stable key usable in hash maps (level + coefficient list).
  std::string key() const;

 private:
  void check_level(const Cyc& o) const;
  void reduce(std::vector<Rational>& raw) const;  // mod Phi_L, in place

  int level_;
  std::vector<Rational> c_;  // size phi(level_)
};

inline Cyc operator*(const Rational& r, const Cyc& c) { return c * r; }

}  // namespace torlie

#endif
