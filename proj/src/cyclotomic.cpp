#include "torlie/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "torlie/errors.hpp"

namespace torlie {

// ---------------------------------------------------------------- Poly

int Poly::degree() const {
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
    if (!torlie::is_zero(c[i])) return i;
  return -1;
}

void Poly::trim() {
  while (!c.empty() && torlie::is_zero(c.back())) c.pop_back();
}

Poly Poly::monomial(int deg, const Rational& coeff) {
  Poly p;
  p.c.assign(deg + 1, Rational(0));
  p.c[deg] = coeff;
  return p;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r;
  r.c.resize(std::max(c.size(), o.c.size()), Rational(0));
  for (size_t i = 0; i < c.size(); ++i) r.c[i] += c[i];
  for (size_t i = 0; i < o.c.size(); ++i) r.c[i] += o.c[i];
  r.trim();
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r;
  r.c.resize(std::max(c.size(), o.c.size()), Rational(0));
  for (size_t i = 0; i < c.size(); ++i) r.c[i] += c[i];
  for (size_t i = 0; i < o.c.size(); ++i) r.c[i] -= o.c[i];
  r.trim();
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly{};
  Poly r;
  r.c.assign(c.size() + o.c.size() - 1, Rational(0));
  for (size_t i = 0; i < c.size(); ++i) {
    if (torlie::is_zero(c[i])) continue;
    for (size_t j = 0; j < o.c.size(); ++j) {
      if (torlie::is_zero(o.c[j])) continue;
      r.c[i + j] += c[i] * o.c[j];
    }
  }
  r.trim();
  return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  int dd = d.degree();
  if (dd < 0) throw error("polynomial division by zero");
  Poly rem = *this;
  rem.trim();
  Poly quo;
  int rd = rem.degree();
  if (rd >= dd) quo.c.assign(rd - dd + 1, Rational(0));
  while ((rd = rem.degree()) >= dd) {
    Rational f = rem.c[rd] / d.c[dd];
    quo.c[rd - dd] = f;
    for (int i = 0; i <= dd; ++i) rem.c[rd - dd + i] -= f * d.c[i];
    rem.trim();
  }
  quo.trim();
  return {quo, rem};
}

Poly Poly::divide_exact(const Poly& d) const {
  auto [q, r] = divmod(d);
  if (!r.is_zero()) throw error("polynomial division was not exact");
  return q;
}

bool Poly::operator==(const Poly& o) const {
  Poly a = *this, b = o;
  a.trim();
  b.trim();
  return a.c == b.c;
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (torlie::is_zero(c[i])) continue;
    Rational v = c[i];
    if (!first) {
      os << (sgn(v) < 0 ? " - " : " + ");
      v = abs(v);
    } else if (sgn(v) < 0) {
      os << "-";
      v = abs(v);
    }
    first = false;
    if (i == 0 || v != 1) os << to_string(v);
    if (i > 0) {
      if (v != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

int euler_phi(int L) {
  int result = L, n = L;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      result -= result / p;
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

Poly cyclotomic_polynomial(int L) {
  if (L < 1) throw error("cyclotomic polynomial needs L >= 1");
  // x^L - 1 divided by the product of Phi_d over proper divisors d of L.
  Poly xl1 = Poly::monomial(L, Rational(1)) - Poly::monomial(0, Rational(1));
  if (L == 1) return xl1;
  Poly denom = Poly::monomial(0, Rational(1));
  for (int d = 1; d < L; ++d)
    if (L % d == 0) denom = denom * cyclotomic_polynomial(d);
  return xl1.divide_exact(denom);
}

// ---------------------------------------------------------- level cache

namespace {

struct LevelData {
  int phi = 1;
  Poly phi_poly;
  // x^(phi+k) mod Phi_L for k = 0 .. phi-2, as coefficient rows.
  std::vector<std::vector<Rational>> power_table;
};

const LevelData& level_data(int L) {
  static std::map<int, LevelData> cache;
  static std::mutex mu;
  std::lock_guard lock(mu);
  auto it = cache.find(L);
  if (it != cache.end()) return it->second;
  if (L < 1) throw error("cyclotomic level must be >= 1");
  LevelData d;
  d.phi_poly = cyclotomic_polynomial(L);
  d.phi = d.phi_poly.degree();
  // Seed x^phi mod Phi = -(lower part of Phi), then multiply by x and reduce.
  std::vector<Rational> cur(d.phi, Rational(0));
  for (int i = 0; i < d.phi; ++i) cur[i] = -d.phi_poly.c[i];
  for (int k = 0; k + 2 <= d.phi; ++k) {
    d.power_table.push_back(cur);
    std::vector<Rational> next(d.phi, Rational(0));
    for (int i = 0; i + 1 < d.phi; ++i) next[i + 1] = cur[i];
    const Rational& top = cur[d.phi - 1];
    if (!is_zero(top))
      for (int i = 0; i < d.phi; ++i) next[i] -= top * d.phi_poly.c[i];
    cur = std::move(next);
  }
  if (d.phi >= 2) d.power_table.push_back(cur);  // x^(2*phi-2)
  return cache.emplace(L, std::move(d)).first->second;
}

}  // namespace

// ------------------------------------------------------------------ Cyc

Cyc::Cyc(int level, Rational v) : level_(level) {
  const LevelData& d = level_data(level);
  c_.assign(d.phi, Rational(0));
  c_[0] = std::move(v);
}

Cyc Cyc::from_coeffs(int level, std::vector<Rational> coeffs) {
  const LevelData& d = level_data(level);
  Cyc r;
  r.level_ = level;
  if (static_cast<int>(coeffs.size()) <= d.phi) {
    coeffs.resize(d.phi, Rational(0));
    r.c_ = std::move(coeffs);
  } else {
    r.c_.assign(d.phi, Rational(0));
    r.reduce(coeffs);
    for (int i = 0; i < d.phi; ++i) r.c_[i] = coeffs[i];
  }
  return r;
}

Cyc Cyc::root_of_unity(int session_level, int L, long k) {
  if (L < 1) throw error("root_of_unity: order must be >= 1");
  if (session_level % L != 0)
    throw level_mismatch_error("root_of_unity: order " + std::to_string(L) +
                               " does not divide session level " +
                               std::to_string(session_level));
  long step = session_level / L;
  long e = ((k % session_level) + session_level) % session_level * step %
           session_level;
  // zeta_session^e, reduced.
  std::vector<Rational> raw(static_cast<size_t>(e) + 1, Rational(0));
  raw[e] = Rational(1);
  return from_coeffs(session_level, std::move(raw));
}

void Cyc::check_level(const Cyc& o) const {
  if (level_ != o.level_)
    throw level_mismatch_error("cyclotomic level mismatch: " +
                               std::to_string(level_) + " vs " +
                               std::to_string(o.level_));
}

void Cyc::reduce(std::vector<Rational>& raw) const {
  const LevelData& d = level_data(level_);
  for (int k = static_cast<int>(raw.size()) - 1; k >= d.phi; --k) {
    if (torlie::is_zero(raw[k])) continue;
    if (k - d.phi < static_cast<int>(d.power_table.size())) {
      const auto& row = d.power_table[k - d.phi];
      for (int i = 0; i < d.phi; ++i)
        if (!torlie::is_zero(row[i])) raw[i] += raw[k] * row[i];
    } else {
      // x^k = x^(k-phi) * (-(lower part of Phi)); stay above the table
      for (int i = 0; i < d.phi; ++i)
        if (!torlie::is_zero(d.phi_poly.c[i]))
          raw[k - d.phi + i] -= raw[k] * d.phi_poly.c[i];
    }
    raw[k] = 0;
  }
}

bool Cyc::is_zero() const {
  for (const auto& x : c_)
    if (!torlie::is_zero(x)) return false;
  return true;
}

bool Cyc::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (!torlie::is_zero(c_[i])) return false;
  return true;
}

Rational Cyc::to_rational() const {
  if (!is_rational()) throw error("cyclotomic value is not rational: " + str());
  return c_[0];
}

Cyc Cyc::operator-() const {
  Cyc r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Cyc Cyc::operator+(const Cyc& o) const {
  check_level(o);
  Cyc r = *this;
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
  return r;
}

Cyc Cyc::operator-(const Cyc& o) const {
  check_level(o);
  Cyc r = *this;
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
  return r;
}

Cyc Cyc::operator*(const Cyc& o) const {
  check_level(o);
  const int phi = static_cast<int>(c_.size());
  std::vector<Rational> raw(2 * phi - 1, Rational(0));
  for (int i = 0; i < phi; ++i) {
    if (torlie::is_zero(c_[i])) continue;
    for (int j = 0; j < phi; ++j) {
      if (torlie::is_zero(o.c_[j])) continue;
      raw[i + j] += c_[i] * o.c_[j];
    }
  }
  Cyc r;
  r.level_ = level_;
  r.c_.assign(phi, Rational(0));
  r.reduce(raw);
  for (int i = 0; i < phi; ++i) r.c_[i] = std::move(raw[i]);
  return r;
}

Cyc Cyc::operator*(const Rational& v) const {
  Cyc r = *this;
  if (torlie::is_zero(v)) {
    for (auto& x : r.c_) x = 0;
    return r;
  }
  for (auto& x : r.c_) x *= v;
  return r;
}

void Cyc::add_mul(const Cyc& o, const Cyc& coeff) {
  check_level(o);
  if (coeff.is_rational()) {
    const Rational& v = coeff.c_[0];
    if (torlie::is_zero(v)) return;
    for (size_t i = 0; i < c_.size(); ++i)
      if (!torlie::is_zero(o.c_[i])) c_[i] += v * o.c_[i];
    return;
  }
  *this += o * coeff;
}

Cyc Cyc::inverse() const {
  if (is_zero()) throw error("division by zero in Q(zeta)");
  if (is_rational()) {
    Cyc r = *this;
    r.c_[0] = Rational(1) / c_[0];
    return r;
  }
  // Extended Euclid in Q[x] against Phi_L: a*self + b*Phi = gcd = const.
  const LevelData& d = level_data(level_);
  Poly r0 = d.phi_poly;
  Poly r1;
  r1.c = c_;
  r1.trim();
  Poly s0 = Poly::zero();
  Poly s1 = Poly::monomial(0, Rational(1));
  while (true) {
    auto [q, rem] = r0.divmod(r1);
    Poly s2 = s0 - q * s1;
    if (rem.is_zero()) break;
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r1 is the gcd; Phi_L irreducible => gcd is a nonzero constant.
  if (r1.degree() != 0)
    throw error("cyclotomic inverse: gcd not constant (corrupt value?)");
  Poly inv_poly = s1;
  Rational scale = Rational(1) / r1.c[0];
  std::vector<Rational> raw(inv_poly.c.size(), Rational(0));
  for (size_t i = 0; i < inv_poly.c.size(); ++i) raw[i] = inv_poly.c[i] * scale;
  return from_coeffs(level_, std::move(raw));
}

Cyc Cyc::operator/(const Cyc& o) const { return *this * o.inverse(); }

Cyc Cyc::pow(long e) const {
  Cyc base = *this;
  if (e < 0) {
    base = base.inverse();
    e = -e;
  }
  Cyc acc = Cyc::one(level_);
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

bool Cyc::operator==(const Cyc& o) const {
  check_level(o);
  return c_ == o.c_;
}

long Cyc::multiplicative_order(long cap) const {
  if (is_zero()) return 0;
  Cyc one = Cyc::one(level_);
  Cyc acc = *this;
  for (long n = 1; n <= cap; ++n) {
    if (acc == one) return n;
    acc *= *this;
  }
  return 0;
}

Integer Cyc::coeff_height() const {
  Integer h = 0;
  for (const auto& x : c_) {
    Integer hx = height(x);
    if (hx > h) h = hx;
  }
  return h;
}

std::string Cyc::str() const {
  Poly p;
  p.c = c_;
  return p.str("z" + std::to_string(level_));
}

std::string Cyc::key() const {
  std::string s = std::to_string(level_);
  for (const auto& x : c_) {
    s += '|';
    s += to_string(x);
  }
  return s;
}

}  // namespace torlie
