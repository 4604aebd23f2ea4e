#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "torlie/cyclotomic.hpp"
#include "torlie/errors.hpp"

using namespace torlie;

namespace {

// Independent oracle: Phi_L by brute-force division of x^L - 1 by the
// product of all Phi_d with d | L, d < L, computed with naive long division
// over int64 fractions (no shared code path with Poly::divide_exact's use
// inside cyclotomic_polynomial is avoided by reimplementing the division).
std::vector<long> oracle_cyclotomic(int L) {
  // polynomials as dense integer coefficient vectors
  auto mul = [](std::vector<long> a, std::vector<long> b) {
    std::vector<long> r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
      for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
  };
  auto divide = [](std::vector<long> num, const std::vector<long>& den) {
    std::vector<long> q(num.size() - den.size() + 1, 0);
    for (int k = static_cast<int>(q.size()) - 1; k >= 0; --k) {
      long lead = num[k + den.size() - 1];
      long d = den.back();
      q[k] = lead / d;
      for (size_t i = 0; i < den.size(); ++i) num[k + i] -= q[k] * den[i];
    }
    return q;
  };
  std::function<std::vector<long>(int)> phi = [&](int n) -> std::vector<long> {
    std::vector<long> num(n + 1, 0);
    num[0] = -1;
    num[n] = 1;
    if (n == 1) return num;
    std::vector<long> den{1};
    for (int d = 1; d < n; ++d)
      if (n % d == 0) den = mul(den, phi(d));
    return divide(num, den);
  };
  return phi(L);
}

Cyc random_cyc(std::mt19937_64& rng, int level) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
  std::vector<Rational> cs;
  for (int i = 0; i < euler_phi(level); ++i) cs.push_back(rat(num(rng), den(rng)));
  return Cyc::from_coeffs(level, cs);
}

}  // namespace

TEST_CASE("cyclotomic polynomials match the division oracle") {
  // frozen from the oracle: Phi_1 = x-1, Phi_4 = x^2+1, Phi_12 = x^4-x^2+1
  CHECK(cyclotomic_polynomial(1) ==
        (Poly::monomial(1, rat(1)) - Poly::monomial(0, rat(1))));
  CHECK(cyclotomic_polynomial(4) ==
        (Poly::monomial(2, rat(1)) + Poly::monomial(0, rat(1))));
  Poly p12 = cyclotomic_polynomial(12);
  CHECK(p12.degree() == 4);
  CHECK(p12.c[0] == 1);
  CHECK(p12.c[1] == 0);
  CHECK(p12.c[2] == -1);
  CHECK(p12.c[3] == 0);
  CHECK(p12.c[4] == 1);
  for (int L : {1, 2, 3, 4, 6, 8, 12}) {
    auto expect = oracle_cyclotomic(L);
    Poly got = cyclotomic_polynomial(L);
    REQUIRE(got.degree() == static_cast<int>(expect.size()) - 1);
    for (size_t i = 0; i < expect.size(); ++i)
      CHECK(got.c[i] == Rational(expect[i]));
    CHECK(got.degree() == euler_phi(L));
    // divides x^L - 1
    Poly xl1 = Poly::monomial(L, rat(1)) - Poly::monomial(0, rat(1));
    CHECK(xl1.divmod(got).second.is_zero());
  }
}

TEST_CASE("roots of unity") {
  const int lv = 12;
  Cyc i4 = Cyc::root_of_unity(lv, 4, 1);
  CHECK(i4 * i4 == -Cyc::one(lv));
  Cyc w = Cyc::root_of_unity(lv, 3, 1);
  CHECK((w * w + w + Cyc::one(lv)).is_zero());
  CHECK(Cyc::root_of_unity(lv, 2, 1) == -Cyc::one(lv));
  CHECK_THROWS_AS(Cyc::root_of_unity(lv, 5, 1), level_mismatch_error);

  // multiplicative order is L / gcd(L, k)
  for (int L : {1, 2, 3, 4, 6, 12})
    for (int k = 0; k < 2 * L; ++k) {
      long expected = L / std::gcd(static_cast<long>(L), static_cast<long>(k));
      Cyc z = Cyc::root_of_unity(lv, L, k);
      if (k % L == 0)
        CHECK(z == Cyc::one(lv));
      else
        CHECK(z.multiplicative_order() == expected);
    }
}

TEST_CASE("field axioms on randomized triples, exact") {
  std::mt19937_64 rng(20240811);
  for (int level : {4, 12}) {
    for (int iter = 0; iter < 120; ++iter) {
      Cyc a = random_cyc(rng, level), b = random_cyc(rng, level),
          c = random_cyc(rng, level);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      if (!a.is_zero()) {
        CHECK(a * a.inverse() == Cyc::one(level));
        CHECK(a / a == Cyc::one(level));
      }
    }
  }
}

TEST_CASE("canonical form is unique and equality structural") {
  const int lv = 12;
  // zeta^12 reduces to 1, zeta^6 to -1, etc.
  std::vector<Rational> raw(13, Rational(0));
  raw[12] = 1;
  CHECK(Cyc::from_coeffs(lv, raw) == Cyc::one(lv));
  Cyc z6 = Cyc::root_of_unity(lv, 12, 6);
  CHECK(z6 == -Cyc::one(lv));
  CHECK(Cyc::root_of_unity(lv, 12, 7) == -Cyc::root_of_unity(lv, 12, 1));
}

TEST_CASE("rational fast paths agree with generic arithmetic") {
  const int lv = 12;
  Cyc a(lv, rat(3, 4)), b(lv, rat(-7, 5));
  CHECK((a * b).to_rational() == rat(-21, 20));
  Cyc z = Cyc::root_of_unity(lv, 12, 1);
  Cyc mixed = z * a;
  Cyc acc = Cyc::zero(lv);
  acc.add_mul(mixed, b);  // rational coeff fast path
  CHECK(acc == mixed * b);
  acc.add_mul(a, z);  // generic path
  CHECK(acc == mixed * b + a * z);
}
