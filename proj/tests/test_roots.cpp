#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "torlie/chevalley.hpp"
#include "torlie/root_system.hpp"

using namespace torlie;

TEST_CASE("root enumeration matches the classical counts") {
  // oracle for B2: {+-e1, +-e2} short, {+-e1+-e2} long: 4 + 4
  RootSystem b2(SimpleType::B, 2);
  CHECK(b2.roots().size() == 8);
  CHECK(b2.short_count() == 4);
  CHECK(b2.long_count() == 4);
  std::set<Rational> classes;
  for (const auto& r : b2.roots()) classes.insert(b2.length_class(r));
  CHECK(classes == std::set<Rational>{Rational(1), Rational(2)});

  CHECK(RootSystem(SimpleType::G, 2).roots().size() == 12);
  CHECK(RootSystem(SimpleType::A, 1).roots().size() == 2);
  CHECK(RootSystem(SimpleType::A, 2).roots().size() == 6);
  CHECK(RootSystem(SimpleType::A, 3).roots().size() == 12);
  CHECK(RootSystem(SimpleType::B, 3).roots().size() == 18);
  CHECK(RootSystem(SimpleType::C, 3).roots().size() == 18);
  CHECK(RootSystem(SimpleType::D, 4).roots().size() == 24);
  CHECK(RootSystem(SimpleType::F, 4).roots().size() == 48);
  CHECK(RootSystem(SimpleType::E, 6).roots().size() == 72);
  CHECK(RootSystem(SimpleType::E, 7).roots().size() == 126);

  // one length class for ADE, two for B/C/F/G
  for (auto [t, r] : std::vector<std::pair<SimpleType, int>>{
           {SimpleType::A, 3}, {SimpleType::D, 4}, {SimpleType::E, 6}}) {
    RootSystem rs(t, r);
    CHECK(rs.long_count() == 0);
  }
  CHECK(RootSystem(SimpleType::G, 2).length_class(
            RootSystem(SimpleType::G, 2).highest_root()) == Rational(3));
}

TEST_CASE("Cartan matrices follow the Bourbaki planches") {
  RootSystem b2(SimpleType::B, 2);
  CHECK(b2.cartan_matrix() ==
        std::vector<std::vector<int>>{{2, -2}, {-1, 2}});
  RootSystem c2(SimpleType::C, 2);
  CHECK(c2.cartan_matrix() ==
        std::vector<std::vector<int>>{{2, -1}, {-2, 2}});

  // E6: chain 1-3-4-5-6 with 2 attached to 4; E7 adds 6-7
  auto edges = [](const RootSystem& rs) {
    std::set<std::pair<int, int>> e;
    for (int i = 0; i < rs.rank(); ++i)
      for (int j = i + 1; j < rs.rank(); ++j)
        if (rs.cartan_matrix()[i][j] != 0) e.insert({i + 1, j + 1});
    return e;
  };
  CHECK(edges(RootSystem(SimpleType::E, 6)) ==
        std::set<std::pair<int, int>>{{1, 3}, {2, 4}, {3, 4}, {4, 5}, {5, 6}});
  CHECK(edges(RootSystem(SimpleType::E, 7)) ==
        std::set<std::pair<int, int>>{
            {1, 3}, {2, 4}, {3, 4}, {4, 5}, {5, 6}, {6, 7}});
  // F4: 1-2=>3-4 with the double edge from 2 (long) to 3 (short)
  RootSystem f4(SimpleType::F, 4);
  CHECK(f4.cartan_matrix()[1][2] == -2);
  CHECK(f4.cartan_matrix()[2][1] == -1);
}

TEST_CASE("highest root") {
  for (auto [t, r] : std::vector<std::pair<SimpleType, int>>{
           {SimpleType::A, 3}, {SimpleType::B, 3}, {SimpleType::C, 2},
           {SimpleType::G, 2}, {SimpleType::F, 4}, {SimpleType::E, 6}}) {
    RootSystem rs(t, r);
    RootCoords theta = rs.highest_root();
    for (int i = 0; i < r; ++i) {
      RootCoords up = theta;
      up[i] += 1;
      CHECK(!rs.is_root(up));  // theta + alpha_i is never a root
    }
    if (rs.long_count() > 0) CHECK(rs.is_long(theta));
  }
  RootSystem e7(SimpleType::E, 7);
  CHECK(e7.highest_root() == RootCoords{2, 2, 3, 4, 3, 2, 1});
  RootSystem e6(SimpleType::E, 6);
  CHECK(e6.highest_root() == RootCoords{1, 2, 2, 3, 2, 1});
}

TEST_CASE("Chevalley algebra dimensions and sl2 relations") {
  ChevalleyAlgebra a1(SimpleType::A, 1, 12);
  CHECK(a1.dim() == 3);
  const LieAlgebra& L = a1.algebra();
  DenseVec e = dense_zero(3, 12), f = dense_zero(3, 12), h = dense_zero(3, 12);
  e[a1.e_index(0)] = Cyc::one(12);
  f[a1.f_index(0)] = Cyc::one(12);
  h[a1.h_index(0)] = Cyc::one(12);
  CHECK(L.bracket(e, f) == h);
  DenseVec he = L.bracket(h, e);
  CHECK(he[a1.e_index(0)] == Cyc(12, rat(2)));
  DenseVec hf = L.bracket(h, f);
  CHECK(hf[a1.f_index(0)] == Cyc(12, rat(-2)));

  // dim = rank + |roots| across supported types
  for (auto [t, r] : std::vector<std::pair<SimpleType, int>>{
           {SimpleType::A, 2}, {SimpleType::A, 3}, {SimpleType::B, 2},
           {SimpleType::B, 3}, {SimpleType::C, 3}, {SimpleType::D, 3},
           {SimpleType::D, 4}, {SimpleType::G, 2}, {SimpleType::F, 4}}) {
    ChevalleyAlgebra ch(t, r, 1);
    CHECK(ch.dim() ==
          r + static_cast<int>(RootSystem(t, r).roots().size()));
  }
}

TEST_CASE("structure constants: integrality, Carter signs, magnitudes") {
  // sl3: extraspecial pair (alpha1, alpha2) gets +(p+1) = +1
  ChevalleyAlgebra a2(SimpleType::A, 2, 12);
  CHECK(a2.structure_N({1, 0}, {0, 1}) == Rational(1));
  CHECK(a2.structure_N({0, 1}, {1, 0}) == Rational(-1));

  // G2: p-values give magnitudes up to 3
  ChevalleyAlgebra g2(SimpleType::G, 2, 12);
  CHECK(g2.structure_N({1, 0}, {0, 1}) == Rational(1));
  CHECK(abs(g2.structure_N({1, 0}, {1, 1})) == Rational(2));
  CHECK(abs(g2.structure_N({1, 0}, {2, 1})) == Rational(3));
  CHECK(g2.structure_N({1, 0}, {3, 1}) == Rational(0));  // 4a+b not a root

  // all structure constants are integers (sample a few algebras)
  for (auto [t, r] : std::vector<std::pair<SimpleType, int>>{
           {SimpleType::B, 3}, {SimpleType::G, 2}, {SimpleType::D, 4}}) {
    ChevalleyAlgebra ch(t, r, 1);
    const RootSystem& rs = ch.roots();
    for (const auto& a : rs.roots())
      for (const auto& b : rs.roots()) {
        RootCoords s = a;
        for (size_t i = 0; i < s.size(); ++i) s[i] += b[i];
        if (rs.is_root(s)) {
          Rational n = ch.structure_N(a, b);
          CHECK(is_integer(n));
          CHECK(n != 0);
          CHECK(ch.structure_N(b, a) == -n);
        }
      }
  }
}

TEST_CASE("E6 and E7 Chevalley algebras build and certify") {
  ChevalleyAlgebra e6(SimpleType::E, 6, 3);
  CHECK(e6.dim() == 78);
  ChevalleyAlgebra e7(SimpleType::E, 7, 2);
  CHECK(e7.dim() == 133);
}
