#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "torlie/chevalley.hpp"
#include "torlie/classify.hpp"
#include "torlie/errors.hpp"
#include "torlie/realization.hpp"

using namespace torlie;

namespace {

SpectrumFn realization_spectrum(const MatrixRealization& real) {
  return [&real](const DenseVec& h) {
    auto ev = real.cartan_matrix_eigenvalues(h);
    std::vector<Cyc> out;
    for (size_t p = 0; p < ev.size(); ++p)
      for (size_t q = 0; q < ev.size(); ++q) out.push_back(ev[p] - ev[q]);
    return out;
  };
}

}  // namespace

TEST_CASE("realization dimensions") {
  CHECK(MatrixRealization(RealizationKind::SoAntisymmetric, 7, 12)
            .algebra().dim() == 21);
  CHECK(MatrixRealization(RealizationKind::SplitD, 8, 12).algebra().dim() ==
        28);
  CHECK(MatrixRealization(RealizationKind::SplitC, 4, 12).algebra().dim() ==
        10);
  CHECK(MatrixRealization(RealizationKind::SL, 3, 12).algebra().dim() == 8);
  CHECK_THROWS_AS(MatrixRealization(RealizationKind::SplitD, 7, 12), error);
}

TEST_CASE("embed is a Lie homomorphism on all basis pairs") {
  for (auto [kind, n] : std::vector<std::pair<RealizationKind, int>>{
           {RealizationKind::SoAntisymmetric, 5},
           {RealizationKind::SplitD, 6},
           {RealizationKind::SplitC, 4},
           {RealizationKind::SL, 3}}) {
    MatrixRealization real(kind, n, 12);
    const LieAlgebra& L = real.algebra();
    for (int i = 0; i < L.dim(); ++i)
      for (int j = i + 1; j < L.dim(); ++j) {
        ExactMatrix lhs = real.embed_vec(
            to_dense(L.basis_bracket(i, j), L.dim(), 12));
        ExactMatrix rhs =
            real.embed(i) * real.embed(j) - real.embed(j) * real.embed(i);
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("classification of matrix realizations") {
  // so(5) with the rotation-block Cartan is B2
  {
    MatrixRealization real(RealizationKind::SoAntisymmetric, 5, 12);
    Subspace full = Subspace::full(&real.algebra());
    auto cls = classify_semisimple(real.algebra(), full,
                                   real.standard_cartan(),
                                   realization_spectrum(real));
    REQUIRE(cls.ideals.size() == 1);
    CHECK(cls.ideals[0].type == SimpleType::B);
    CHECK(cls.ideals[0].rank == 2);
    CHECK(cls.center_dim() == 0);
  }
  // split forms: D4 from size 8, C2 from size 4, A2 from sl(3)
  {
    MatrixRealization real(RealizationKind::SplitD, 8, 12);
    auto cls = classify_semisimple(real.algebra(),
                                   Subspace::full(&real.algebra()),
                                   real.standard_cartan(),
                                   realization_spectrum(real));
    REQUIRE(cls.ideals.size() == 1);
    CHECK(cls.ideals[0].type == SimpleType::D);
    CHECK(cls.ideals[0].rank == 4);
  }
  {
    MatrixRealization real(RealizationKind::SplitC, 4, 12);
    auto cls = classify_semisimple(real.algebra(),
                                   Subspace::full(&real.algebra()),
                                   real.standard_cartan(),
                                   realization_spectrum(real));
    REQUIRE(cls.ideals.size() == 1);
    // C2 is identified canonically as B2
    CHECK(cls.ideals[0].type == SimpleType::B);
    CHECK(cls.ideals[0].rank == 2);
  }
  {
    MatrixRealization real(RealizationKind::SL, 4, 12);
    auto cls = classify_semisimple(real.algebra(),
                                   Subspace::full(&real.algebra()),
                                   real.standard_cartan(),
                                   realization_spectrum(real));
    REQUIRE(cls.ideals.size() == 1);
    CHECK(cls.ideals[0].type == SimpleType::A);
    CHECK(cls.ideals[0].rank == 3);
  }
}

TEST_CASE("classification round-trips the Chevalley construction") {
  for (auto [t, r] : std::vector<std::pair<SimpleType, int>>{
           {SimpleType::A, 1}, {SimpleType::A, 3}, {SimpleType::B, 3},
           {SimpleType::C, 3}, {SimpleType::D, 4}, {SimpleType::G, 2},
           {SimpleType::F, 4}, {SimpleType::E, 6}}) {
    ChevalleyAlgebra ch(t, r, 12);
    auto cls = classify_semisimple(ch.algebra(),
                                   Subspace::full(&ch.algebra()),
                                   ch.cartan_basis(), chevalley_spectrum(ch));
    REQUIRE(cls.ideals.size() == 1);
    CHECK(cls.ideals[0].rank == r);
    CHECK(cls.center_dim() == 0);
    // canonical label: the type itself here (no ambiguous ranks chosen)
    if (t == SimpleType::D && r == 3) {
      CHECK(cls.ideals[0].type == SimpleType::A);
    } else {
      CHECK(cls.ideals[0].type == t);
    }
    CHECK(static_cast<int>(cls.roots.size()) ==
          static_cast<int>(RootSystem(t, r).roots().size()));
  }
}

TEST_CASE("abelian algebra classifies as pure center") {
  LieAlgebra ab(2, 12, {"a", "b"}, {});
  std::vector<DenseVec> cartan;
  for (int i = 0; i < 2; ++i) {
    DenseVec v = dense_zero(2, 12);
    v[i] = Cyc::one(12);
    cartan.push_back(v);
  }
  auto cls = classify_semisimple(
      ab, Subspace::full(&ab), cartan,
      [](const DenseVec&) { return std::vector<Cyc>{}; });
  CHECK(cls.ideals.empty());
  CHECK(cls.center_dim() == 2);
}

TEST_CASE("non-maximal cartan is rejected") {
  MatrixRealization real(RealizationKind::SL, 3, 12);
  auto cartan = real.standard_cartan();
  cartan.pop_back();  // drop one generator: centralizer strictly larger
  CHECK_THROWS_AS(
      classify_semisimple(real.algebra(), Subspace::full(&real.algebra()),
                          cartan, realization_spectrum(real)),
      not_cartan_error);
}
