#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "torlie/automorphism.hpp"
#include "torlie/decomposition.hpp"
#include "torlie/errors.hpp"

using namespace torlie;

namespace {

ExactMatrix diag_pm(int n, int level, const std::vector<int>& minus) {
  ExactMatrix m = ExactMatrix::identity(n, level);
  for (int i : minus) m.set(i, i, -Cyc::one(level));
  return m;
}

}  // namespace

TEST_CASE("conjugation automorphisms") {
  const int lv = 12;
  MatrixRealization so3(RealizationKind::SoAntisymmetric, 3, lv);
  // M = diag(1,1,-1): order 2, fixed subspace spanned by F12
  Automorphism a = from_conjugation(so3, diag_pm(3, lv, {2}));
  CHECK(a.order() == 2);
  auto fixed = a.matrix().eigenspace(Cyc::one(lv));
  CHECK(fixed.size() == 1);

  Automorphism id = from_conjugation(so3, ExactMatrix::identity(3, lv));
  CHECK(id.order() == 1);

  // split_D(8), antidiagonal alternating signs: M^2 = -I but Ad has order 2
  MatrixRealization d4(RealizationKind::SplitD, 8, lv);
  ExactMatrix M(8, 8, lv);
  for (int i = 1; i <= 8; ++i)
    M.set(i - 1, 8 - i, Cyc(lv, rat(i % 2 == 0 ? 1 : -1)));
  ExactMatrix M2 = M * M;
  CHECK(M2 == ExactMatrix::identity(8, lv).scaled(-Cyc::one(lv)));
  Automorphism ad = from_conjugation(d4, M);
  CHECK(ad.order() == 2);
}

TEST_CASE("Cartan involution") {
  const int lv = 12;
  // sl(4): fixed subalgebra = antisymmetric matrices, dim 6
  MatrixRealization sl4(RealizationKind::SL, 4, lv);
  Automorphism ci = cartan_involution(sl4);
  CHECK(ci.order() == 2);
  CHECK(ci.matrix().eigenspace(Cyc::one(lv)).size() == 6);

  // so antisymmetric: -X^T = X pointwise, the identity automorphism
  MatrixRealization so4(RealizationKind::SoAntisymmetric, 4, lv);
  CHECK(cartan_involution(so4).order() == 1);

  // sl(2): fixed dim 1, anti-fixed dim 2
  MatrixRealization sl2(RealizationKind::SL, 2, lv);
  Automorphism ci2 = cartan_involution(sl2);
  CHECK(ci2.matrix().eigenspace(Cyc::one(lv)).size() == 1);
  CHECK(ci2.matrix().eigenspace(-Cyc::one(lv)).size() == 2);

  // -J X^T J on sl(3): the A_{2l}^(2) involution, fixed part so(3)-like
  MatrixRealization sl3(RealizationKind::SL, 3, lv);
  Automorphism tw = neg_transpose_antidiag(sl3);
  CHECK(tw.order() == 2);
  CHECK(tw.matrix().eigenspace(Cyc::one(lv)).size() == 3);
  CHECK(tw.matrix().eigenspace(-Cyc::one(lv)).size() == 5);
}

TEST_CASE("diagram and diagonal automorphisms") {
  const int lv = 12;
  ChevalleyAlgebra d4(SimpleType::D, 4, lv);
  // triality 1 -> 3 -> 4 -> 1, node 2 fixed
  Automorphism tri = diagram_automorphism(d4, {2, 1, 3, 0});
  CHECK(tri.order() == 3);

  ChevalleyAlgebra a3(SimpleType::A, 3, lv);
  Automorphism flip = diagram_automorphism(a3, {2, 1, 0});
  CHECK(flip.order() == 2);

  ChevalleyAlgebra a2(SimpleType::A, 2, lv);
  Cyc w = Cyc::root_of_unity(lv, 3, 1);
  Automorphism dg =
      diagonal_automorphism(a2, {w, Cyc::one(lv)});
  CHECK(dg.order() == 3);
}

TEST_CASE("generator images with an unknown normalization scalar") {
  const int lv = 12;
  ChevalleyAlgebra a1(SimpleType::A, 1, lv);
  auto unit = [&](int idx, int pow) {
    DenseVec v = dense_zero(a1.dim(), lv);
    v[idx] = Cyc::one(lv);
    return GenImage{std::move(v), pow};
  };
  // sigma(e) = c f, sigma(f) = e, order 2: solver must find c = 1
  GeneratorImageSpec spec;
  spec.e_img.push_back(unit(a1.f_index(0), 1));
  spec.f_img.push_back(unit(a1.e_index(0), 0));
  spec.has_unknown = true;
  spec.declared_order = 2;
  SolveInfo info;
  Automorphism s = from_generator_images(a1, spec, &info);
  CHECK(s.order() == 2);
  CHECK(info.had_unknown);
  CHECK(info.scalar == Cyc::one(lv));

  // identity images: identity automorphism of order 1
  GeneratorImageSpec ident;
  ident.e_img.push_back(unit(a1.e_index(0), 0));
  ident.f_img.push_back(unit(a1.f_index(0), 0));
  CHECK(from_generator_images(a1, ident).order() == 1);

  // an impossible declared order is reported as an inconsistency
  GeneratorImageSpec bad = spec;
  bad.declared_order = 3;
  CHECK_THROWS_AS(from_generator_images(a1, bad), inconsistency_error);
}

TEST_CASE("joint decomposition of so(5) under two diagonal involutions") {
  const int lv = 12;
  MatrixRealization so5(RealizationKind::SoAntisymmetric, 5, lv);
  Automorphism s0 = from_conjugation(so5, diag_pm(5, lv, {4}));
  Automorphism s1 = from_conjugation(so5, diag_pm(5, lv, {3}));
  CHECK(s0.commutes_with(s1));
  auto d = joint_decomposition(so5.algebra_ptr(), {s0, s1});
  CHECK(d.component({0, 0}).dim() == 3);
  CHECK(d.component({0, 1}).dim() == 3);
  CHECK(d.component({1, 0}).dim() == 3);
  CHECK(d.component({1, 1}).dim() == 1);

  // trivial decomposition under identities: a single component
  Automorphism id = Automorphism::identity(so5.algebra_ptr());
  auto t = joint_decomposition(so5.algebra_ptr(), {id, id});
  CHECK(t.components.size() == 1);
  CHECK(t.component({0, 0}).dim() == 10);

  // exponent reduction and membership
  CHECK(d.reduce_exponent({3, -2}) == Grade{1, 0});
  DenseVec v = d.component({1, 0}).basis_vector(0);
  CHECK(d.in_component(v, {1, 0}));
  CHECK(!d.in_component(v, {0, 0}));
}

TEST_CASE("non-commuting pair is rejected with the pair named") {
  const int lv = 12;
  MatrixRealization so5(RealizationKind::SoAntisymmetric, 5, lv);
  Automorphism s0 = from_conjugation(so5, diag_pm(5, lv, {4}));
  ExactMatrix swap15 = ExactMatrix::identity(5, lv);
  swap15.set(0, 0, Cyc::zero(lv));
  swap15.set(4, 4, Cyc::zero(lv));
  swap15.set(0, 4, Cyc::one(lv));
  swap15.set(4, 0, Cyc::one(lv));
  Automorphism s1 = from_conjugation(so5, swap15);
  CHECK(!s0.commutes_with(s1));
  try {
    joint_decomposition(so5.algebra_ptr(), {s0, s1});
    FAIL("expected commutativity_error");
  } catch (const commutativity_error& e) {
    CHECK(std::string(e.what()).find("sigma_0") != std::string::npos);
    CHECK(std::string(e.what()).find("sigma_1") != std::string::npos);
  }
}

TEST_CASE("order is computed, never declared: composition sanity") {
  const int lv = 12;
  MatrixRealization so5(RealizationKind::SoAntisymmetric, 5, lv);
  Automorphism s0 = from_conjugation(so5, diag_pm(5, lv, {4}));
  Automorphism sq = s0.compose(s0);
  CHECK(sq.order() == 1);
  CHECK(s0.order() % sq.order() == 0);
}
