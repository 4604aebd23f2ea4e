#ifndef TORLIE_AUTOMORPHISM_HPP
#define TORLIE_AUTOMORPHISM_HPP

#include <functional>
#include <memory>

#include "torlie/chevalley.hpp"
#include "torlie/realization.hpp"

namespace torlie {

/// Certified automorphism of a structure-constant Lie algebra: the matrix
/// preserves brackets on every basis pair (audited at construction) and
/// order is the computed least n with A^n = id, never a declared value.
class Automorphism {
 public:
  Automorphism(std::shared_ptr<const LieAlgebra> algebra, ExactMatrix m,
               int order_cap = 48);
  static Automorphism identity(std::shared_ptr<const LieAlgebra> algebra);

  const ExactMatrix& matrix() const { return m_; }
  int order() const { return order_; }
  const std::shared_ptr<const LieAlgebra>& algebra_ptr() const { return L_; }

  DenseVec apply(const DenseVec& v) const { return m_.apply(v); }
  Automorphism compose(const Automorphism& inner) const;
  Automorphism power(int k) const;
  bool commutes_with(const Automorphism& o) const;

 private:
  std::shared_ptr<const LieAlgebra> L_;
  ExactMatrix m_;
  int order_;
};

/// Ad(M): X -> M X M^{-1} on a matrix realization. The order is that of
/// the induced map (M^2 = -I still gives order 2). stability_error when
/// conjugation leaves the realized subalgebra.
Automorphism from_conjugation(const MatrixRealization& real,
                              const ExactMatrix& M);

/// Automorphism induced by a linear map on the realizing matrices.
Automorphism from_matrix_map(
    const MatrixRealization& real,
    const std::function<ExactMatrix(const ExactMatrix&)>& fn);

/// X -> -X^T.
Automorphism cartan_involution(const MatrixRealization& real);

/// X -> -J X^T J with J the antidiagonal unit matrix.
Automorphism neg_transpose_antidiag(const MatrixRealization& real);

/// Image of one generator, scaled by c^cpow for the single unknown c.
struct GenImage {
  DenseVec vec;
  int cpow = 0;
};

struct GeneratorImageSpec {
  std::vector<GenImage> e_img, f_img;  // indexed by simple root
  bool has_unknown = false;
  int declared_order = 0;  // when > 0, A^order = id joins the constraints
};

struct SolveInfo {
  bool had_unknown = false;
  Cyc scalar;          // solved value of c
  std::string detail;  // human-readable note about the solve
};

/// Extends generator images to the whole algebra along the stored bracket
/// words, solving the unknown scalar so the extension is a homomorphism
/// of the declared order, then audits every basis pair exactly.
/// inconsistency_error reports the violated relation otherwise.
Automorphism from_generator_images(const ChevalleyAlgebra& ch,
                                   const GeneratorImageSpec& spec,
                                   SolveInfo* info = nullptr);

/// e_i -> e_{perm(i)}, f_i -> f_{perm(i)} (diagram automorphism lift).
Automorphism diagram_automorphism(const ChevalleyAlgebra& ch,
                                  const std::vector<int>& perm);

/// e_i -> s_i e_i, f_i -> s_i^{-1} f_i (torus element).
Automorphism diagonal_automorphism(const ChevalleyAlgebra& ch,
                                   const std::vector<Cyc>& scalars);

}  // namespace torlie

#endif
