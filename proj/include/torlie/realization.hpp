#ifndef TORLIE_REALIZATION_HPP
#define TORLIE_REALIZATION_HPP

#include <functional>
#include <memory>

#include "torlie/lie_algebra.hpp"

namespace torlie {

enum class RealizationKind {
  SoAntisymmetric,  // {X : X^T = -X}, size n
  SplitD,           // {(a b; c -a^T) : b^T=-b, c^T=-c}, size 2k, type D_k
  SplitC,           // same with b^T=b, c^T=c, type C_k
  SL                // traceless n x n, type A_{n-1}
};

std::string kind_name(RealizationKind k);

/// A classical Lie algebra together with its realization by n x n matrices.
/// The structure constants are extracted from commutators of the basis
/// matrices, so embed is a Lie isomorphism onto its image by construction
/// (re-verified in tests on all basis pairs).
class MatrixRealization {
 public:
  MatrixRealization(RealizationKind kind, int n, int level);

  RealizationKind kind() const { return kind_; }
  int matrix_size() const { return n_; }
  int level() const { return level_; }
  const std::shared_ptr<LieAlgebra>& algebra_ptr() const { return algebra_; }
  const LieAlgebra& algebra() const { return *algebra_; }

  const ExactMatrix& embed(int basis_index) const { return basis_[basis_index]; }
  ExactMatrix embed_vec(const DenseVec& v) const;

  /// Coordinates of an n x n matrix in the basis; stability_error when the
  /// matrix lies outside the realized subalgebra.
  DenseVec coords_of(const ExactMatrix& m) const;

  /// Standard Cartan: rotation blocks F_{2i-1,2i} for the antisymmetric
  /// realization, diagonal matrices otherwise.
  std::vector<DenseVec> standard_cartan() const;

  /// Eigenvalues (with multiplicity) of embed_vec(h) for h in the span of
  /// the standard Cartan; closed form per realization kind.
  std::vector<Cyc> cartan_matrix_eigenvalues(const DenseVec& h) const;

 private:
  RealizationKind kind_;
  int n_;
  int level_;
  std::vector<ExactMatrix> basis_;
  std::shared_ptr<LieAlgebra> algebra_;
};

}  // namespace torlie

#endif
