#ifndef TORLIE_LIE_ALGEBRA_HPP
#define TORLIE_LIE_ALGEBRA_HPP

#include <array>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "torlie/matrix.hpp"

namespace torlie {

/// Finite-dimensional Lie algebra given by sparse structure constants over
/// Q(zeta_L): [b_i, b_j] = sum_k c_{ij}^k b_k. Only pairs i < j are stored;
/// antisymmetry is built in. Jacobi is verified once at construction
/// (certify=true) and the table is immutable afterwards.
class LieAlgebra {
 public:
  using Key = uint32_t;
  static Key key(int i, int j) {
    return (static_cast<Key>(i) << 16) | static_cast<Key>(j);
  }

  LieAlgebra(int dim, int level, std::vector<std::string> labels,
             std::unordered_map<Key, SparseVec> brackets, bool certify = true);

  int dim() const { return dim_; }
  int level() const { return level_; }
  const std::string& label(int i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// acc += coeff * [b_i, b_j] (any i, j).
  void accumulate_basis_bracket(std::vector<std::pair<int, Cyc>>& acc, int i,
                                int j, const Cyc& coeff) const;
  SparseVec basis_bracket(int i, int j) const;

  SparseVec bracket(const SparseVec& x, const SparseVec& y) const;
  DenseVec bracket(const DenseVec& x, const DenseVec& y) const;

  /// Adjoint matrix of basis element i (cached).
  const ExactMatrix& ad(int i) const;
  ExactMatrix ad(const DenseVec& x) const;

  /// Killing form Gram matrix kappa(b_i, b_j) = tr(ad b_i ad b_j), cached.
  const ExactMatrix& killing() const;
  Cyc killing_pair(const DenseVec& x, const DenseVec& y) const;

  /// Empty iff Jacobi holds on all basis triples i < j < k.
  std::vector<std::array<int, 3>> verify_jacobi(int max_violations = 8) const;

 private:
  void build_ad() const;

  int dim_;
  int level_;
  std::vector<std::string> labels_;
  std::unordered_map<Key, SparseVec> sct_;
  mutable std::vector<ExactMatrix> ad_;
  mutable std::once_flag ad_once_;
  mutable ExactMatrix killing_;
  mutable std::once_flag killing_once_;
};

/// Subspace of a Lie algebra, basis kept in reduced row echelon form so
/// membership and equality are canonical.
class Subspace {
 public:
  Subspace() : ambient_(nullptr) {}
  Subspace(const LieAlgebra* ambient, const std::vector<DenseVec>& gens);
  static Subspace full(const LieAlgebra* ambient);
  static Subspace zero_subspace(const LieAlgebra* ambient);

  const LieAlgebra* ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  int ambient_dim() const;
  const std::vector<SparseVec>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }
  DenseVec basis_vector(int i) const;

  bool contains(const DenseVec& v) const;
  /// Coordinates of v in the echelon basis; nullopt when v is outside.
  std::optional<DenseVec> coords(const DenseVec& v) const;

  Subspace sum(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;
  /// Span of [a, b] over basis pairs.
  Subspace bracket_span(const Subspace& o) const;

  bool operator==(const Subspace& o) const;

 private:
  void check_same(const Subspace& o) const;
  const LieAlgebra* ambient_;
  std::vector<SparseVec> rows_;
  std::vector<int> pivots_;
};

}  // namespace torlie

#endif
