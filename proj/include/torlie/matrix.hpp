#ifndef TORLIE_MATRIX_HPP
#define TORLIE_MATRIX_HPP

#include <utility>
#include <vector>

#include "torlie/cyclotomic.hpp"

namespace torlie {

/// Sparse vector: (index, value) pairs, sorted by index, values nonzero.
using SparseVec = std::vector<std::pair<int, Cyc>>;
using DenseVec = std::vector<Cyc>;

DenseVec dense_zero(int n, int level);
SparseVec to_sparse(const DenseVec& v);
DenseVec to_dense(const SparseVec& v, int n, int level);
bool dense_is_zero(const DenseVec& v);
void dense_add_mul(DenseVec& acc, const DenseVec& v, const Cyc& coeff);
void sparse_add_mul(SparseVec& acc, const SparseVec& v, const Cyc& coeff);
Cyc sparse_dot_dense(const SparseVec& a, const DenseVec& b);

/// Exact matrix over Q(zeta_L), sparse rows. Absent entries are zero.
class ExactMatrix {
 public:
  ExactMatrix() : rows_(0), cols_(0), level_(1) {}
  ExactMatrix(int rows, int cols, int level)
      : rows_(rows), cols_(cols), level_(level), r_(rows) {}
  static ExactMatrix identity(int n, int level);
  static ExactMatrix from_rows(std::vector<SparseVec> rows, int cols,
                               int level);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int level() const { return level_; }
  const SparseVec& row(int i) const { return r_[i]; }

  Cyc get(int i, int j) const;
  void set(int i, int j, Cyc v);
  void add_to(int i, int j, const Cyc& v);
  size_t nnz() const;

  ExactMatrix operator+(const ExactMatrix& o) const;
  ExactMatrix operator-(const ExactMatrix& o) const;
  ExactMatrix operator*(const ExactMatrix& o) const;
  ExactMatrix scaled(const Cyc& s) const;
  ExactMatrix transpose() const;
  bool operator==(const ExactMatrix& o) const;

  DenseVec apply(const DenseVec& v) const;    // M * v
  SparseVec apply(const SparseVec& v) const;  // M * v, sparse in/out

  /// Exact basis of the null space {x : M x = 0}. dim + rank(M) = cols.
  std::vector<DenseVec> kernel() const;
  /// kernel(M - lambda I); M must be square.
  std::vector<DenseVec> eigenspace(const Cyc& lambda) const;
  int rank() const;

  /// Appends the rows of `o` below (same column count).
  ExactMatrix stacked(const ExactMatrix& o) const;

  /// Inverse of a square matrix; throws when singular.
  ExactMatrix inverse() const;

 private:
  int rows_, cols_, level_;
  std::vector<SparseVec> r_;
};

/// Fraction-free row echelon reduction, in place. Rows are scaled to
/// primitive integral form after every combination step; the pivot in each
/// column is chosen by least coefficient height (ties by sparsity), which
/// keeps entry growth tame at dimension ~133. Returns (pivot column ->
/// owning row) pairs in elimination order. Zero rows are dropped.
std::vector<std::pair<int, int>> echelonize(std::vector<SparseVec>& rows,
                                            int cols, int level);

/// Reduced row echelon form: echelonize, back-substitute, normalize each
/// pivot to 1 and sort rows by pivot column. Returns pivot columns.
std::vector<int> rref(std::vector<SparseVec>& rows, int cols, int level);

/// Strips denominators and integer content so the row is primitive
/// integral; no-op on zero rows.
void make_primitive(SparseVec& row);

}  // namespace torlie

#endif
