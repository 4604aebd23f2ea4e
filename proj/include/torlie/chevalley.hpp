#ifndef TORLIE_CHEVALLEY_HPP
#define TORLIE_CHEVALLEY_HPP

#include <memory>

#include "torlie/lie_algebra.hpp"
#include "torlie/root_system.hpp"

namespace torlie {

/// How a basis element is produced from the Chevalley generators; used to
/// extend generator-image maps to the whole algebra.
struct BasisWord {
  enum class Kind { GenE, GenF, CartanPair, BracketE, BracketF };
  Kind kind;
  int simple = -1;     // generator index (outermost letter)
  int sub = -1;        // inner basis index for brackets
  Rational pref = 1;   // scalar prefactor for brackets
};

/// Chevalley basis {h_i} u {e_alpha}: integer structure constants with
/// signs fixed by the extraspecial-pair convention (deterministic given
/// the (height, lex) order on positive roots). Basis order: h_1..h_r,
/// then root vectors in the root system's root order (positives first).
class ChevalleyAlgebra {
 public:
  ChevalleyAlgebra(SimpleType type, int rank, int level);

  const LieAlgebra& algebra() const { return *algebra_; }
  const std::shared_ptr<LieAlgebra>& algebra_ptr() const { return algebra_; }
  const RootSystem& roots() const { return roots_; }
  int rank() const { return roots_.rank(); }
  int dim() const { return algebra_->dim(); }

  int h_index(int i) const { return i; }
  int e_index(int i) const;  // basis index of e_{alpha_i}
  int f_index(int i) const;  // basis index of e_{-alpha_i}
  int index_of_root(const RootCoords& r) const;
  bool is_cartan_index(int k) const { return k < roots_.rank(); }
  const RootCoords& root_of(int k) const;

  const std::vector<BasisWord>& words() const { return words_; }

  /// N_{a,b} for roots with a+b a root (0 otherwise); any signs.
  Rational structure_N(const RootCoords& a, const RootCoords& b) const;

  /// Basis vectors of the standard Cartan subalgebra (the h_i).
  std::vector<DenseVec> cartan_basis() const;
  /// Basis vector e_theta for the highest root (unit coordinate vector).
  DenseVec highest_root_vector() const;

 private:
  RootSystem roots_;
  std::shared_ptr<LieAlgebra> algebra_;
  std::vector<BasisWord> words_;
  // N table on pairs of root indices (in roots().roots() numbering)
  std::map<std::pair<int, int>, Rational> n_;
  int p_value(const RootCoords& a, const RootCoords& b) const;
  Rational n_lookup(const RootCoords& a, const RootCoords& b) const;
};

}  // namespace torlie

#endif
