#ifndef TORLIE_CLASSIFY_HPP
#define TORLIE_CLASSIFY_HPP

#include <functional>

#include "torlie/lie_algebra.hpp"
#include "torlie/root_system.hpp"

namespace torlie {

/// Supplies a finite superset of the eigenvalues of ad(h) on the ambient
/// algebra, for h in the span of the chosen Cartan. Exactness makes this
/// safe: the decomposition dimensions are verified to add up, so a missed
/// eigenvalue fails loudly instead of silently.
using SpectrumFn = std::function<std::vector<Cyc>(const DenseVec&)>;

struct WeightSpace {
  std::vector<Cyc> weight;        // values on the given cartan basis
  std::vector<DenseVec> vectors;  // ambient vectors spanning the space
};

/// Joint eigenspace decomposition of S under ad of the cartan basis.
/// Throws not_cartan_error when S is not invariant or the operators are
/// not simultaneously diagonalizable over the candidate spectrum.
std::vector<WeightSpace> weight_decomposition(
    const LieAlgebra& L, const Subspace& S,
    const std::vector<DenseVec>& cartan, const SpectrumFn& candidates);

struct RootDatum {
  std::vector<Cyc> weight;
  DenseVec vector;  // spanning vector of the 1-dimensional root space
  int ideal = -1;
};

struct SimpleIdeal {
  SimpleType type;
  int rank;
  std::vector<int> simple_roots;  // indices into Classification::roots
  std::vector<std::vector<int>> cartan_matrix;
  int root_count = 0;
};

struct Classification {
  std::vector<SimpleIdeal> ideals;
  std::vector<RootDatum> roots;
  std::vector<DenseVec> cartan;  // the (independent) cartan basis used
  std::vector<DenseVec> center;
  int center_dim() const { return static_cast<int>(center.size()); }
  std::vector<std::pair<SimpleType, int>> types() const;

  /// <beta, alpha^vee> from the alpha-string through beta (p - q).
  int string_pairing(int beta, int alpha) const;

 private:
  friend Classification classify_semisimple(const LieAlgebra&, const Subspace&,
                                            const std::vector<DenseVec>&,
                                            const SpectrumFn&);
  std::map<std::string, int> root_lookup_;
  std::string weight_key(const std::vector<Cyc>& w) const;
  int find_weight(const std::vector<Cyc>& w) const;  // -1 if absent
  friend class ModuleAnalyzer;
};

/// Splits S (a subalgebra of L, closed under the cartan action) into
/// center + simple ideals and identifies each ideal's type by matching its
/// Cartan matrix against the standard ones up to simple-root reordering.
/// Equivalent presentations collapse to a canonical label (A1 for rank 1,
/// B2 for B2~C2, A3 for D3).
Classification classify_semisimple(const LieAlgebra& L, const Subspace& S,
                                   const std::vector<DenseVec>& cartan,
                                   const SpectrumFn& candidates);

/// Candidate spectrum for a Chevalley-type base: evaluates all roots on h.
SpectrumFn chevalley_spectrum(const class ChevalleyAlgebra& ch);

}  // namespace torlie

#endif
