#ifndef TORLIE_DECOMPOSITION_HPP
#define TORLIE_DECOMPOSITION_HPP

#include <map>

#include "torlie/automorphism.hpp"

namespace torlie {

using Grade = std::vector<int>;

/// Joint eigenspace decomposition of an algebra under a tuple of commuting
/// finite-order automorphisms: components indexed by Z/n_0 x ... x Z/n_N.
struct GradedDecomposition {
  std::shared_ptr<const LieAlgebra> algebra;
  std::vector<int> orders;           // computed automorphism orders
  std::vector<ExactMatrix> sigma;    // automorphism matrices
  std::map<Grade, Subspace> components;

  const Subspace& component(const Grade& g) const;
  std::vector<Grade> grades() const;
  Grade reduce_exponent(const std::vector<int>& exponents) const;
  Cyc eigenvalue(int j, int k) const;  // eps_j^k in the session field

  /// Exact membership: sigma_j v = eps_j^{g_j} v for all j. Equivalent to
  /// lying in the component, since components are full joint eigenspaces.
  bool in_component(const DenseVec& v, const Grade& g) const;
};

/// Builds the decomposition; checks pairwise commutativity (naming the
/// offending pair), that dimensions sum to dim g, and the graded bracket
/// containment [g_k, g_l] subseteq g_{k+l} on all component-basis pairs.
GradedDecomposition joint_decomposition(
    std::shared_ptr<const LieAlgebra> algebra,
    const std::vector<Automorphism>& sigmas, bool check_brackets = true);

}  // namespace torlie

#endif
