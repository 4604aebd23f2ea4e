#include "torlie/decomposition.hpp"

#include <sstream>

#include "torlie/errors.hpp"

namespace torlie {

const Subspace& GradedDecomposition::component(const Grade& g) const {
  auto it = components.find(reduce_exponent(g));
  if (it == components.end()) throw error("no component at that grade");
  return it->second;
}

std::vector<Grade> GradedDecomposition::grades() const {
  std::vector<Grade> out;
  for (const auto& [g, s] : components) out.push_back(g);
  return out;
}

Grade GradedDecomposition::reduce_exponent(
    const std::vector<int>& exponents) const {
  if (exponents.size() != orders.size())
    throw dimension_error("exponent tuple length mismatch");
  Grade g(exponents.size());
  for (size_t j = 0; j < exponents.size(); ++j)
    g[j] = ((exponents[j] % orders[j]) + orders[j]) % orders[j];
  return g;
}

Cyc GradedDecomposition::eigenvalue(int j, int k) const {
  return Cyc::root_of_unity(algebra->level(), orders[j], k);
}

bool GradedDecomposition::in_component(const DenseVec& v,
                                       const Grade& grade) const {
  Grade g = reduce_exponent(grade);
  for (size_t j = 0; j < sigma.size(); ++j) {
    DenseVec sv = sigma[j].apply(v);
    Cyc eps = eigenvalue(static_cast<int>(j), g[j]);
    for (int i = 0; i < algebra->dim(); ++i)
      if (!(sv[i] == eps * v[i])) return false;
  }
  return true;
}

GradedDecomposition joint_decomposition(
    std::shared_ptr<const LieAlgebra> algebra,
    const std::vector<Automorphism>& sigmas, bool check_brackets) {
  if (sigmas.empty()) throw error("need at least one automorphism");
  for (const auto& s : sigmas)
    if (s.algebra_ptr().get() != algebra.get())
      throw error("automorphism acts on a different algebra");
  for (size_t a = 0; a < sigmas.size(); ++a)
    for (size_t b = a + 1; b < sigmas.size(); ++b)
      if (!sigmas[a].commutes_with(sigmas[b])) {
        std::ostringstream os;
        os << "automorphisms sigma_" << a << " and sigma_" << b
           << " do not commute";
        throw commutativity_error(os.str());
      }

  GradedDecomposition d;
  d.algebra = algebra;
  for (const auto& s : sigmas) {
    d.orders.push_back(s.order());
    d.sigma.push_back(s.matrix());
  }

  const int dim = algebra->dim();
  const int level = algebra->level();
  const int N = static_cast<int>(sigmas.size());

  // enumerate grade tuples
  std::vector<Grade> all{{}};
  for (int j = 0; j < N; ++j) {
    std::vector<Grade> next;
    for (const auto& g : all)
      for (int k = 0; k < d.orders[j]; ++k) {
        Grade h = g;
        h.push_back(k);
        next.push_back(std::move(h));
      }
    all = std::move(next);
  }

  int total = 0;
  for (const auto& g : all) {
    // kernel of the stacked (sigma_j - eps_j^{k_j} I)
    ExactMatrix stacked(0, dim, level);
    for (int j = 0; j < N; ++j) {
      ExactMatrix m = d.sigma[j] -
                      ExactMatrix::identity(dim, level).scaled(
                          d.eigenvalue(j, g[j]));
      stacked = stacked.stacked(m);
    }
    auto ker = stacked.kernel();
    Subspace comp(algebra.get(), ker);
    total += comp.dim();
    d.components.emplace(g, std::move(comp));
  }
  if (total != dim)
    throw error("joint decomposition dimensions sum to " +
                std::to_string(total) + " instead of " + std::to_string(dim));

  if (check_brackets) {
    // [g_k, g_l] subseteq g_{k+l}, via the exact eigenvalue test
    for (const auto& [gk, ck] : d.components) {
      for (const auto& [gl, cl] : d.components) {
        Grade sum(gk.size());
        for (size_t j = 0; j < gk.size(); ++j) sum[j] = gk[j] + gl[j];
        sum = d.reduce_exponent(sum);
        for (int a = 0; a < ck.dim(); ++a)
          for (int b = 0; b < cl.dim(); ++b) {
            SparseVec w = algebra->bracket(ck.rows()[a], cl.rows()[b]);
            if (w.empty()) continue;
            DenseVec wd = to_dense(w, dim, level);
            if (!d.in_component(wd, sum))
              throw error("graded bracket containment fails");
          }
      }
    }
  }
  return d;
}

}  // namespace torlie
