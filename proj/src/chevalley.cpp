#include "torlie/chevalley.hpp"

#include <algorithm>

#include "torlie/errors.hpp"

namespace torlie {

namespace {

RootCoords negate(const RootCoords& r) {
  RootCoords n = r;
  for (auto& x : n) x = -x;
  return n;
}

RootCoords add(const RootCoords& a, const RootCoords& b) {
  RootCoords s = a;
  for (size_t i = 0; i < s.size(); ++i) s[i] += b[i];
  return s;
}

RootCoords sub(const RootCoords& a, const RootCoords& b) {
  RootCoords s = a;
  for (size_t i = 0; i < s.size(); ++i) s[i] -= b[i];
  return s;
}

bool is_positive(const RootCoords& r) {
  for (int x : r)
    if (x != 0) return x > 0;
  return false;
}

std::string root_label(const RootCoords& r) {
  bool pos = is_positive(r);
  RootCoords c = pos ? r : negate(r);
  std::string s = pos ? "e(" : "f(";
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c[i]);
  }
  return s + ")";
}

}  // namespace

int ChevalleyAlgebra::p_value(const RootCoords& a, const RootCoords& b) const {
  int p = 0;
  RootCoords cur = sub(b, a);
  while (roots_.is_root(cur)) {
    ++p;
    cur = sub(cur, a);
  }
  return p;
}

Rational ChevalleyAlgebra::n_lookup(const RootCoords& a,
                                    const RootCoords& b) const {
  if (!roots_.is_root(add(a, b))) return 0;
  bool a_pos = is_positive(a), b_pos = is_positive(b);
  if (!a_pos && !b_pos) return -n_lookup(negate(a), negate(b));
  if (a_pos && b_pos) {
    int ia = roots_.root_index(a), ib = roots_.root_index(b);
    auto it = n_.find({ia, ib});
    if (it != n_.end()) return it->second;
    it = n_.find({ib, ia});
    if (it != n_.end()) return -it->second;
    throw error("structure constant requested before it was computed");
  }
  if (!a_pos && b_pos) return -n_lookup(b, a);
  // a positive, b negative; rotate the zero-sum triple (a, b, z)
  RootCoords z = negate(add(a, b));
  if (is_positive(z)) {
    // N(a,b) = (z,z)/(b,b) * N(z,a), with z, a positive
    return roots_.squared_length(z) / roots_.squared_length(b) *
           n_lookup(z, a);
  }
  // N(a,b) = (z,z)/(a,a) * N(b,z), with b, z negative
  return roots_.squared_length(z) / roots_.squared_length(a) *
         n_lookup(b, z);
}

Rational ChevalleyAlgebra::structure_N(const RootCoords& a,
                                       const RootCoords& b) const {
  return n_lookup(a, b);
}

ChevalleyAlgebra::ChevalleyAlgebra(SimpleType type, int rank, int level)
    : roots_(type, rank) {
  const auto& pos = roots_.positive_roots();
  std::map<RootCoords, int> pos_order;
  for (int i = 0; i < static_cast<int>(pos.size()); ++i) pos_order[pos[i]] = i;

  // N constants for positive special pairs, by increasing height of the sum.
  // Extraspecial pair of gamma gets +(p+1); the rest follow from Jacobi.
  for (const auto& gamma : pos) {
    std::vector<std::pair<int, RootCoords>> specials;  // (order(alpha), alpha)
    for (const auto& alpha : pos) {
      RootCoords beta = sub(gamma, alpha);
      if (!roots_.is_root(beta) || !is_positive(beta)) continue;
      if (pos_order[alpha] < pos_order[beta])
        specials.emplace_back(pos_order[alpha], alpha);
    }
    if (specials.empty()) continue;
    std::sort(specials.begin(), specials.end());
    const RootCoords a1 = specials[0].second;
    const RootCoords b1 = sub(gamma, a1);
    Rational n1 = p_value(a1, b1) + 1;
    n_[{roots_.root_index(a1), roots_.root_index(b1)}] = n1;

    const Rational glen = roots_.squared_length(gamma);
    const Rational b1len = roots_.squared_length(b1);
    for (size_t s = 1; s < specials.size(); ++s) {
      const RootCoords& alpha = specials[s].second;
      RootCoords beta = sub(gamma, alpha);
      // Jacobi on (e_{-a1}, e_alpha, e_beta); both shoulder terms pair
      // through beta1 = gamma - a1.
      Rational t1 = 0, t3 = 0;
      RootCoords xi = sub(alpha, a1);
      if (roots_.is_root(xi))
        t1 = n_lookup(negate(a1), alpha) * n_lookup(xi, beta);
      RootCoords eta = sub(beta, a1);
      if (roots_.is_root(eta))
        t3 = n_lookup(beta, negate(a1)) * n_lookup(eta, alpha);
      if (is_zero(t1) && is_zero(t3) && !roots_.is_root(xi) &&
          !roots_.is_root(eta))
        throw error("extraspecial recursion degenerate at " +
                    root_label(gamma));
      Rational n = (t1 + t3) * glen / (b1len * n1);
      Rational expect = p_value(alpha, beta) + 1;
      if (abs(n) != expect)
        throw error("structure constant magnitude mismatch at " +
                    root_label(gamma));
      n_[{roots_.root_index(alpha), roots_.root_index(beta)}] = n;
    }
  }

  // Assemble the structure-constant table.
  const auto& all = roots_.roots();
  int dim = rank + static_cast<int>(all.size());
  std::vector<std::string> labels;
  for (int i = 1; i <= rank; ++i) labels.push_back("h" + std::to_string(i));
  for (const auto& r : all) labels.push_back(root_label(r));

  std::unordered_map<LieAlgebra::Key, SparseVec> sct;
  auto cy = [&](const Rational& v) { return Cyc(level, v); };
  // [h_i, e_r] = <r, alpha_i^vee> e_r
  for (int i = 0; i < rank; ++i) {
    RootCoords alpha_i(rank, 0);
    alpha_i[i] = 1;
    for (size_t r = 0; r < all.size(); ++r) {
      int c = roots_.cartan_pairing(all[r], alpha_i);
      if (c != 0)
        sct[LieAlgebra::key(i, rank + static_cast<int>(r))] = {
            {rank + static_cast<int>(r), cy(c)}};
    }
  }
  // [e_a, e_b]
  for (size_t r = 0; r < all.size(); ++r) {
    for (size_t s = r + 1; s < all.size(); ++s) {
      RootCoords sum = add(all[r], all[s]);
      bool zero = std::all_of(sum.begin(), sum.end(),
                              [](int x) { return x == 0; });
      if (zero) {
        auto cc = roots_.coroot_coords(all[r]);
        SparseVec h;
        for (int i = 0; i < rank; ++i)
          if (cc[i] != 0) h.emplace_back(i, cy(cc[i]));
        sct[LieAlgebra::key(rank + static_cast<int>(r),
                            rank + static_cast<int>(s))] = std::move(h);
      } else if (roots_.is_root(sum)) {
        Rational n = n_lookup(all[r], all[s]);
        sct[LieAlgebra::key(rank + static_cast<int>(r),
                            rank + static_cast<int>(s))] = {
            {rank + static_cast<int>(roots_.root_index(sum)), cy(n)}};
      }
    }
  }
  algebra_ = std::make_shared<LieAlgebra>(dim, level, std::move(labels),
                                          std::move(sct), /*certify=*/true);

  // Generator words: extraspecial decompositions, left letter simple.
  words_.resize(dim);
  for (int i = 0; i < rank; ++i)
    words_[i] = BasisWord{BasisWord::Kind::CartanPair, i, -1, 1};
  for (size_t r = 0; r < all.size(); ++r) {
    const RootCoords& root = all[r];
    int idx = rank + static_cast<int>(r);
    bool posr = is_positive(root);
    RootCoords proot = posr ? root : negate(root);
    if (roots_.height(proot) == 1) {
      int i = static_cast<int>(std::find(proot.begin(), proot.end(), 1) -
                               proot.begin());
      words_[idx] = BasisWord{
          posr ? BasisWord::Kind::GenE : BasisWord::Kind::GenF, i, -1, 1};
      continue;
    }
    // extraspecial first factor is simple for every non-simple positive root
    RootCoords a1;
    int best = -1;
    for (const auto& alpha : pos) {
      RootCoords beta = sub(proot, alpha);
      if (!roots_.is_root(beta) || !is_positive(beta)) continue;
      if (pos_order[alpha] >= pos_order[beta]) continue;
      if (best < 0 || pos_order[alpha] < best) {
        best = pos_order[alpha];
        a1 = alpha;
      }
    }
    if (best < 0 || roots_.height(a1) != 1)
      throw error("extraspecial pair not led by a simple root");
    int i = static_cast<int>(std::find(a1.begin(), a1.end(), 1) - a1.begin());
    RootCoords rest = sub(proot, a1);
    Rational n = n_lookup(a1, rest);
    if (posr) {
      words_[idx] = BasisWord{BasisWord::Kind::BracketE, i,
                              rank + roots_.root_index(rest), 1 / n};
    } else {
      words_[idx] = BasisWord{BasisWord::Kind::BracketF, i,
                              rank + roots_.root_index(negate(rest)), -1 / n};
    }
  }
}

int ChevalleyAlgebra::e_index(int i) const {
  RootCoords alpha(roots_.rank(), 0);
  alpha[i] = 1;
  return index_of_root(alpha);
}

int ChevalleyAlgebra::f_index(int i) const {
  RootCoords alpha(roots_.rank(), 0);
  alpha[i] = -1;
  return index_of_root(alpha);
}

int ChevalleyAlgebra::index_of_root(const RootCoords& r) const {
  int i = roots_.root_index(r);
  if (i < 0) throw error("not a root");
  return roots_.rank() + i;
}

const RootCoords& ChevalleyAlgebra::root_of(int k) const {
  if (k < roots_.rank()) throw error("cartan index has no root");
  return roots_.roots()[k - roots_.rank()];
}

std::vector<DenseVec> ChevalleyAlgebra::cartan_basis() const {
  std::vector<DenseVec> b;
  for (int i = 0; i < roots_.rank(); ++i) {
    DenseVec v = dense_zero(dim(), algebra_->level());
    v[i] = Cyc::one(algebra_->level());
    b.push_back(std::move(v));
  }
  return b;
}

DenseVec ChevalleyAlgebra::highest_root_vector() const {
  DenseVec v = dense_zero(dim(), algebra_->level());
  v[index_of_root(roots_.highest_root())] = Cyc::one(algebra_->level());
  return v;
}

}  // namespace torlie
