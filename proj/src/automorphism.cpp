#include "torlie/automorphism.hpp"

#include <map>
#include <sstream>

#include "torlie/errors.hpp"

namespace torlie {

namespace {

void audit_bracket_preservation(const LieAlgebra& L, const ExactMatrix& m) {
  const int dim = L.dim();
  std::vector<SparseVec> cols(dim);
  ExactMatrix mt = m.transpose();  // rows of mt are columns of m
  for (int j = 0; j < dim; ++j) cols[j] = mt.row(j);
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) {
      SparseVec lhs = m.apply(L.basis_bracket(i, j));
      SparseVec rhs = L.bracket(cols[i], cols[j]);
      if (lhs != rhs) {
        std::ostringstream os;
        os << "bracket preservation fails on basis pair (" << L.label(i)
           << ", " << L.label(j) << ")";
        throw inconsistency_error(os.str());
      }
    }
}

int compute_order(const ExactMatrix& m, int cap) {
  ExactMatrix id = ExactMatrix::identity(m.rows(), m.level());
  ExactMatrix acc = m;
  for (int n = 1; n <= cap; ++n) {
    if (acc == id) return n;
    acc = acc * m;
  }
  throw error("automorphism order exceeds cap " + std::to_string(cap));
}

}  // namespace

Automorphism::Automorphism(std::shared_ptr<const LieAlgebra> algebra,
                           ExactMatrix m, int order_cap)
    : L_(std::move(algebra)), m_(std::move(m)) {
  if (m_.rows() != L_->dim() || m_.cols() != L_->dim())
    throw dimension_error("automorphism matrix shape mismatch");
  audit_bracket_preservation(*L_, m_);
  order_ = compute_order(m_, order_cap);
}

Automorphism Automorphism::identity(std::shared_ptr<const LieAlgebra> algebra) {
  ExactMatrix id = ExactMatrix::identity(algebra->dim(), algebra->level());
  return Automorphism(std::move(algebra), std::move(id));
}

Automorphism Automorphism::compose(const Automorphism& inner) const {
  if (L_ != inner.L_) throw error("composition across different algebras");
  return Automorphism(L_, m_ * inner.m_);
}

Automorphism Automorphism::power(int k) const {
  ExactMatrix acc = ExactMatrix::identity(m_.rows(), m_.level());
  int e = ((k % order_) + order_) % order_;
  for (int i = 0; i < e; ++i) acc = acc * m_;
  return Automorphism(L_, std::move(acc));
}

bool Automorphism::commutes_with(const Automorphism& o) const {
  return m_ * o.m_ == o.m_ * m_;
}

Automorphism from_conjugation(const MatrixRealization& real,
                              const ExactMatrix& M) {
  ExactMatrix Minv = M.inverse();
  return from_matrix_map(
      real, [&](const ExactMatrix& X) { return M * X * Minv; });
}

Automorphism from_matrix_map(
    const MatrixRealization& real,
    const std::function<ExactMatrix(const ExactMatrix&)>& fn) {
  const LieAlgebra& L = real.algebra();
  ExactMatrix m(L.dim(), L.dim(), L.level());
  for (int j = 0; j < L.dim(); ++j) {
    DenseVec col = real.coords_of(fn(real.embed(j)));  // stability audit here
    for (int i = 0; i < L.dim(); ++i)
      if (!col[i].is_zero()) m.set(i, j, col[i]);
  }
  return Automorphism(real.algebra_ptr(), std::move(m));
}

Automorphism cartan_involution(const MatrixRealization& real) {
  return from_matrix_map(real, [](const ExactMatrix& X) {
    return X.transpose().scaled(-Cyc::one(X.level()));
  });
}

Automorphism neg_transpose_antidiag(const MatrixRealization& real) {
  const int n = real.matrix_size();
  ExactMatrix J(n, n, real.level());
  for (int i = 0; i < n; ++i) J.set(i, n - 1 - i, Cyc::one(real.level()));
  return from_matrix_map(real, [&](const ExactMatrix& X) {
    return (J * X.transpose() * J).scaled(-Cyc::one(real.level()));
  });
}

// ------------------------------------------- generator-image extension

namespace {

// polynomial in the unknown c with Cyc coefficients, sparse by degree
using CPoly = std::map<int, Cyc>;

void cpoly_add(CPoly& p, int deg, const Cyc& v) {
  if (v.is_zero()) return;
  auto [it, fresh] = p.emplace(deg, v);
  if (!fresh) {
    it->second += v;
    if (it->second.is_zero()) p.erase(it);
  }
}

Cyc cpoly_eval(const CPoly& p, const Cyc& c) {
  Cyc acc = Cyc::zero(c.level());
  for (const auto& [d, v] : p) acc += v * c.pow(d);
  return acc;
}

// monomial-scaled vector: c^pow * vec
struct MonoVec {
  DenseVec vec;
  int pow = 0;
};

}  // namespace

Automorphism from_generator_images(const ChevalleyAlgebra& ch,
                                   const GeneratorImageSpec& spec,
                                   SolveInfo* info) {
  const LieAlgebra& L = ch.algebra();
  const int dim = L.dim();
  const int level = L.level();
  const int rank = ch.rank();
  if (static_cast<int>(spec.e_img.size()) != rank ||
      static_cast<int>(spec.f_img.size()) != rank)
    throw dimension_error("generator images must cover all e_i, f_i");

  // extend to all basis elements along the stored words
  std::vector<MonoVec> cols(dim);
  std::vector<bool> done(dim, false);
  std::function<const MonoVec&(int)> col = [&](int b) -> const MonoVec& {
    if (done[b]) return cols[b];
    const BasisWord& w = ch.words()[b];
    MonoVec out;
    switch (w.kind) {
      case BasisWord::Kind::GenE:
        out.vec = spec.e_img[w.simple].vec;
        out.pow = spec.e_img[w.simple].cpow;
        break;
      case BasisWord::Kind::GenF:
        out.vec = spec.f_img[w.simple].vec;
        out.pow = spec.f_img[w.simple].cpow;
        break;
      case BasisWord::Kind::CartanPair: {
        const MonoVec& e = col(ch.e_index(w.simple));
        const MonoVec& f = col(ch.f_index(w.simple));
        out.vec = L.bracket(e.vec, f.vec);
        out.pow = e.pow + f.pow;
        break;
      }
      case BasisWord::Kind::BracketE:
      case BasisWord::Kind::BracketF: {
        int gen = w.kind == BasisWord::Kind::BracketE ? ch.e_index(w.simple)
                                                      : ch.f_index(w.simple);
        const MonoVec& outer = col(gen);
        const MonoVec& inner = col(w.sub);
        DenseVec v = L.bracket(outer.vec, inner.vec);
        Cyc pref(level, w.pref);
        for (auto& x : v) x *= pref;
        out.vec = std::move(v);
        out.pow = outer.pow + inner.pow;
        break;
      }
    }
    cols[b] = std::move(out);
    done[b] = true;
    return cols[b];
  };
  for (int b = 0; b < dim; ++b) col(b);

  Cyc c_value = Cyc::one(level);
  if (spec.has_unknown) {
    // constraint polynomials in c, tagged with their origin
    std::vector<std::pair<CPoly, std::string>> constraints;
    auto add_constraint = [&](CPoly p, const std::string& tag) {
      if (p.empty()) return;
      // c = 0 never gives an automorphism, so strip powers of c
      int low = p.begin()->first;
      if (low > 0) {
        CPoly q;
        for (const auto& [d, v] : p) q[d - low] = v;
        p = std::move(q);
      }
      constraints.emplace_back(std::move(p), tag);
    };

    // homomorphism on every basis pair
    for (int i = 0; i < dim; ++i) {
      for (int j = i + 1; j < dim; ++j) {
        std::vector<CPoly> diff(dim);
        for (const auto& [k, s] : L.basis_bracket(i, j)) {
          const MonoVec& mk = cols[k];
          for (int t = 0; t < dim; ++t)
            if (!mk.vec[t].is_zero()) cpoly_add(diff[t], mk.pow, s * mk.vec[t]);
        }
        DenseVec rhs = L.bracket(cols[i].vec, cols[j].vec);
        int rpow = cols[i].pow + cols[j].pow;
        for (int t = 0; t < dim; ++t)
          if (!rhs[t].is_zero()) cpoly_add(diff[t], rpow, -rhs[t]);
        for (int t = 0; t < dim; ++t)
          if (!diff[t].empty())
            add_constraint(std::move(diff[t]),
                           "homomorphism at [" + L.label(i) + "," +
                               L.label(j) + "]");
      }
    }

    // declared order: A^n = id symbolically on the generator columns,
    // which pins the scalar; the full order is re-checked numerically.
    if (spec.declared_order > 0) {
      using PolyVec = std::vector<CPoly>;
      auto apply_sym = [&](const PolyVec& v) {
        PolyVec out(dim);
        for (int j = 0; j < dim; ++j) {
          if (v[j].empty()) continue;
          const MonoVec& mj = cols[j];
          for (const auto& [d, coeff] : v[j])
            for (int t = 0; t < dim; ++t)
              if (!mj.vec[t].is_zero())
                cpoly_add(out[t], d + mj.pow, coeff * mj.vec[t]);
        }
        return out;
      };
      std::vector<int> probes;
      for (int i = 0; i < rank; ++i) {
        probes.push_back(ch.e_index(i));
        probes.push_back(ch.f_index(i));
      }
      for (int b : probes) {
        PolyVec v(dim);
        cpoly_add(v[b], 0, Cyc::one(level));
        for (int n = 0; n < spec.declared_order; ++n) v = apply_sym(v);
        cpoly_add(v[b], 0, -Cyc::one(level));
        for (int t = 0; t < dim; ++t)
          if (!v[t].empty())
            add_constraint(std::move(v[t]),
                           "order constraint at " + L.label(b));
      }
    }

    // solve: look for a linear constraint, then verify all of them
    bool found = false;
    for (const auto& [p, tag] : constraints) {
      if (p.rbegin()->first == 0)
        throw inconsistency_error("unsatisfiable relation: " + tag);
      if (p.rbegin()->first == 1) {
        Cyc a1 = p.rbegin()->second;
        Cyc a0 = p.count(0) ? p.at(0) : Cyc::zero(level);
        Cyc root = -(a0 / a1);
        if (found && !(root == c_value))
          throw inconsistency_error(
              "normalization scalar is overdetermined inconsistently (" +
              tag + ")");
        c_value = root;
        found = true;
      }
    }
    if (!found)
      throw inconsistency_error(
          "no linear relation pins the normalization scalar");
    if (c_value.is_zero())
      throw inconsistency_error("normalization scalar degenerates to zero");
    for (const auto& [p, tag] : constraints)
      if (!cpoly_eval(p, c_value).is_zero())
        throw inconsistency_error("relation violated by the solved scalar: " +
                                  tag);
    if (info) {
      info->had_unknown = true;
      info->scalar = c_value;
      info->detail = "normalization solved: c = " + c_value.str();
    }
  } else if (info) {
    info->had_unknown = false;
  }

  ExactMatrix m(dim, dim, level);
  for (int b = 0; b < dim; ++b) {
    Cyc scale = spec.has_unknown ? c_value.pow(cols[b].pow) : Cyc::one(level);
    for (int t = 0; t < dim; ++t) {
      Cyc v = cols[b].vec[t] * scale;
      if (!v.is_zero()) m.set(t, b, v);
    }
  }
  Automorphism out(std::shared_ptr<const LieAlgebra>(
                       ch.algebra_ptr()),
                   std::move(m));
  if (spec.declared_order > 0 && out.order() != spec.declared_order)
    throw inconsistency_error(
        "computed order " + std::to_string(out.order()) +
        " does not match the declared order " +
        std::to_string(spec.declared_order));
  return out;
}

Automorphism diagram_automorphism(const ChevalleyAlgebra& ch,
                                  const std::vector<int>& perm) {
  const int rank = ch.rank();
  const int level = ch.algebra().level();
  GeneratorImageSpec spec;
  auto unit = [&](int idx) {
    DenseVec v = dense_zero(ch.dim(), level);
    v[idx] = Cyc::one(level);
    return GenImage{std::move(v), 0};
  };
  for (int i = 0; i < rank; ++i) {
    spec.e_img.push_back(unit(ch.e_index(perm[i])));
    spec.f_img.push_back(unit(ch.f_index(perm[i])));
  }
  return from_generator_images(ch, spec);
}

Automorphism diagonal_automorphism(const ChevalleyAlgebra& ch,
                                   const std::vector<Cyc>& scalars) {
  const int rank = ch.rank();
  const int level = ch.algebra().level();
  GeneratorImageSpec spec;
  for (int i = 0; i < rank; ++i) {
    DenseVec e = dense_zero(ch.dim(), level);
    e[ch.e_index(i)] = scalars[i];
    DenseVec f = dense_zero(ch.dim(), level);
    f[ch.f_index(i)] = scalars[i].inverse();
    spec.e_img.push_back({std::move(e), 0});
    spec.f_img.push_back({std::move(f), 0});
  }
  return from_generator_images(ch, spec);
}

}  // namespace torlie
