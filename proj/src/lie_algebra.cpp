#include "torlie/lie_algebra.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "torlie/errors.hpp"

namespace torlie {

namespace {

// Collapses an unsorted (index, value) list into a sorted sparse vector.
SparseVec collapse(std::vector<std::pair<int, Cyc>>& acc) {
  std::sort(acc.begin(), acc.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec out;
  for (auto& [i, x] : acc) {
    if (!out.empty() && out.back().first == i)
      out.back().second += x;
    else
      out.emplace_back(i, std::move(x));
  }
  out.erase(std::remove_if(out.begin(), out.end(),
                           [](const auto& p) { return p.second.is_zero(); }),
            out.end());
  return out;
}

}  // namespace

LieAlgebra::LieAlgebra(int dim, int level, std::vector<std::string> labels,
                       std::unordered_map<Key, SparseVec> brackets,
                       bool certify)
    : dim_(dim), level_(level), labels_(std::move(labels)),
      sct_(std::move(brackets)) {
  if (static_cast<int>(labels_.size()) != dim)
    throw dimension_error("LieAlgebra: label count != dim");
  for (auto& [k, v] : sct_) {
    int i = static_cast<int>(k >> 16), j = static_cast<int>(k & 0xffff);
    if (i >= j || j >= dim)
      throw dimension_error("LieAlgebra: bad structure constant key");
    std::sort(v.begin(), v.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
  }
  if (certify) {
    auto bad = verify_jacobi(1);
    if (!bad.empty()) {
      std::ostringstream os;
      os << "Jacobi identity fails on basis triple (" << bad[0][0] << ","
         << bad[0][1] << "," << bad[0][2] << ")";
      throw error(os.str());
    }
  }
}

void LieAlgebra::accumulate_basis_bracket(std::vector<std::pair<int, Cyc>>& acc,
                                          int i, int j,
                                          const Cyc& coeff) const {
  if (i == j) return;
  bool flip = i > j;
  if (flip) std::swap(i, j);
  auto it = sct_.find(key(i, j));
  if (it == sct_.end()) return;
  for (const auto& [k, c] : it->second) {
    Cyc v = c * coeff;
    if (flip) v = -v;
    if (!v.is_zero()) acc.emplace_back(k, std::move(v));
  }
}

SparseVec LieAlgebra::basis_bracket(int i, int j) const {
  std::vector<std::pair<int, Cyc>> acc;
  accumulate_basis_bracket(acc, i, j, Cyc::one(level_));
  return collapse(acc);
}

SparseVec LieAlgebra::bracket(const SparseVec& x, const SparseVec& y) const {
  std::vector<std::pair<int, Cyc>> acc;
  for (const auto& [i, xi] : x)
    for (const auto& [j, yj] : y)
      accumulate_basis_bracket(acc, i, j, xi * yj);
  return collapse(acc);
}

DenseVec LieAlgebra::bracket(const DenseVec& x, const DenseVec& y) const {
  if (static_cast<int>(x.size()) != dim_ ||
      static_cast<int>(y.size()) != dim_)
    throw dimension_error("bracket: vector length != dim");
  SparseVec r = bracket(to_sparse(x), to_sparse(y));
  return to_dense(r, dim_, level_);
}

void LieAlgebra::build_ad() const {
  ad_.assign(dim_, ExactMatrix(dim_, dim_, level_));
  // ad(b_i) has column j equal to [b_i, b_j].
  for (const auto& [k, v] : sct_) {
    int i = static_cast<int>(k >> 16), j = static_cast<int>(k & 0xffff);
    for (const auto& [m, c] : v) {
      ad_[i].add_to(m, j, c);
      ad_[j].add_to(m, i, -c);
    }
  }
}

const ExactMatrix& LieAlgebra::ad(int i) const {
  std::call_once(ad_once_, [this] { build_ad(); });
  return ad_[i];
}

ExactMatrix LieAlgebra::ad(const DenseVec& x) const {
  ExactMatrix m(dim_, dim_, level_);
  for (int i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    m = m + ad(i).scaled(x[i]);
  }
  return m;
}

const ExactMatrix& LieAlgebra::killing() const {
  std::call_once(killing_once_, [this] {
    ad(0);  // ensure ad cache
    killing_ = ExactMatrix(dim_, dim_, level_);
    for (int i = 0; i < dim_; ++i) {
      for (int j = i; j < dim_; ++j) {
        Cyc acc = Cyc::zero(level_);
        const ExactMatrix& A = ad_[i];
        const ExactMatrix& B = ad_[j];
        for (int m = 0; m < dim_; ++m)
          for (const auto& [l, x] : A.row(m)) {
            Cyc e = B.get(l, m);
            if (!e.is_zero()) acc += x * e;
          }
        if (!acc.is_zero()) {
          killing_.set(i, j, acc);
          if (i != j) killing_.set(j, i, acc);
        }
      }
    }
  });
  return killing_;
}

Cyc LieAlgebra::killing_pair(const DenseVec& x, const DenseVec& y) const {
  const ExactMatrix& K = killing();
  DenseVec Ky = K.apply(y);
  Cyc acc = Cyc::zero(level_);
  for (int i = 0; i < dim_; ++i)
    if (!x[i].is_zero()) acc += x[i] * Ky[i];
  return acc;
}

std::vector<std::array<int, 3>> LieAlgebra::verify_jacobi(
    int max_violations) const {
  std::vector<std::array<int, 3>> bad;
  std::vector<std::pair<int, Cyc>> acc;
  for (int i = 0; i < dim_ && static_cast<int>(bad.size()) < max_violations;
       ++i) {
    for (int j = i + 1;
         j < dim_ && static_cast<int>(bad.size()) < max_violations; ++j) {
      SparseVec bij = basis_bracket(i, j);
      for (int k = j + 1; k < dim_; ++k) {
        acc.clear();
        // [[b_i,b_j],b_k] + [[b_j,b_k],b_i] + [[b_k,b_i],b_j]
        for (const auto& [m, c] : bij) accumulate_basis_bracket(acc, m, k, c);
        {
          auto it = sct_.find(key(j, k));
          if (it != sct_.end())
            for (const auto& [m, c] : it->second)
              accumulate_basis_bracket(acc, m, i, c);
        }
        {
          // [b_k, b_i] = -[b_i, b_k]
          auto it = sct_.find(key(i, k));
          if (it != sct_.end())
            for (const auto& [m, c] : it->second)
              accumulate_basis_bracket(acc, m, j, -c);
        }
        SparseVec total = collapse(acc);
        if (!total.empty()) {
          bad.push_back({i, j, k});
          if (static_cast<int>(bad.size()) >= max_violations) break;
        }
      }
    }
  }
  return bad;
}

// ------------------------------------------------------------- Subspace

Subspace::Subspace(const LieAlgebra* ambient,
                   const std::vector<DenseVec>& gens)
    : ambient_(ambient) {
  for (const auto& g : gens) {
    if (static_cast<int>(g.size()) != ambient->dim())
      throw dimension_error("Subspace: generator length != ambient dim");
    SparseVec s = to_sparse(g);
    if (!s.empty()) rows_.push_back(std::move(s));
  }
  pivots_ = rref(rows_, ambient->dim(), ambient->level());
}

Subspace Subspace::full(const LieAlgebra* ambient) {
  std::vector<DenseVec> gens;
  for (int i = 0; i < ambient->dim(); ++i) {
    DenseVec v = dense_zero(ambient->dim(), ambient->level());
    v[i] = Cyc::one(ambient->level());
    gens.push_back(std::move(v));
  }
  return Subspace(ambient, gens);
}

Subspace Subspace::zero_subspace(const LieAlgebra* ambient) {
  return Subspace(ambient, {});
}

int Subspace::ambient_dim() const { return ambient_->dim(); }

DenseVec Subspace::basis_vector(int i) const {
  return to_dense(rows_[i], ambient_->dim(), ambient_->level());
}

bool Subspace::contains(const DenseVec& v) const {
  return coords(v).has_value();
}

std::optional<DenseVec> Subspace::coords(const DenseVec& v) const {
  DenseVec rem = v;
  DenseVec cs = dense_zero(dim(), ambient_->level());
  for (size_t i = 0; i < rows_.size(); ++i) {
    const Cyc& lead = rem[pivots_[i]];
    if (lead.is_zero()) continue;
    cs[i] = lead;
    Cyc neg = -lead;
    for (const auto& [j, x] : rows_[i]) rem[j].add_mul(x, neg);
  }
  if (!dense_is_zero(rem)) return std::nullopt;
  return cs;
}

void Subspace::check_same(const Subspace& o) const {
  if (ambient_ != o.ambient_)
    throw error("subspace operation across different ambient algebras");
}

Subspace Subspace::sum(const Subspace& o) const {
  check_same(o);
  std::vector<DenseVec> gens;
  for (int i = 0; i < dim(); ++i) gens.push_back(basis_vector(i));
  for (int i = 0; i < o.dim(); ++i) gens.push_back(o.basis_vector(i));
  return Subspace(ambient_, gens);
}

Subspace Subspace::intersect(const Subspace& o) const {
  check_same(o);
  // Zassenhaus: echelonize [A|A; B|0]; rows supported on the right half
  // only give the intersection.
  int n = ambient_->dim();
  int level = ambient_->level();
  std::vector<SparseVec> work;
  for (const auto& r : rows_) {
    SparseVec w = r;
    for (const auto& [j, x] : r) w.emplace_back(j + n, x);
    work.push_back(std::move(w));
  }
  for (const auto& r : o.rows_) work.push_back(r);
  echelonize(work, 2 * n, level);
  std::vector<DenseVec> gens;
  for (const auto& row : work) {
    if (!row.empty() && row.front().first >= n) {
      DenseVec v = dense_zero(n, level);
      for (const auto& [j, x] : row) v[j - n] = x;
      gens.push_back(std::move(v));
    }
  }
  return Subspace(ambient_, gens);
}

Subspace Subspace::bracket_span(const Subspace& o) const {
  check_same(o);
  std::vector<DenseVec> gens;
  for (int i = 0; i < dim(); ++i) {
    SparseVec a = rows_[i];
    for (int j = 0; j < o.dim(); ++j) {
      SparseVec w = ambient_->bracket(a, o.rows_[j]);
      if (!w.empty())
        gens.push_back(to_dense(w, ambient_->dim(), ambient_->level()));
    }
  }
  return Subspace(ambient_, gens);
}

bool Subspace::operator==(const Subspace& o) const {
  return ambient_ == o.ambient_ && rows_ == o.rows_;
}

}  // namespace torlie
