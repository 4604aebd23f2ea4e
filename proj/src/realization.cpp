#include "torlie/realization.hpp"

#include <sstream>

#include "torlie/errors.hpp"

namespace torlie {

std::string kind_name(RealizationKind k) {
  switch (k) {
    case RealizationKind::SoAntisymmetric: return "so_antisymmetric";
    case RealizationKind::SplitD: return "split_D";
    case RealizationKind::SplitC: return "split_C";
    case RealizationKind::SL: return "sl";
  }
  return "?";
}

namespace {

std::string lbl(const std::string& head, int i, int j) {
  std::ostringstream os;
  os << head << "[" << i + 1 << "," << j + 1 << "]";
  return os.str();
}

}  // namespace

MatrixRealization::MatrixRealization(RealizationKind kind, int n, int level)
    : kind_(kind), n_(n), level_(level) {
  std::vector<std::string> labels;
  auto one = Cyc::one(level);
  auto E = [&](int i, int j) {
    ExactMatrix m(n, n, level);
    m.set(i, j, one);
    return m;
  };
  switch (kind) {
    case RealizationKind::SoAntisymmetric: {
      if (n < 3) throw error("so_antisymmetric needs n >= 3");
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          basis_.push_back(E(i, j) - E(j, i));
          labels.push_back(lbl("F", i, j));
        }
      break;
    }
    case RealizationKind::SplitD:
    case RealizationKind::SplitC: {
      if (n < 4 || n % 2 != 0)
        throw error(kind_name(kind) + " needs even size >= 4");
      int k = n / 2;
      bool sym = (kind == RealizationKind::SplitC);
      for (int p = 0; p < k; ++p)
        for (int q = 0; q < k; ++q) {
          basis_.push_back(E(p, q) - E(k + q, k + p));
          labels.push_back(lbl("A", p, q));
        }
      for (int p = 0; p < k; ++p)
        for (int q = sym ? p : p + 1; q < k; ++q) {
          if (sym && p == q) {
            basis_.push_back(E(p, k + p));
          } else {
            basis_.push_back(sym ? E(p, k + q) + E(q, k + p)
                                 : E(p, k + q) - E(q, k + p));
          }
          labels.push_back(lbl("B", p, q));
        }
      for (int p = 0; p < k; ++p)
        for (int q = sym ? p : p + 1; q < k; ++q) {
          if (sym && p == q) {
            basis_.push_back(E(k + p, p));
          } else {
            basis_.push_back(sym ? E(k + p, q) + E(k + q, p)
                                 : E(k + p, q) - E(k + q, p));
          }
          labels.push_back(lbl("C", p, q));
        }
      break;
    }
    case RealizationKind::SL: {
      if (n < 2) throw error("sl needs n >= 2");
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i != j) {
            basis_.push_back(E(i, j));
            labels.push_back(lbl("E", i, j));
          }
      for (int p = 0; p + 1 < n; ++p) {
        basis_.push_back(E(p, p) - E(p + 1, p + 1));
        labels.push_back("H[" + std::to_string(p + 1) + "]");
      }
      break;
    }
  }

  int dim = static_cast<int>(basis_.size());
  std::unordered_map<LieAlgebra::Key, SparseVec> sct;
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) {
      ExactMatrix comm = basis_[i] * basis_[j] - basis_[j] * basis_[i];
      if (comm.nnz() == 0) continue;
      DenseVec c = coords_of(comm);
      SparseVec s = to_sparse(c);
      if (!s.empty()) sct[LieAlgebra::key(i, j)] = std::move(s);
    }
  algebra_ = std::make_shared<LieAlgebra>(dim, level, std::move(labels),
                                          std::move(sct), /*certify=*/true);
}

ExactMatrix MatrixRealization::embed_vec(const DenseVec& v) const {
  ExactMatrix m(n_, n_, level_);
  for (size_t i = 0; i < basis_.size(); ++i) {
    if (v[i].is_zero()) continue;
    for (int r = 0; r < n_; ++r)
      for (const auto& [col, x] : basis_[i].row(r)) m.add_to(r, col, x * v[i]);
  }
  return m;
}

DenseVec MatrixRealization::coords_of(const ExactMatrix& m) const {
  if (m.rows() != n_ || m.cols() != n_)
    throw dimension_error("coords_of: wrong matrix size");
  DenseVec c = dense_zero(static_cast<int>(basis_.size()), level_);
  int idx = 0;
  switch (kind_) {
    case RealizationKind::SoAntisymmetric: {
      for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j) c[idx++] = m.get(i, j);
      break;
    }
    case RealizationKind::SplitD:
    case RealizationKind::SplitC: {
      int k = n_ / 2;
      bool sym = (kind_ == RealizationKind::SplitC);
      for (int p = 0; p < k; ++p)
        for (int q = 0; q < k; ++q) c[idx++] = m.get(p, q);
      for (int p = 0; p < k; ++p)
        for (int q = sym ? p : p + 1; q < k; ++q) c[idx++] = m.get(p, k + q);
      for (int p = 0; p < k; ++p)
        for (int q = sym ? p : p + 1; q < k; ++q) c[idx++] = m.get(k + p, q);
      break;
    }
    case RealizationKind::SL: {
      for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
          if (i != j) c[idx++] = m.get(i, j);
      Cyc acc = Cyc::zero(level_);
      for (int p = 0; p + 1 < n_; ++p) {
        acc += m.get(p, p);
        c[idx++] = acc;
      }
      break;
    }
  }
  // stability audit: the reassembled matrix must reproduce the input
  if (!(embed_vec(c) == m))
    throw stability_error("matrix lies outside the realized subalgebra (" +
                          kind_name(kind_) + ")");
  return c;
}

std::vector<DenseVec> MatrixRealization::standard_cartan() const {
  std::vector<DenseVec> out;
  int dim = static_cast<int>(basis_.size());
  auto unit = [&](int i) {
    DenseVec v = dense_zero(dim, level_);
    v[i] = Cyc::one(level_);
    return v;
  };
  switch (kind_) {
    case RealizationKind::SoAntisymmetric: {
      int idx = 0;
      for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j) {
          if (i % 2 == 0 && j == i + 1) out.push_back(unit(idx));
          ++idx;
        }
      break;
    }
    case RealizationKind::SplitD:
    case RealizationKind::SplitC: {
      int k = n_ / 2;
      for (int p = 0; p < k; ++p) out.push_back(unit(p * k + p));
      break;
    }
    case RealizationKind::SL: {
      int offdiag = n_ * (n_ - 1);
      for (int p = 0; p + 1 < n_; ++p) out.push_back(unit(offdiag + p));
      break;
    }
  }
  return out;
}

std::vector<Cyc> MatrixRealization::cartan_matrix_eigenvalues(
    const DenseVec& h) const {
  ExactMatrix m = embed_vec(h);
  std::vector<Cyc> ev;
  switch (kind_) {
    case RealizationKind::SoAntisymmetric: {
      // rotation blocks: c * (E_{2i-1,2i} - E_{2i,2i-1}) has eigenvalues
      // +- i*c; leftover odd coordinate contributes 0
      Cyc i4 = Cyc::root_of_unity(level_, 4, 1);
      for (int p = 0; p + 1 < n_; p += 2) {
        Cyc c = m.get(p, p + 1);
        ev.push_back(i4 * c);
        ev.push_back(-(i4 * c));
      }
      if (n_ % 2 == 1) ev.push_back(Cyc::zero(level_));
      break;
    }
    default: {
      for (int p = 0; p < n_; ++p) ev.push_back(m.get(p, p));
      break;
    }
  }
  return ev;
}

}  // namespace torlie
