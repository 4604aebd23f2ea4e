#include "torlie/matrix.hpp"

#include <algorithm>
#include <map>

#include "torlie/errors.hpp"

namespace torlie {

DenseVec dense_zero(int n, int level) {
  return DenseVec(n, Cyc::zero(level));
}

SparseVec to_sparse(const DenseVec& v) {
  SparseVec s;
  for (int i = 0; i < static_cast<int>(v.size()); ++i)
    if (!v[i].is_zero()) s.emplace_back(i, v[i]);
  return s;
}

DenseVec to_dense(const SparseVec& v, int n, int level) {
  DenseVec d = dense_zero(n, level);
  for (const auto& [i, x] : v) d[i] = x;
  return d;
}

bool dense_is_zero(const DenseVec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

void dense_add_mul(DenseVec& acc, const DenseVec& v, const Cyc& coeff) {
  if (coeff.is_zero()) return;
  for (size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) acc[i].add_mul(v[i], coeff);
}

void sparse_add_mul(SparseVec& acc, const SparseVec& v, const Cyc& coeff) {
  if (coeff.is_zero() || v.empty()) return;
  SparseVec out;
  out.reserve(acc.size() + v.size());
  size_t a = 0, b = 0;
  while (a < acc.size() || b < v.size()) {
    if (b == v.size() || (a < acc.size() && acc[a].first < v[b].first)) {
      out.push_back(acc[a++]);
    } else if (a == acc.size() || v[b].first < acc[a].first) {
      Cyc val = v[b].second * coeff;
      if (!val.is_zero()) out.emplace_back(v[b].first, std::move(val));
      ++b;
    } else {
      Cyc val = acc[a].second;
      val.add_mul(v[b].second, coeff);
      if (!val.is_zero()) out.emplace_back(acc[a].first, std::move(val));
      ++a;
      ++b;
    }
  }
  acc = std::move(out);
}

Cyc sparse_dot_dense(const SparseVec& a, const DenseVec& b) {
  if (b.empty()) throw dimension_error("dot with empty vector");
  Cyc acc = Cyc::zero(b[0].level());
  for (const auto& [i, x] : a) acc += x * b[i];
  return acc;
}

ExactMatrix ExactMatrix::identity(int n, int level) {
  ExactMatrix m(n, n, level);
  for (int i = 0; i < n; ++i) m.r_[i].emplace_back(i, Cyc::one(level));
  return m;
}

ExactMatrix ExactMatrix::from_rows(std::vector<SparseVec> rows, int cols,
                                   int level) {
  ExactMatrix m(static_cast<int>(rows.size()), cols, level);
  m.r_ = std::move(rows);
  return m;
}

Cyc ExactMatrix::get(int i, int j) const {
  const auto& row = r_[i];
  auto it = std::lower_bound(
      row.begin(), row.end(), j,
      [](const std::pair<int, Cyc>& p, int col) { return p.first < col; });
  if (it != row.end() && it->first == j) return it->second;
  return Cyc::zero(level_);
}

void ExactMatrix::set(int i, int j, Cyc v) {
  auto& row = r_[i];
  auto it = std::lower_bound(
      row.begin(), row.end(), j,
      [](const std::pair<int, Cyc>& p, int col) { return p.first < col; });
  if (it != row.end() && it->first == j) {
    if (v.is_zero())
      row.erase(it);
    else
      it->second = std::move(v);
  } else if (!v.is_zero()) {
    row.insert(it, {j, std::move(v)});
  }
}

void ExactMatrix::add_to(int i, int j, const Cyc& v) {
  if (v.is_zero()) return;
  set(i, j, get(i, j) + v);
}

size_t ExactMatrix::nnz() const {
  size_t n = 0;
  for (const auto& row : r_) n += row.size();
  return n;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw dimension_error("matrix addition shape mismatch");
  ExactMatrix m = *this;
  for (int i = 0; i < rows_; ++i)
    sparse_add_mul(m.r_[i], o.r_[i], Cyc::one(level_));
  return m;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw dimension_error("matrix subtraction shape mismatch");
  ExactMatrix m = *this;
  for (int i = 0; i < rows_; ++i)
    sparse_add_mul(m.r_[i], o.r_[i], -Cyc::one(level_));
  return m;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
  if (cols_ != o.rows_) throw dimension_error("matrix product shape mismatch");
  ExactMatrix m(rows_, o.cols_, level_);
  for (int i = 0; i < rows_; ++i) {
    SparseVec acc;
    for (const auto& [k, x] : r_[i]) sparse_add_mul(acc, o.r_[k], x);
    m.r_[i] = std::move(acc);
  }
  return m;
}

ExactMatrix ExactMatrix::scaled(const Cyc& s) const {
  ExactMatrix m(rows_, cols_, level_);
  if (s.is_zero()) return m;
  for (int i = 0; i < rows_; ++i) {
    m.r_[i].reserve(r_[i].size());
    for (const auto& [j, x] : r_[i]) {
      Cyc v = x * s;
      if (!v.is_zero()) m.r_[i].emplace_back(j, std::move(v));
    }
  }
  return m;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix m(cols_, rows_, level_);
  for (int i = 0; i < rows_; ++i)
    for (const auto& [j, x] : r_[i]) m.r_[j].emplace_back(i, x);
  return m;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (int i = 0; i < rows_; ++i)
    if (r_[i] != o.r_[i]) return false;
  return true;
}

DenseVec ExactMatrix::apply(const DenseVec& v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw dimension_error("matrix apply: size mismatch");
  DenseVec out = dense_zero(rows_, level_);
  for (int i = 0; i < rows_; ++i) out[i] = sparse_dot_dense(r_[i], v);
  return out;
}

SparseVec ExactMatrix::apply(const SparseVec& v) const {
  // Column-oriented accumulation: out += v_j * column_j, done via rows.
  std::map<int, Cyc> acc;
  for (const auto& [j, x] : v) {
    for (int i = 0; i < rows_; ++i) {
      // cheap skip: binary search row i for column j
      Cyc e = get(i, j);
      if (e.is_zero()) continue;
      auto it = acc.find(i);
      if (it == acc.end())
        acc.emplace(i, e * x);
      else
        it->second += e * x;
    }
  }
  SparseVec out;
  for (auto& [i, x] : acc)
    if (!x.is_zero()) out.emplace_back(i, std::move(x));
  return out;
}

ExactMatrix ExactMatrix::stacked(const ExactMatrix& o) const {
  if (cols_ != o.cols_) throw dimension_error("stack: column mismatch");
  ExactMatrix m(rows_ + o.rows_, cols_, level_);
  m.r_ = r_;
  m.r_.insert(m.r_.end(), o.r_.begin(), o.r_.end());
  return m;
}

void make_primitive(SparseVec& row) {
  if (row.empty()) return;
  // lcm of denominators over all cyclotomic coefficients
  Integer den_lcm = 1;
  for (const auto& [j, x] : row)
    for (const auto& c : x.coeffs())
      if (!is_zero(c)) den_lcm = lcm(den_lcm, c.get_den());
  Integer num_gcd = 0;
  for (const auto& [j, x] : row)
    for (const auto& c : x.coeffs())
      if (!is_zero(c)) num_gcd = gcd(num_gcd, c.get_num() * (den_lcm / c.get_den()));
  if (num_gcd == 0) return;
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (scale == 1) return;
  for (auto& [j, x] : row) x = x * scale;
}

std::vector<std::pair<int, int>> echelonize(std::vector<SparseVec>& rows,
                                            int cols, int level) {
  std::vector<std::pair<int, int>> pivots;
  std::vector<bool> used(rows.size(), false);
  for (auto& row : rows) make_primitive(row);
  for (int col = 0; col < cols; ++col) {
    // candidate rows: unused, leading entry exactly at `col`
    int best = -1;
    Integer best_h;
    size_t best_nnz = 0;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (used[i] || rows[i].empty() || rows[i].front().first != col) continue;
      Integer h = rows[i].front().second.coeff_height();
      if (best < 0 || h < best_h ||
          (h == best_h && rows[i].size() < best_nnz)) {
        best = static_cast<int>(i);
        best_h = h;
        best_nnz = rows[i].size();
      }
    }
    if (best < 0) continue;
    used[best] = true;
    pivots.emplace_back(col, best);
    const Cyc pivot_val = rows[best].front().second;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (used[i] || rows[i].empty() || rows[i].front().first != col) continue;
      // fraction-free combination: row_i <- p*row_i - b*row_pivot
      const Cyc b = rows[i].front().second;
      SparseVec next;
      for (auto& [j, x] : rows[i]) {
        Cyc v = x * pivot_val;
        if (!v.is_zero()) next.emplace_back(j, std::move(v));
      }
      rows[i] = std::move(next);
      sparse_add_mul(rows[i], rows[best], -b);
      make_primitive(rows[i]);
    }
  }
  // prune zero rows
  std::vector<SparseVec> kept;
  std::vector<int> new_index(rows.size(), -1);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].empty()) {
      new_index[i] = static_cast<int>(kept.size());
      kept.push_back(std::move(rows[i]));
    }
  }
  rows = std::move(kept);
  for (auto& [c, r] : pivots) r = new_index[r];
  (void)level;
  return pivots;
}

std::vector<int> rref(std::vector<SparseVec>& rows, int cols, int level) {
  auto pivots = echelonize(rows, cols, level);
  std::sort(pivots.begin(), pivots.end());
  std::vector<SparseVec> ordered;
  ordered.reserve(pivots.size());
  for (auto& [c, r] : pivots) ordered.push_back(std::move(rows[r]));
  rows = std::move(ordered);
  // normalize pivots to one
  for (auto& row : rows) {
    Cyc inv = row.front().second.inverse();
    for (auto& [j, x] : row) x *= inv;
  }
  // back-substitute: clear entries above each pivot
  for (int i = static_cast<int>(rows.size()) - 1; i >= 0; --i) {
    int pc = rows[i].front().first;
    for (int k = 0; k < i; ++k) {
      auto it = std::lower_bound(
          rows[k].begin(), rows[k].end(), pc,
          [](const std::pair<int, Cyc>& p, int col) { return p.first < col; });
      if (it != rows[k].end() && it->first == pc) {
        Cyc coeff = -it->second;
        sparse_add_mul(rows[k], rows[i], coeff);
      }
    }
  }
  std::vector<int> pcols;
  pcols.reserve(rows.size());
  for (const auto& row : rows) pcols.push_back(row.front().first);
  return pcols;
}

std::vector<DenseVec> ExactMatrix::kernel() const {
  std::vector<SparseVec> rows = r_;
  auto pcols = rref(rows, cols_, level_);
  std::vector<bool> is_pivot(cols_, false);
  for (int c : pcols) is_pivot[c] = true;
  std::vector<DenseVec> basis;
  for (int f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    DenseVec v = dense_zero(cols_, level_);
    v[f] = Cyc::one(level_);
    for (size_t i = 0; i < rows.size(); ++i) {
      // pivot row i: x[p] = -coefficient of f in that row
      auto it = std::lower_bound(
          rows[i].begin(), rows[i].end(), f,
          [](const std::pair<int, Cyc>& p, int col) { return p.first < col; });
      if (it != rows[i].end() && it->first == f) v[pcols[i]] = -it->second;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<DenseVec> ExactMatrix::eigenspace(const Cyc& lambda) const {
  if (rows_ != cols_) throw dimension_error("eigenspace: matrix not square");
  ExactMatrix m = *this - ExactMatrix::identity(rows_, level_).scaled(lambda);
  return m.kernel();
}

int ExactMatrix::rank() const {
  std::vector<SparseVec> rows = r_;
  return static_cast<int>(echelonize(rows, cols_, level_).size());
}

ExactMatrix ExactMatrix::inverse() const {
  if (rows_ != cols_) throw dimension_error("inverse: matrix not square");
  // RREF of [M | I]; the right half becomes M^{-1}
  std::vector<SparseVec> work = r_;
  for (int i = 0; i < rows_; ++i)
    work[i].emplace_back(cols_ + i, Cyc::one(level_));
  auto pcols = rref(work, 2 * cols_, level_);
  if (static_cast<int>(pcols.size()) != rows_ || pcols.back() >= cols_)
    throw error("matrix is singular");
  ExactMatrix inv(rows_, cols_, level_);
  for (int i = 0; i < rows_; ++i)
    for (const auto& [j, x] : work[i])
      if (j >= cols_) inv.set(i, j - cols_, x);
  return inv;
}

}  // namespace torlie
