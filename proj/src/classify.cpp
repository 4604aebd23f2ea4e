#include "torlie/classify.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "torlie/chevalley.hpp"
#include "torlie/errors.hpp"

namespace torlie {

namespace {

// Echelonized basis over ambient coordinates with coordinate extraction.
struct EchelonBasis {
  std::vector<SparseVec> rows;
  std::vector<int> pivots;
  int cols, level;

  EchelonBasis(std::vector<SparseVec> gens, int cols_, int level_)
      : rows(std::move(gens)), cols(cols_), level(level_) {
    pivots = rref(rows, cols, level);
  }
  int dim() const { return static_cast<int>(rows.size()); }
  std::optional<DenseVec> coords(DenseVec v) const {
    DenseVec cs = dense_zero(dim(), level);
    for (size_t i = 0; i < rows.size(); ++i) {
      Cyc lead = v[pivots[i]];
      if (lead.is_zero()) continue;
      cs[i] = lead;
      Cyc neg = -lead;
      for (const auto& [j, x] : rows[i]) v[j].add_mul(x, neg);
    }
    if (!dense_is_zero(v)) return std::nullopt;
    return cs;
  }
};

std::vector<Cyc> weight_minus(const std::vector<Cyc>& a,
                              const std::vector<Cyc>& b) {
  std::vector<Cyc> r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

std::vector<Cyc> weight_plus(const std::vector<Cyc>& a,
                             const std::vector<Cyc>& b) {
  std::vector<Cyc> r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

std::string make_weight_key(const std::vector<Cyc>& w) {
  std::string s;
  for (const auto& x : w) {
    s += x.key();
    s += ';';
  }
  return s;
}

}  // namespace

std::vector<WeightSpace> weight_decomposition(
    const LieAlgebra& L, const Subspace& S,
    const std::vector<DenseVec>& cartan, const SpectrumFn& candidates) {
  const int level = L.level();
  struct Piece {
    std::vector<DenseVec> vectors;  // ambient coordinates
    std::vector<Cyc> weight_prefix;
  };
  std::vector<Piece> pieces;
  {
    Piece whole;
    for (int i = 0; i < S.dim(); ++i) whole.vectors.push_back(S.basis_vector(i));
    if (!whole.vectors.empty()) pieces.push_back(std::move(whole));
  }
  for (const auto& h : cartan) {
    // candidate eigenvalues of ad(h), deduplicated
    std::vector<Cyc> cand;
    {
      std::set<std::string> seen;
      auto add = [&](const Cyc& c) {
        if (seen.insert(c.key()).second) cand.push_back(c);
      };
      add(Cyc::zero(level));
      for (const auto& c : candidates(h)) add(c);
    }
    std::vector<Piece> next;
    for (auto& piece : pieces) {
      const int p = static_cast<int>(piece.vectors.size());
      // restriction matrix X of ad(h) to the piece
      std::vector<SparseVec> prows;
      for (const auto& v : piece.vectors) prows.push_back(to_sparse(v));
      EchelonBasis basis(prows, L.dim(), level);
      if (basis.dim() != p)
        throw not_cartan_error("weight decomposition: dependent piece basis");
      // work in the echelon basis of the piece so coordinates line up
      std::vector<DenseVec> ech;
      for (int i = 0; i < basis.dim(); ++i)
        ech.push_back(to_dense(basis.rows[i], L.dim(), level));
      ExactMatrix X(p, p, level);
      for (int j = 0; j < p; ++j) {
        DenseVec w = L.bracket(h, ech[j]);
        auto cs = basis.coords(std::move(w));
        if (!cs)
          throw not_cartan_error(
              "weight decomposition: space is not invariant under the "
              "candidate Cartan");
        for (int i = 0; i < p; ++i) X.set(i, j, (*cs)[i]);
      }
      int found = 0;
      for (const auto& lambda : cand) {
        auto ker = X.eigenspace(lambda);
        if (ker.empty()) continue;
        Piece sub;
        sub.weight_prefix = piece.weight_prefix;
        sub.weight_prefix.push_back(lambda);
        for (const auto& k : ker) {
          DenseVec v = dense_zero(L.dim(), level);
          for (int i = 0; i < p; ++i) dense_add_mul(v, ech[i], k[i]);
          sub.vectors.push_back(std::move(v));
        }
        found += static_cast<int>(sub.vectors.size());
        next.push_back(std::move(sub));
      }
      if (found != p)
        throw not_cartan_error(
            "weight decomposition: operators not diagonalizable over the "
            "candidate spectrum (candidate Cartan rejected)");
    }
    pieces = std::move(next);
  }
  std::vector<WeightSpace> out;
  for (auto& piece : pieces)
    out.push_back(WeightSpace{std::move(piece.weight_prefix),
                              std::move(piece.vectors)});
  return out;
}

std::string Classification::weight_key(const std::vector<Cyc>& w) const {
  return make_weight_key(w);
}

int Classification::find_weight(const std::vector<Cyc>& w) const {
  auto it = root_lookup_.find(make_weight_key(w));
  return it == root_lookup_.end() ? -1 : it->second;
}

int Classification::string_pairing(int beta, int alpha) const {
  if (beta == alpha) return 2;
  const auto& wb = roots[beta].weight;
  const auto& wa = roots[alpha].weight;
  // the +-alpha strings pass through 0, handle them directly
  {
    bool neg = true;
    for (size_t i = 0; i < wb.size() && neg; ++i)
      if (wb[i] != -wa[i]) neg = false;
    if (neg) return -2;
  }
  int p = 0, q = 0;
  std::vector<Cyc> cur = weight_minus(wb, wa);
  while (find_weight(cur) >= 0) {
    ++p;
    cur = weight_minus(cur, wa);
  }
  cur = weight_plus(wb, wa);
  while (find_weight(cur) >= 0) {
    ++q;
    cur = weight_plus(cur, wa);
  }
  return p - q;
}

std::vector<std::pair<SimpleType, int>> Classification::types() const {
  std::vector<std::pair<SimpleType, int>> t;
  for (const auto& i : ideals) t.emplace_back(i.type, i.rank);
  return t;
}

namespace {

// Permutation match of an integer Cartan matrix against the reference one.
bool cartan_match(const std::vector<std::vector<int>>& a,
                  const std::vector<std::vector<int>>& b) {
  const int n = static_cast<int>(a.size());
  if (static_cast<int>(b.size()) != n) return false;
  std::vector<int> perm(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(int)> place = [&](int i) -> bool {
    if (i == n) return true;
    for (int j = 0; j < n; ++j) {
      if (used[j]) continue;
      bool ok = true;
      for (int k = 0; k < i && ok; ++k) {
        if (a[i][k] != b[j][perm[k]] || a[k][i] != b[perm[k]][j]) ok = false;
      }
      if (!ok) continue;
      perm[i] = j;
      used[j] = true;
      if (place(i + 1)) return true;
      used[j] = false;
      perm[i] = -1;
    }
    return false;
  };
  return place(0);
}

std::pair<SimpleType, int> identify_type(
    const std::vector<std::vector<int>>& cm, int root_count) {
  const int rank = static_cast<int>(cm.size());
  // canonical preference order resolves A1=B1=C1, B2=C2, A3=D3
  std::vector<SimpleType> order{SimpleType::A, SimpleType::B, SimpleType::C,
                                SimpleType::D, SimpleType::E, SimpleType::F,
                                SimpleType::G};
  for (SimpleType t : order) {
    bool valid = true;
    switch (t) {
      case SimpleType::B:
      case SimpleType::C: valid = rank >= 2; break;
      case SimpleType::D: valid = rank >= 3; break;
      case SimpleType::E: valid = rank >= 6 && rank <= 8; break;
      case SimpleType::F: valid = rank == 4; break;
      case SimpleType::G: valid = rank == 2; break;
      default: valid = rank >= 1; break;
    }
    if (!valid) continue;
    RootSystem ref(t, rank);
    if (static_cast<int>(ref.roots().size()) != root_count) continue;
    if (cartan_match(cm, ref.cartan_matrix())) return {t, rank};
  }
  throw classification_error(
      "weights do not form a finite root system of a known type");
}

}  // namespace

Classification classify_semisimple(const LieAlgebra& L, const Subspace& S,
                                   const std::vector<DenseVec>& cartan,
                                   const SpectrumFn& candidates) {
  const int level = L.level();
  Classification out;
  // cartan must be abelian and independent
  {
    std::vector<SparseVec> rows;
    for (const auto& h : cartan) rows.push_back(to_sparse(h));
    auto piv = rref(rows, L.dim(), level);
    if (static_cast<int>(piv.size()) != static_cast<int>(cartan.size()))
      throw not_cartan_error("cartan basis is linearly dependent");
  }
  for (size_t a = 0; a < cartan.size(); ++a)
    for (size_t b = a + 1; b < cartan.size(); ++b)
      if (!dense_is_zero(L.bracket(cartan[a], cartan[b])))
        throw not_cartan_error("candidate Cartan is not abelian");
  out.cartan = cartan;

  auto spaces = weight_decomposition(L, S, cartan, candidates);

  const int m = static_cast<int>(cartan.size());
  std::vector<Cyc> zero_w(m, Cyc::zero(level));
  int zero_dim = 0;
  std::vector<const WeightSpace*> nonzero;
  for (auto& ws : spaces) {
    if (make_weight_key(ws.weight) == make_weight_key(zero_w))
      zero_dim += static_cast<int>(ws.vectors.size());
    else
      nonzero.push_back(&ws);
  }
  if (zero_dim != m)
    throw not_cartan_error(
        "candidate Cartan is not maximal: its centralizer has dimension " +
        std::to_string(zero_dim) + " > " + std::to_string(m));
  for (const WeightSpace* ws : nonzero) {
    if (ws->vectors.size() != 1)
      throw classification_error("root space is not one-dimensional");
    RootDatum rd;
    rd.weight = ws->weight;
    rd.vector = ws->vectors[0];
    out.roots.push_back(std::move(rd));
  }

  for (int i = 0; i < static_cast<int>(out.roots.size()); ++i)
    out.root_lookup_[make_weight_key(out.roots[i].weight)] = i;

  // center = {h in cartan : beta(h) = 0 for all roots beta}
  {
    ExactMatrix W(static_cast<int>(out.roots.size()), m, level);
    for (int r = 0; r < static_cast<int>(out.roots.size()); ++r)
      for (int a = 0; a < m; ++a) W.set(r, a, out.roots[r].weight[a]);
    for (const auto& k : W.kernel()) {
      DenseVec z = dense_zero(L.dim(), level);
      for (int a = 0; a < m; ++a) dense_add_mul(z, cartan[a], k[a]);
      out.center.push_back(std::move(z));
    }
  }

  const int R = static_cast<int>(out.roots.size());
  if (R == 0) return out;

  // components of the root graph under nonzero string pairing
  std::vector<int> comp(R, -1);
  int ncomp = 0;
  for (int r = 0; r < R; ++r) {
    if (comp[r] >= 0) continue;
    std::vector<int> stack{r};
    comp[r] = ncomp;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y = 0; y < R; ++y) {
        if (comp[y] >= 0 || y == x) continue;
        if (out.string_pairing(y, x) != 0) {
          comp[y] = ncomp;
          stack.push_back(y);
        }
      }
    }
    ++ncomp;
  }
  for (int r = 0; r < R; ++r) out.roots[r].ideal = comp[r];

  // positivity functional: flatten weights over Q and scan for a generic t
  const int phi = euler_phi(level);
  auto flatten = [&](const std::vector<Cyc>& w) {
    std::vector<Rational> f;
    for (const auto& x : w)
      for (const auto& c : x.coeffs()) f.push_back(c);
    return f;
  };
  std::vector<std::vector<Rational>> flat;
  for (const auto& rd : out.roots) flat.push_back(flatten(rd.weight));
  const int F = m * phi;
  std::vector<Rational> sign_of(R, Rational(0));
  for (long t = 1;; ++t) {
    bool ok = true;
    for (int r = 0; r < R && ok; ++r) {
      Rational acc(0), pw(1);
      for (int i = 0; i < F; ++i) {
        acc += flat[r][i] * pw;
        pw *= t;
      }
      if (is_zero(acc)) ok = false;
      sign_of[r] = acc;
    }
    if (ok) break;
    if (t > 4 * R + 16)
      throw classification_error("no generic positivity functional found");
  }

  for (int c = 0; c < ncomp; ++c) {
    std::vector<int> pos;
    for (int r = 0; r < R; ++r)
      if (comp[r] == c && sgn(sign_of[r]) > 0) pos.push_back(r);
    // simple = positive, not a sum of two positives
    std::vector<int> simple;
    for (int r : pos) {
      bool decomposable = false;
      for (int x : pos) {
        if (decomposable) break;
        for (int y : pos) {
          if (make_weight_key(weight_plus(out.roots[x].weight,
                                          out.roots[y].weight)) ==
              make_weight_key(out.roots[r].weight)) {
            decomposable = true;
            break;
          }
        }
      }
      if (!decomposable) simple.push_back(r);
    }
    SimpleIdeal ideal;
    ideal.rank = static_cast<int>(simple.size());
    ideal.simple_roots = simple;
    ideal.root_count = static_cast<int>(std::count(comp.begin(), comp.end(), c));
    ideal.cartan_matrix.assign(ideal.rank, std::vector<int>(ideal.rank, 0));
    for (int i = 0; i < ideal.rank; ++i)
      for (int j = 0; j < ideal.rank; ++j)
        ideal.cartan_matrix[i][j] =
            i == j ? 2 : out.string_pairing(simple[i], simple[j]);
    auto [ty, rk] = identify_type(ideal.cartan_matrix, ideal.root_count);
    ideal.type = ty;
    if (rk != ideal.rank)
      throw classification_error("rank mismatch in type identification");
    out.ideals.push_back(std::move(ideal));
  }
  // deterministic order: by (type, rank)
  std::sort(out.ideals.begin(), out.ideals.end(),
            [](const SimpleIdeal& a, const SimpleIdeal& b) {
              if (a.type != b.type) return a.type < b.type;
              return a.rank < b.rank;
            });
  return out;
}

SpectrumFn chevalley_spectrum(const ChevalleyAlgebra& ch) {
  // eigenvalues of ad(h) on the whole algebra: {beta(h)} over all roots
  const RootSystem& rs = ch.roots();
  const int rank = rs.rank();
  const int level = ch.algebra().level();
  std::vector<std::vector<int>> pairings;  // per root: <beta, alpha_i^vee>
  for (const auto& beta : rs.roots()) {
    std::vector<int> row(rank);
    for (int i = 0; i < rank; ++i) {
      RootCoords ai(rank, 0);
      ai[i] = 1;
      row[i] = rs.cartan_pairing(beta, ai);
    }
    pairings.push_back(std::move(row));
  }
  return [pairings, rank, level](const DenseVec& h) {
    std::vector<Cyc> out;
    for (const auto& row : pairings) {
      Cyc acc = Cyc::zero(level);
      for (int i = 0; i < rank; ++i)
        if (row[i] != 0) acc += h[i] * Cyc(level, Rational(row[i]));
      out.push_back(acc);
    }
    return out;
  };
}

}  // namespace torlie
