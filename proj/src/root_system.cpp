#include "torlie/root_system.hpp"

#include <algorithm>
#include <set>

#include "torlie/errors.hpp"

namespace torlie {

SimpleType simple_type_from_char(char c) {
  switch (c) {
    case 'A': return SimpleType::A;
    case 'B': return SimpleType::B;
    case 'C': return SimpleType::C;
    case 'D': return SimpleType::D;
    case 'E': return SimpleType::E;
    case 'F': return SimpleType::F;
    case 'G': return SimpleType::G;
    default: throw error(std::string("unknown simple type '") + c + "'");
  }
}

std::string type_name(SimpleType t, int rank) {
  return std::string(1, static_cast<char>(t)) + std::to_string(rank);
}

namespace {

// Simple roots in euclidean coordinates, Bourbaki planches I-IX.
std::vector<std::vector<Rational>> bourbaki_simple_roots(SimpleType t,
                                                         int rank) {
  auto eps = [](int n, int i) {  // epsilon_i (1-based) in R^n
    std::vector<Rational> v(n, Rational(0));
    v[i - 1] = 1;
    return v;
  };
  auto minus = [](std::vector<Rational> a, const std::vector<Rational>& b) {
    for (size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
  };
  auto plus = [](std::vector<Rational> a, const std::vector<Rational>& b) {
    for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
  };
  std::vector<std::vector<Rational>> s;
  switch (t) {
    case SimpleType::A: {
      if (rank < 1) throw error("A_l needs l >= 1");
      int n = rank + 1;
      for (int i = 1; i <= rank; ++i) s.push_back(minus(eps(n, i), eps(n, i + 1)));
      break;
    }
    case SimpleType::B: {
      if (rank < 1) throw error("B_l needs l >= 1");
      for (int i = 1; i < rank; ++i)
        s.push_back(minus(eps(rank, i), eps(rank, i + 1)));
      s.push_back(eps(rank, rank));
      break;
    }
    case SimpleType::C: {
      if (rank < 1) throw error("C_l needs l >= 1");
      for (int i = 1; i < rank; ++i)
        s.push_back(minus(eps(rank, i), eps(rank, i + 1)));
      auto last = eps(rank, rank);
      for (auto& x : last) x *= 2;
      s.push_back(last);
      break;
    }
    case SimpleType::D: {
      if (rank < 3) throw error("D_l needs l >= 3");
      for (int i = 1; i < rank; ++i)
        s.push_back(minus(eps(rank, i), eps(rank, i + 1)));
      s.push_back(plus(eps(rank, rank - 1), eps(rank, rank)));
      break;
    }
    case SimpleType::E: {
      if (rank < 6 || rank > 8) throw error("E_l needs l in {6,7,8}");
      // alpha_1 = (1 - e2 - ... - e7 + e8)/2, alpha_2 = e1+e2,
      // alpha_k = e_{k-1} - e_{k-2} for k = 3..rank
      std::vector<Rational> a1(8, rat(-1, 2));
      a1[0] = rat(1, 2);
      a1[7] = rat(1, 2);
      s.push_back(a1);
      s.push_back(plus(eps(8, 1), eps(8, 2)));
      for (int k = 3; k <= rank; ++k)
        s.push_back(minus(eps(8, k - 1), eps(8, k - 2)));
      break;
    }
    case SimpleType::F: {
      if (rank != 4) throw error("F needs rank 4");
      s.push_back(minus(eps(4, 2), eps(4, 3)));
      s.push_back(minus(eps(4, 3), eps(4, 4)));
      s.push_back(eps(4, 4));
      std::vector<Rational> a4{rat(1, 2), rat(-1, 2), rat(-1, 2), rat(-1, 2)};
      s.push_back(a4);
      break;
    }
    case SimpleType::G: {
      if (rank != 2) throw error("G needs rank 2");
      s.push_back(minus(eps(3, 1), eps(3, 2)));
      std::vector<Rational> a2{rat(-2), rat(1), rat(1)};
      s.push_back(a2);
      break;
    }
  }
  return s;
}

}  // namespace

RootSystem::RootSystem(SimpleType type, int rank) : type_(type), rank_(rank) {
  auto simple = bourbaki_simple_roots(type, rank);
  // Gram matrix of the simple roots from the euclidean model
  gram_.assign(rank, std::vector<Rational>(rank, Rational(0)));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      Rational dot(0);
      for (size_t k = 0; k < simple[i].size(); ++k)
        dot += simple[i][k] * simple[j][k];
      gram_[i][j] = dot;
    }
  cartan_.assign(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      Rational v = 2 * gram_[i][j] / gram_[j][j];
      if (!is_integer(v)) throw error("Cartan matrix entry not integral");
      cartan_[i][j] = static_cast<int>(v.get_num().get_si());
    }

  // Reflection closure starting from the simple roots.
  std::set<RootCoords> seen;
  std::vector<RootCoords> queue;
  for (int i = 0; i < rank; ++i) {
    RootCoords e(rank, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    RootCoords r = queue.back();
    queue.pop_back();
    for (int i = 0; i < rank; ++i) {
      RootCoords alpha(rank, 0);
      alpha[i] = 1;
      RootCoords im = reflect(r, alpha);
      if (seen.insert(im).second) queue.push_back(im);
    }
  }
  // negations (simple reflections already generate them, but be safe)
  std::set<RootCoords> all = seen;
  for (const auto& r : seen) {
    RootCoords n = r;
    for (auto& x : n) x = -x;
    all.insert(n);
  }
  roots_.assign(all.begin(), all.end());
  // order: positives by (height, lex), then negatives by (height, lex)
  auto pos = [&](const RootCoords& r) {
    for (int x : r)
      if (x != 0) return x > 0;
    return false;
  };
  std::sort(roots_.begin(), roots_.end(),
            [&](const RootCoords& a, const RootCoords& b) {
              bool pa = pos(a), pb = pos(b);
              if (pa != pb) return pa;
              int ha = 0, hb = 0;
              for (int x : a) ha += std::abs(x);
              for (int x : b) hb += std::abs(x);
              if (ha != hb) return ha < hb;
              return a > b;  // alpha_1 before alpha_2 within a height
            });
  for (int i = 0; i < static_cast<int>(roots_.size()); ++i) {
    index_[roots_[i]] = i;
    if (pos(roots_[i])) positives_.push_back(roots_[i]);
  }

  min_len_ = inner(roots_[0], roots_[0]);
  for (const auto& r : roots_) {
    Rational l = inner(r, r);
    if (l < min_len_) min_len_ = l;
  }

  int best_h = -1;
  for (const auto& r : positives_) {
    if (height(r) > best_h) {
      best_h = height(r);
      highest_ = r;
    }
  }
}

// out-of-class helpers that need private state are implemented as members
// below; reflect_impl is used during construction
RootCoords RootSystem::reflect(const RootCoords& beta,
                               const RootCoords& alpha) const {
  int n = cartan_pairing(beta, alpha);
  RootCoords out = beta;
  for (int i = 0; i < rank_; ++i) out[i] -= n * alpha[i];
  return out;
}

int RootSystem::root_index(const RootCoords& r) const {
  auto it = index_.find(r);
  return it == index_.end() ? -1 : it->second;
}

Rational RootSystem::inner(const RootCoords& a, const RootCoords& b) const {
  Rational acc(0);
  for (int i = 0; i < rank_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rank_; ++j) {
      if (b[j] == 0) continue;
      acc += Rational(a[i]) * Rational(b[j]) * gram_[i][j];
    }
  }
  return acc;
}

Rational RootSystem::squared_length(const RootCoords& a) const {
  return inner(a, a);
}

Rational RootSystem::length_class(const RootCoords& a) const {
  return squared_length(a) / min_len_;
}

bool RootSystem::is_long(const RootCoords& a) const {
  return length_class(a) != 1;
}

int RootSystem::cartan_pairing(const RootCoords& beta,
                               const RootCoords& alpha) const {
  Rational v = 2 * inner(beta, alpha) / inner(alpha, alpha);
  if (!is_integer(v)) throw error("cartan pairing not integral");
  return static_cast<int>(v.get_num().get_si());
}

int RootSystem::height(const RootCoords& r) const {
  int h = 0;
  for (int x : r) h += x;
  return h;
}

std::vector<int> RootSystem::coroot_coords(const RootCoords& alpha) const {
  // alpha^vee = sum_i k_i (a_i,a_i)/(alpha,alpha) alpha_i^vee
  Rational len = squared_length(alpha);
  std::vector<int> out(rank_, 0);
  for (int i = 0; i < rank_; ++i) {
    Rational c = Rational(alpha[i]) * gram_[i][i] / len;
    if (!is_integer(c)) throw error("coroot coordinate not integral");
    out[i] = static_cast<int>(c.get_num().get_si());
  }
  return out;
}

int RootSystem::short_count() const {
  int n = 0;
  for (const auto& r : roots_)
    if (!is_long(r)) ++n;
  return n;
}

int RootSystem::long_count() const {
  return static_cast<int>(roots_.size()) - short_count();
}

}  // namespace torlie
