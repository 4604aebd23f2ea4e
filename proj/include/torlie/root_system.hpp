#ifndef TORLIE_ROOT_SYSTEM_HPP
#define TORLIE_ROOT_SYSTEM_HPP

#include <map>
#include <string>
#include <vector>

#include "torlie/rational.hpp"

namespace torlie {

enum class SimpleType : char { A = 'A', B = 'B', C = 'C', D = 'D',
                               E = 'E', F = 'F', G = 'G' };

SimpleType simple_type_from_char(char c);
std::string type_name(SimpleType t, int rank);

/// Integer vector in the simple-root basis.
using RootCoords = std::vector<int>;

/// Finite root system of a simple type, simple roots numbered as in the
/// Bourbaki planches. Roots are enumerated by reflection closure and held
/// in simple-root coordinates; the symmetric form is normalized so the
/// shortest root has squared length 1.
class RootSystem {
 public:
  RootSystem(SimpleType type, int rank);

  SimpleType type() const { return type_; }
  int rank() const { return rank_; }
  const std::vector<RootCoords>& roots() const { return roots_; }
  const std::vector<RootCoords>& positive_roots() const { return positives_; }
  int root_index(const RootCoords& r) const;  // -1 when absent
  bool is_root(const RootCoords& r) const { return root_index(r) >= 0; }

  /// Cartan matrix A[i][j] = <alpha_i, alpha_j^vee> = 2(a_i,a_j)/(a_j,a_j).
  const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }
  /// Symmetric Gram matrix of the simple roots (rational).
  const std::vector<std::vector<Rational>>& gram() const { return gram_; }

  Rational inner(const RootCoords& a, const RootCoords& b) const;
  Rational squared_length(const RootCoords& a) const;
  /// Squared length divided by the minimum over all roots (1, 2, 3 or 4).
  Rational length_class(const RootCoords& a) const;
  bool is_long(const RootCoords& a) const;

  /// <beta, alpha^vee> = 2(beta,alpha)/(alpha,alpha); always an integer.
  int cartan_pairing(const RootCoords& beta, const RootCoords& alpha) const;
  RootCoords reflect(const RootCoords& beta, const RootCoords& alpha) const;

  int height(const RootCoords& r) const;
  const RootCoords& highest_root() const { return highest_; }

  /// Coordinates of alpha^vee in the simple coroot basis (integers).
  std::vector<int> coroot_coords(const RootCoords& alpha) const;

  int short_count() const;
  int long_count() const;

 private:
  SimpleType type_;
  int rank_;
  std::vector<std::vector<Rational>> gram_;
  std::vector<std::vector<int>> cartan_;
  std::vector<RootCoords> roots_;
  std::vector<RootCoords> positives_;
  std::map<RootCoords, int> index_;
  RootCoords highest_;
  Rational min_len_;
};

}  // namespace torlie

#endif
