// Permutations of {0, ..., n-1}, their matrices, and the affine subgroup
// G_n = { j -> q*j + m mod n : gcd(q, n) = 1 }.
#pragma once

#include "specpencil/matrix.hpp"

#include <compare>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace specpencil {

class Permutation {
 public:
  /// The empty permutation of {}.
  Permutation() = default;
  /// Throws std::invalid_argument unless images is a bijection of {0..n-1}.
  explicit Permutation(std::vector<int> images);
  static Permutation identity(std::size_t n);

  std::size_t size() const { return images_.size(); }
  int operator()(std::size_t j) const { return images_[j]; }
  const std::vector<int>& images() const { return images_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

Permutation identity_perm(std::size_t n);
/// compose(p, q)(j) = p(q(j))
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);

/// 0/1 matrix with entry (p(j), j) = 1, so perm_matrix(compose(p, q)) =
/// perm_matrix(p) * perm_matrix(q).
CycMatrix perm_matrix(const Permutation& p);

/// All n! permutations in lexicographic order of image arrays; n <= 8.
std::vector<Permutation> enumerate_sn(std::size_t n);

struct AffineWitness {
  int q;
  int m;
};

std::optional<AffineWitness> affine_witness(const Permutation& p);
bool in_affine_group(const Permutation& p);
/// j -> q*j + m mod n
Permutation affine_perm(std::size_t n, int q, int m);
/// Every element of G_n, sorted.
std::vector<Permutation> affine_group(std::size_t n);

/// Closure of the generators under composition, breadth first.
std::set<Permutation> generated_subgroup(std::span<const Permutation> gens);

/// Cycle notation "(0,1,2)(3,4)"; `base` is 0 or 1 for the labels used.
Permutation from_cycles(std::size_t n, std::string_view text, int base = 0);
/// Image array "[2,0,1]" or, when n is given, 0-based cycle notation.
Permutation parse_permutation(std::string_view text, std::optional<std::size_t> n = std::nullopt);
/// "[2,0,1]"
std::string to_string(const Permutation& p);

/// Generators of G_4 and G_5 as written in 1-based cycle notation in the
/// original Sage scans: (1,2,3,4),(1,3) and (1,2,3,4,5),(1,2,4,3).
std::vector<Permutation> sage_generators_g4();
std::vector<Permutation> sage_generators_g5();

}  // namespace specpencil
