// Concrete matrices (Fourier, shift, diagonal of roots of unity, the
// one-parameter 4x4 family) and Hadamard structure tests.
#pragma once

#include "specpencil/matrix.hpp"
#include "specpencil/perms.hpp"

#include <optional>
#include <string>

namespace specpencil {

/// diag(1, zeta_n, ..., zeta_n^{n-1})
CycMatrix omega_diag(std::size_t n);
/// Entries zeta_n^{jk}, 0-based.
CycMatrix fourier_matrix(std::size_t n);
/// (1/n) * h^* * omega_diag(n) * h
CycMatrix b_from_hadamard(const CycMatrix& h);
/// Cyclic down-shift: ones on the subdiagonal and in the top-right corner.
CycMatrix b_hat(std::size_t n);
/// Cyclic up-shift: ones on the superdiagonal and in the bottom-left corner.
CycMatrix b_hat_hat(std::size_t n);
/// The involution j -> n-2-j (mod n) conjugating b_hat into b_hat_hat.
Permutation shift_reversal(std::size_t n);

/// [[1,1,1,1],[1,t,-1,-t],[1,-1,1,-1],[1,-t,-1,t]] for unimodular t.
CycMatrix h4_family_at(const CycNumber& t);

struct HadamardCheck {
  bool hadamard = false;
  std::string witness;  // first violation, empty when hadamard
};

HadamardCheck check_complex_hadamard(const CycMatrix& h);
bool is_complex_hadamard(const CycMatrix& h);

struct SimilarityWitness {
  Permutation p1;
  Permutation p2;
  std::vector<CycNumber> lambda1;  // diagonal of Lambda_1
  std::vector<CycNumber> lambda2;  // diagonal of Lambda_2
};

/// Solves h2 = diag(lambda) * m * diag(mu) with unimodular lambda, mu and
/// mu_0 = 1 (so lambda_0 = h2_00 / m_00).  Requires m to have no zero entry.
std::optional<std::pair<std::vector<CycNumber>, std::vector<CycNumber>>> rank_one_ratio(
    const CycMatrix& h2, const CycMatrix& m);

/// h2 = Lambda1 * P1 * h1 * P2 * Lambda2 for some permutation matrices and
/// unimodular diagonals; searches S_n x S_n, n <= 5.
std::optional<SimilarityWitness> hadamard_similar(const CycMatrix& h1, const CycMatrix& h2);

/// Is there a unimodular diagonal D with D^* b1 D = b2?  Supports must agree;
/// the phases are propagated along the support and the result verified.
std::optional<std::vector<CycNumber>> diagonal_conjugation(const CycMatrix& b1, const CycMatrix& b2);

struct TransitionCheck {
  bool eigen_verified = false;
  std::optional<std::size_t> failed_column;
  /// sqrt(n) times the eigenbasis transition matrix, i.e. adjoint(h).
  CycMatrix scaled_transition;
  bool hadamard = false;
  std::string message;
  bool ok() const { return eigen_verified && hadamard; }
};

/// With A = omega_diag(n) and B = b_from_hadamard(h), verifies that column j
/// of adjoint(h) is a B-eigenvector for zeta_n^j, then that sqrt(n) times
/// the transition matrix from the standard basis to those eigenvectors is
/// complex Hadamard.
TransitionCheck transition_check(const CycMatrix& h);
bool transition_is_hadamard(const CycMatrix& h);

}  // namespace specpencil
