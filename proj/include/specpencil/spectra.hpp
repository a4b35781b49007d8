// Joint-spectrum polynomials det(x_1 A_1 + ... + x_k A_k - I), the Fourier
// target surfaces, and exact checks of the finite-matrix operator identities
// satisfied by the Fourier pair (A, B).
#pragma once

#include "specpencil/construct.hpp"
#include "specpencil/matrix.hpp"
#include "specpencil/mpoly.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace specpencil {

/// det(pencil(matrices, vars)); the proper joint spectrum is its zero set.
MPoly joint_spectrum_poly(std::span<const CycMatrix> matrices, const VarSet& vars);

/// x^n + y^n + (-1)^{n-1} z^n - 1
MPoly fourier_surface_3(unsigned n);
/// x^n + y^n + (-1)^{n-1} (zeta_n z1 + z2)^n - 1
MPoly fourier_surface_4(unsigned n);

enum class SurfaceKind { three_var, four_var };

struct SpectrumReport {
  std::string description;
  MPoly computed;
  MPoly target;
  bool proportional = false;
  std::optional<CycNumber> ratio;  // computed == ratio * target
  /// deg(computed) == n, so no factor of the target can repeat.
  bool degree_matches = false;
};

SpectrumReport is_fourier_spectrum(std::span<const CycMatrix> matrices, const VarSet& vars, unsigned n,
                                   SurfaceKind which, std::string description = {});

/// The tuple (A, B, AB) or (A, B, AB, BA) for A = omega_diag(n).
std::vector<CycMatrix> fourier_tuple(const CycMatrix& b, SurfaceKind which);
/// is_fourier_spectrum on fourier_tuple(b_hat(n), which).
SpectrumReport fourier_pair_spectrum(unsigned n, SurfaceKind which);

/// diag(1, 0, ..., 0): projection onto A's eigenvalue-one eigenspace.
CycMatrix projection_P0(std::size_t n);
/// diag(0, 1/(zeta-1), ..., 1/(zeta^{n-1}-1)): reduced resolvent of A at 1.
CycMatrix resolvent_T(std::size_t n);

struct IdentityCheck {
  std::string name;
  bool passed = false;
};

struct RelationReport {
  unsigned n = 0;
  std::vector<IdentityCheck> checks;
  bool all_passed() const;
};

/// Evaluates, with A = omega_diag(n), P0, T as above:
///   P0 (BT)^k B P0 = 0 (k < n-1),      P0 (BT)^{n-1} B P0 = (-1)^{n-1} P0 / n
///   P0 (ABT)^k AB P0 = 0 (k < n-1),    P0 (ABT)^{n-1} AB P0 = P0 / n
///   P0 B^k P0 = 0 (0 < k < n),         P0 B^n P0 = P0,  <B^n e0, e0> = 1
///   P0 B^r AB P0 = 0 (0 < r < n-1),    P0 B^{n-1} AB P0 = zeta_n P0
///   AT = TA = I - P0 + T
RelationReport verify_moment_relations(const CycMatrix& b, unsigned n);

struct CounterexampleReport {
  // Relations g1^3 = g2^3 = (g1 g2)^3 = (g1 g2^2)^3 = e for each pair.
  std::vector<IdentityCheck> relations;
  MPoly spectrum_hat;      // (A, b_hat(3))
  MPoly spectrum_hat_hat;  // (A, b_hat_hat(3))
  bool spectra_match_target = false;
  bool diagonal_conjugation_found = false;
  std::string inequivalence_scope;
  bool passed() const;
};

CounterexampleReport verify_counterexample_27();

}  // namespace specpencil
