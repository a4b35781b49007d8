// Exhaustive scans over permutation pairs (P1, P2) in S_n x S_n.
//
// Every scan indexes pairs as i = index(P1) * n! + index(P2) in
// lexicographic order and merges worker results in index order, so the
// reported content never depends on the worker count.
#pragma once

#include "specpencil/construct.hpp"
#include "specpencil/perms.hpp"
#include "specpencil/spectra.hpp"

#include <atomic>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace specpencil {

using PermPair = std::pair<Permutation, Permutation>;

struct ScanOptions {
  unsigned workers = 1;
  bool fail_fast = false;
  /// Polled between pairs; when set the scan stops and reports a prefix.
  const std::atomic<bool>* cancel = nullptr;
};

struct ClassificationReport {
  unsigned n = 0;
  std::size_t pairs_total = 0;
  /// Length of the scanned prefix; equals pairs_total unless stopped early.
  std::size_t pairs_scanned = 0;
  std::vector<PermPair> fourier_pairs;
  std::vector<PermPair> predicted;  // P1 in G_n or P2 in G_n
  bool match = false;
  bool complete = false;
  double elapsed_ms = 0.0;
};

/// b_from_hadamard(P1 * F_n * P2)
CycMatrix permuted_fourier_b(const Permutation& p1, const Permutation& p2);
/// det(x A + y B + z AB - I) for B = permuted_fourier_b(p1, p2).
MPoly permuted_fourier_spectrum(const Permutation& p1, const Permutation& p2);

/// Scans all |S_n|^2 pairs, n in {4, 5}, and compares the set whose
/// spectrum is proportional to fourier_surface_3(n) with the pairs having a
/// factor in G_n.
ClassificationReport classify_permutation_pairs(unsigned n, const ScanOptions& options = {});

struct H4SampleResult {
  CycNumber t;
  std::string label;  // e.g. "zeta24^6"
  std::size_t pairs = 0;
  std::size_t vanishing_pairs = 0;
  bool all_vanish = false;
  bool expected_vanishing = false;  // t == i or t == -i
  /// The vanishing pairs are exactly those with P1 or P2 in G_4.
  bool vanishing_equals_affine = false;
  std::optional<PermPair> first_nonzero;
  std::optional<CycNumber> first_nonzero_coefficient;
};

struct H4ScanReport {
  std::vector<H4SampleResult> samples;
  /// Every sample has a vanishing pair iff it is i or -i, and then the
  /// vanishing pairs are exactly the affine ones.
  bool consistent = false;
  bool minus_i_similar_to_f4 = false;
  bool complete = false;
  double elapsed_ms = 0.0;
};

/// For each unimodular t and each (P1, P2) in S_4 x S_4, with
/// B = b_from_hadamard(P1 H(t) P2), tests whether the z^2 coefficient of
/// det(z A B - I) vanishes exactly.  It never vanishes for all 576 pairs;
/// at t = +-i it vanishes on the 320 affine pairs and nowhere else.
H4ScanReport scan_h4_family(std::span<const CycNumber> samples, const ScanOptions& options = {});
/// All m-th roots of unity, labelled "zeta<m>^k".
std::vector<std::pair<CycNumber, std::string>> roots_of_unity_samples(unsigned m);

struct Lemma41Case {
  char kind = 'a';  // 'a': P1 in G_n, 'b': P2 in G_n
  Permutation p1;
  Permutation p2;
  AffineWitness affine{1, 0};
  /// Permutation P of the witness.  Kind a: B = L^* P^* b_hat P L.
  /// Kind b: B = b_from_hadamard(P F_n), and F_n B F_n^* / n = P^* A P.
  Permutation witness;
  std::vector<CycNumber> lambda;  // kind a only
  bool recipe_witness = false;    // witness came from the affine recipe, not a search
  bool monomial_structure = true; // kind a: one equal root of unity per row and column
  bool verified = false;
  bool spectrum_fourier = false;
};

struct Lemma41Report {
  unsigned n = 0;
  std::vector<Lemma41Case> cases;
  bool all_passed() const;
};

/// For every P1 in G_n with `random_partners` random P2 (plus P2 = id), and
/// symmetrically for P2 in G_n, exhibits and verifies the equivalence
/// witnesses exactly.  n <= 6.
Lemma41Report verify_lemma_4_1_equivalences(unsigned n, std::size_t random_partners = 3,
                                            std::uint64_t seed = 20240601);

}  // namespace specpencil
