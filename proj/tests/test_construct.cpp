#include "doctest.h"
#include "support.hpp"

#include "specpencil/construct.hpp"

using namespace specpencil;

namespace {

CycMatrix diag_of(const std::vector<CycNumber>& d) { return diagonal(d); }

std::vector<CycNumber> conj_all(std::vector<CycNumber> d) {
  for (auto& v : d) v = v.conjugate();
  return d;
}

// Haagerup's invariant set { h_ij h_kl conj(h_il) conj(h_kj) }, unchanged by
// row/column permutations and unimodular rescalings.
std::vector<CycNumber> haagerup_set(const CycMatrix& h) {
  const std::size_t n = h.rows();
  std::vector<CycNumber> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          const CycNumber v = h(i, j) * h(k, l) * h(i, l).conjugate() * h(k, j).conjugate();
          if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
        }
  return out;
}

bool same_set(const std::vector<CycNumber>& a, const std::vector<CycNumber>& b) {
  auto within = [](const auto& x, const auto& y) {
    return std::all_of(x.begin(), x.end(), [&](const CycNumber& v) { return std::find(y.begin(), y.end(), v) != y.end(); });
  };
  return within(a, b) && within(b, a);
}

}  // namespace

TEST_CASE("omega and Fourier examples") {
  const CycNumber i = root_of_unity(4, 1);
  CHECK(omega_diag(4) == diag_of({1, i, -1, -i}));
  CHECK(fourier_matrix(2) == CycMatrix::from_rows({{1, 1}, {1, -1}}));
  const CycMatrix f4 = fourier_matrix(4);
  CHECK(f4(1, 1) == i);
  CHECK(f4(2, 3) == CycNumber(-1));
  CHECK(f4(3, 3) == i);
  CHECK(f4 == h4_family_at(i));
}

TEST_CASE("shift matrices") {
  CHECK(b_hat(3) == CycMatrix::from_rows({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}));
  CHECK(b_hat_hat(3) == CycMatrix::from_rows({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}));
  for (std::size_t n = 2; n <= 8; ++n) {
    CycMatrix pw = identity(n);
    for (std::size_t k = 0; k < n; ++k) {
      if (k > 0) CHECK(pw != identity(n));
      pw = pw * b_hat(n);
    }
    CHECK(pw == identity(n));
    CHECK(b_hat(n) * b_hat_hat(n) == identity(n));
    const CycMatrix p = perm_matrix(shift_reversal(n));
    CHECK(adjoint(p) * b_hat(n) * p == b_hat_hat(n));
    CHECK(compose(shift_reversal(n), shift_reversal(n)) == identity_perm(n));
  }
}

TEST_CASE("the Fourier matrix produces the cyclic shift") {
  for (std::size_t n = 2; n <= 8; ++n) CHECK(b_from_hadamard(fourier_matrix(n)) == b_hat(n));
}

TEST_CASE("unimodular rescaling of F conjugates the shift") {
  testgen::Gen g;
  for (std::size_t n = 2; n <= 6; ++n) {
    for (int t = 0; t < 4; ++t) {
      const auto l1 = g.unimodular_diag(n, 12), l2 = g.unimodular_diag(n, 12);
      const CycMatrix h = diag_of(l1) * fourier_matrix(n) * diag_of(l2);
      const CycMatrix b = b_from_hadamard(h);
      CHECK(b == diag_of(conj_all(l2)) * b_hat(n) * diag_of(l2));
      const auto d = diagonal_conjugation(b_hat(n), b);
      REQUIRE(d.has_value());
      CHECK(adjoint(diag_of(*d)) * b_hat(n) * diag_of(*d) == b);
    }
  }
  // supports differ
  CHECK(!diagonal_conjugation(b_hat(3), b_hat_hat(3)).has_value());
  // same support, but the cycle product of the phases differs
  CycMatrix twisted = b_hat(3);
  twisted(1, 0) = root_of_unity(3, 1);
  CHECK(!diagonal_conjugation(b_hat(3), twisted).has_value());
}

TEST_CASE("the 4x4 family is Hadamard at every 24th root of unity") {
  for (unsigned k = 0; k < 24; ++k) CHECK(is_complex_hadamard(h4_family_at(root_of_unity(24, k))));
  CHECK_THROWS(h4_family_at(CycNumber(2)));
}

TEST_CASE("Hadamard negatives") {
  const auto bad_modulus = check_complex_hadamard(CycMatrix::from_rows({{1, 1}, {1, 2}}));
  CHECK(!bad_modulus.hadamard);
  CHECK(!bad_modulus.witness.empty());
  CHECK(!is_complex_hadamard(CycMatrix::from_rows({{1, 1}, {1, 1}})));
  CHECK(!is_complex_hadamard(zeros(2, 3)));
  CHECK(is_complex_hadamard(fourier_matrix(7)));
  // unimodular entries, rows not orthogonal
  const CycNumber i = root_of_unity(4, 1);
  CHECK(!is_complex_hadamard(CycMatrix::from_rows({{1, i}, {1, 1}})));
}

TEST_CASE("Hadamard similarity") {
  testgen::Gen g;
  const CycMatrix f4 = fourier_matrix(4);
  CHECK(hadamard_similar(f4, f4).has_value());

  for (int t = 0; t < 6; ++t) {
    const std::size_t n = t % 2 ? 5 : 4;
    const CycMatrix f = fourier_matrix(n);
    const Permutation p1 = g.perm(n), p2 = g.perm(n);
    const CycMatrix h = diag_of(g.unimodular_diag(n, 8)) * perm_matrix(p1) * f * perm_matrix(p2) *
                        diag_of(g.unimodular_diag(n, 8));
    const auto w = hadamard_similar(f, h);
    REQUIRE(w.has_value());
    CHECK(diag_of(w->lambda1) * perm_matrix(w->p1) * f * perm_matrix(w->p2) * diag_of(w->lambda2) == h);
    CHECK(hadamard_similar(h, f).has_value());
    CHECK(same_set(haagerup_set(f), haagerup_set(h)));
  }

  const CycMatrix minus_i = h4_family_at(root_of_unity(4, 3));
  CHECK(hadamard_similar(minus_i, f4).has_value());
  CHECK(same_set(haagerup_set(minus_i), haagerup_set(f4)));

  const CycMatrix z8 = h4_family_at(root_of_unity(8, 1));
  CHECK(!same_set(haagerup_set(z8), haagerup_set(f4)));
  CHECK(!hadamard_similar(z8, f4).has_value());
  CHECK(!hadamard_similar(f4, z8).has_value());
  CHECK_THROWS(hadamard_similar(f4, fourier_matrix(5)));
}

TEST_CASE("rank one ratio") {
  const CycMatrix f = fourier_matrix(3);
  const std::vector<CycNumber> l{root_of_unity(3, 1), 1, root_of_unity(6, 1)}, m{1, root_of_unity(4, 1), -1};
  const auto r = rank_one_ratio(diag_of(l) * f * diag_of(m), f);
  REQUIRE(r.has_value());
  CHECK(r->first == l);
  CHECK(r->second == m);
  CHECK(!rank_one_ratio(fourier_matrix(3), perm_matrix(Permutation({1, 0, 2})) * f).has_value());
}

TEST_CASE("eigenbasis transition checks") {
  for (std::size_t n = 2; n <= 8; ++n) {
    const TransitionCheck c = transition_check(fourier_matrix(n));
    CHECK(c.ok());
    CHECK(c.scaled_transition == adjoint(fourier_matrix(n)));
    CHECK(transition_is_hadamard(fourier_matrix(n)));
  }
  testgen::Gen g;
  const CycMatrix h = perm_matrix(g.perm(5)) * fourier_matrix(5) * perm_matrix(g.perm(5));
  CHECK(transition_check(h).ok());

  const TransitionCheck bad = transition_check(CycMatrix::from_rows({{1, 1}, {1, 2}}));
  CHECK(!bad.ok());
  CHECK(!bad.message.empty());
}
