#include "doctest.h"
#include "support.hpp"

#include "specpencil/perms.hpp"

#include <numeric>

using namespace specpencil;

TEST_CASE("composition and inverse") {
  const Permutation c({1, 2, 0});
  CHECK(inverse(c) == Permutation({2, 0, 1}));
  CHECK(compose(c, inverse(c)) == identity_perm(3));
  CHECK(compose(c, c) == inverse(c));
  const Permutation t({1, 0, 2});
  CHECK(compose(c, t)(0) == c(t(0)));
  CHECK(compose(c, t) == Permutation({2, 1, 0}));
  CHECK_THROWS_AS(Permutation({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 3, 1}), std::invalid_argument);
  CHECK_THROWS(compose(c, identity_perm(4)));

  testgen::Gen g;
  for (int k = 0; k < 40; ++k) {
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 7));
    const Permutation p = g.perm(n), q = g.perm(n), r = g.perm(n);
    CHECK(compose(compose(p, q), r) == compose(p, compose(q, r)));
    CHECK(inverse(compose(p, q)) == compose(inverse(q), inverse(p)));
    CHECK(perm_matrix(compose(p, q)) == perm_matrix(p) * perm_matrix(q));
    CHECK(adjoint(perm_matrix(p)) == perm_matrix(inverse(p)));
  }
}

TEST_CASE("permutation matrices") {
  // the cyclic down-shift is the matrix of j -> j+1
  for (std::size_t n = 2; n <= 6; ++n) CHECK(perm_matrix(affine_perm(n, 1, 1)) == b_hat(n));
  const CycMatrix m = perm_matrix(Permutation({2, 0, 1}));
  CHECK(m(2, 0) == CycNumber(1));
  CHECK(m(0, 1) == CycNumber(1));
  CHECK(m(0, 0).is_zero());
}

TEST_CASE("enumeration") {
  std::size_t fact = 1;
  for (std::size_t n = 1; n <= 7; ++n) {
    fact *= n;
    const auto all = enumerate_sn(n);
    CHECK(all.size() == fact);
    CHECK(std::is_sorted(all.begin(), all.end()));
    CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
  }
  CHECK(enumerate_sn(3).front() == identity_perm(3));
  CHECK_THROWS(enumerate_sn(9));
}

TEST_CASE("affine group") {
  CHECK(in_affine_group(identity_perm(4)));
  CHECK(in_affine_group(Permutation({0, 3, 2, 1})));   // j -> -j
  CHECK(!in_affine_group(Permutation({1, 0, 2, 3})));  // the transposition (0 1)
  const auto w = affine_witness(affine_perm(5, 2, 3));
  REQUIRE(w.has_value());
  CHECK(w->q == 2);
  CHECK(w->m == 3);
  CHECK(affine_perm(5, 2, 3) == Permutation({3, 0, 2, 4, 1}));

  for (std::size_t n = 3; n <= 7; ++n) {
    const auto gn = affine_group(n);
    CHECK(gn.size() == n * euler_phi(static_cast<unsigned>(n)));
    CHECK(std::is_sorted(gn.begin(), gn.end()));
    std::size_t members = 0;
    if (n <= 6)
      for (const auto& p : enumerate_sn(n)) members += in_affine_group(p);
    if (n <= 6) CHECK(members == gn.size());
    // closed under composition and inversion
    for (const auto& p : gn) {
      CHECK(in_affine_group(inverse(p)));
      CHECK(in_affine_group(compose(p, gn[gn.size() / 2])));
    }
  }
}

TEST_CASE("generated subgroups") {
  const auto g4 = sage_generators_g4();
  const auto g5 = sage_generators_g5();
  const auto s4 = generated_subgroup(g4);
  const auto s5 = generated_subgroup(g5);
  const auto a4 = affine_group(4), a5 = affine_group(5);
  CHECK(std::set<Permutation>(a4.begin(), a4.end()) == s4);
  CHECK(std::set<Permutation>(a5.begin(), a5.end()) == s5);
  CHECK(s4.size() == 8);
  CHECK(s5.size() == 20);
  const std::vector<Permutation> one{Permutation({1, 0, 2})};
  CHECK(generated_subgroup(one).size() == 2);
}

TEST_CASE("parsing and printing") {
  CHECK(from_cycles(4, "(0,1,2,3)") == affine_perm(4, 1, 1));
  CHECK(from_cycles(4, "(1,2,3,4)", 1) == affine_perm(4, 1, 1));
  CHECK(from_cycles(5, "(0,1)(2,3)") == Permutation({1, 0, 3, 2, 4}));
  CHECK(from_cycles(3, "") == identity_perm(3));
  CHECK(from_cycles(3, "()") == identity_perm(3));
  CHECK_THROWS(from_cycles(3, "(0,3)"));
  CHECK_THROWS(from_cycles(3, "(0,1)(1,2)"));
  CHECK_THROWS(from_cycles(3, "(0,1"));
  CHECK(parse_permutation("[2,0,1]") == Permutation({2, 0, 1}));
  CHECK(parse_permutation("(0,2)", 3) == Permutation({2, 1, 0}));
  CHECK_THROWS(parse_permutation("[2,0,0]"));
  CHECK_THROWS(parse_permutation("2,0,1"));
  CHECK(to_string(Permutation({2, 0, 1})) == "[2,0,1]");
  testgen::Gen g;
  for (int k = 0; k < 20; ++k) {
    const Permutation p = g.perm(6);
    CHECK(parse_permutation(to_string(p)) == p);
  }
}
