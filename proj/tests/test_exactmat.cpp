#include "doctest.h"
#include "support.hpp"

#include "specpencil/construct.hpp"
#include "specpencil/matrix.hpp"

#include <complex>

using namespace specpencil;

namespace {

using cd = std::complex<double>;

std::complex<double> embed(const CycNumber& v) {
  const auto a = approximate(v);
  return {a.re, a.im};
}

// Gaussian elimination with partial pivoting on the complex embedding.
cd float_det(const CycMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<cd> a(n * n);
  for (std::size_t i = 0; i < n * n; ++i) a[i] = embed(m.entries()[i]);
  cd det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(a[r * n + c]) > std::abs(a[piv * n + c])) piv = r;
    if (std::abs(a[piv * n + c]) < 1e-300) return 0;
    if (piv != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a[c * n + k], a[piv * n + k]);
      det = -det;
    }
    det *= a[c * n + c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const cd f = a[r * n + c] / a[c * n + c];
      for (std::size_t k = c; k < n; ++k) a[r * n + k] -= f * a[c * n + k];
    }
  }
  return det;
}

int parity_sign(const Permutation& p) {
  int inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) inversions += p(i) > p(j);
  return inversions % 2 ? -1 : 1;
}

const VarSet xyz{Var::x, Var::y, Var::z};

}  // namespace

TEST_CASE("determinant agrees with the Leibniz oracle on 200 random constant matrices") {
  testgen::Gen g;
  const unsigned conductors[] = {3, 4, 5, 8, 12};
  int count = 0;
  for (std::size_t n = 2; n <= 5; ++n)
    for (unsigned m : conductors)
      for (int t = 0; t < 10; ++t, ++count) {
        const CycMatrix a = g.matrix(n, n, m);
        const CycNumber d = determinant(a);
        CHECK(d == determinant_naive(a));
        CHECK(std::abs(embed(d) - float_det(a)) < 1e-6 * (1 + std::abs(float_det(a))));
      }
  CHECK(count == 200);
}

TEST_CASE("polynomial determinants agree with the Leibniz oracle") {
  testgen::Gen g;
  for (std::size_t n = 1; n <= 5; ++n)
    for (int t = 0; t < 4; ++t) {
      const PolyMatrix a = g.poly_matrix(n, xyz, t % 2 ? 4 : 3);
      CHECK(determinant(a) == determinant_naive(a));
    }
}

TEST_CASE("determinant examples") {
  const CycNumber w = root_of_unity(3, 1);
  const std::vector<CycNumber> d{1, w, w * w};
  CHECK(determinant(diagonal(d)).is_one());
  CHECK(determinant(identity(5)).is_one());
  CHECK(determinant_naive(identity(5)).is_one());

  testgen::Gen g;
  CycMatrix rep = g.matrix(4, 4, 8);
  for (std::size_t k = 0; k < 4; ++k) rep(2, k) = rep(0, k);
  CHECK(determinant(rep).is_zero());

  // the 2x2 Fourier pencil [[x-1, y+z], [y-z, -x-1]]
  const MPoly x = MPoly::variable(xyz, Var::x), y = MPoly::variable(xyz, Var::y), z = MPoly::variable(xyz, Var::z);
  const MPoly one = MPoly::constant(xyz, 1);
  const PolyMatrix p = PolyMatrix::from_rows({{x - one, y + z}, {y - z, -x - one}});
  CHECK(determinant(p) == one - x * x - y * y + z * z);

  CHECK_THROWS_AS(determinant(zeros(2, 3)), DimensionError);
  CHECK_THROWS(determinant_naive(identity(7)));
}

TEST_CASE("determinant is multiplicative") {
  testgen::Gen g;
  for (int t = 0; t < 15; ++t) {
    const CycMatrix a = g.matrix(3, 3, 12), b = g.matrix(3, 3, 12);
    CHECK(determinant(a * b) == determinant(a) * determinant(b));
    CHECK(determinant(adjoint(a)) == determinant(a).conjugate());
  }
  for (int t = 0; t < 20; ++t) {
    const Permutation p = g.perm(static_cast<std::size_t>(g.integer(1, 7)));
    CHECK(determinant(perm_matrix(p)) == CycNumber(parity_sign(p)));
  }
}

TEST_CASE("products, sums and adjoints") {
  testgen::Gen g;
  const CycMatrix m = g.matrix(3, 3, 5);
  CHECK(identity(3) * m == m);
  CHECK(m * identity(3) == m);
  CHECK(m + zeros(3, 3) == m);
  CHECK((m - m) == zeros(3, 3));
  const CycMatrix f2 = fourier_matrix(2);
  CHECK(f2 * adjoint(f2) == scalar_mul(identity(2), CycNumber(2)));
  const CycMatrix f4 = fourier_matrix(4);
  CHECK(adjoint(f4) * f4 == scalar_mul(identity(4), CycNumber(4)));

  const CycNumber z = root_of_unity(5, 1);
  const std::vector<CycNumber> d{z, z * z}, dc{pow(z, 4), pow(z, 3)};
  CHECK(adjoint(diagonal(d)) == diagonal(dc));
  CHECK(adjoint(adjoint(m)) == m);

  const CycMatrix a = omega_diag(4), b = b_hat(4);
  CHECK((a * b) * (b * a) == a * ((b * b) * a));

  CHECK_THROWS_AS(zeros(2, 3) * zeros(2, 3), DimensionError);
  CHECK_THROWS_AS(zeros(2, 3) + zeros(3, 2), DimensionError);
  const PolyMatrix px = lift(identity(2), VarSet{Var::x});
  PolyMatrix nonconst = px;
  nonconst(0, 0) = MPoly::variable(VarSet{Var::x}, Var::x);
  CHECK_NOTHROW(adjoint(px));
  CHECK_THROWS(adjoint(nonconst));
}

TEST_CASE("pencils") {
  const VarSet xs{Var::x};
  const MPoly x = MPoly::variable(xs, Var::x), one = MPoly::constant(xs, 1);
  const CycMatrix a2 = omega_diag(2);
  const CycMatrix one_matrix[] = {a2};
  const PolyMatrix p = pencil(one_matrix, xs);
  CHECK(p == PolyMatrix::from_rows({{x - one, MPoly(xs)}, {MPoly(xs), -x - one}}));

  const CycMatrix a = omega_diag(3), b = b_hat(3), ab = a * b;
  const CycMatrix triple[] = {a, b, ab};
  const PolyMatrix q = pencil(triple, xyz);
  const MPoly X = MPoly::variable(xyz, Var::x), Y = MPoly::variable(xyz, Var::y), Z = MPoly::variable(xyz, Var::z);
  CHECK(q(0, 0) == scalar_mul(X, a(0, 0)) + scalar_mul(Y, b(0, 0)) + scalar_mul(Z, ab(0, 0)) - MPoly::constant(xyz, 1));

  // det(x A - I) = prod (x zeta^j - 1), proportional to x^n - 1
  for (std::size_t n = 2; n <= 7; ++n) {
    const CycMatrix an[] = {omega_diag(n)};
    MPoly target = pow(x, static_cast<unsigned>(n)) - one;
    MPoly prod = MPoly::constant(xs, 1);
    for (std::size_t j = 0; j < n; ++j)
      prod = prod * (scalar_mul(x, root_of_unity(static_cast<unsigned>(n), static_cast<long>(j))) - one);
    const MPoly d = determinant(pencil(an, xs));
    CHECK(d == prod);
    CHECK(is_proportional(target, d));
  }
  const CycMatrix mismatched[] = {identity(2), identity(3)};
  CHECK_THROWS(pencil(mismatched, VarSet{Var::x, Var::y}));
}
