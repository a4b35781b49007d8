// Seeded generators for the property suites.
#pragma once

#include "specpencil/construct.hpp"
#include "specpencil/matrix.hpp"
#include "specpencil/mpoly.hpp"
#include "specpencil/perms.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace testgen {

using namespace specpencil;

inline constexpr std::uint64_t kSeed = 0x5eed2024;

class Gen {
 public:
  explicit Gen(std::uint64_t seed = kSeed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(integer(0, static_cast<long>(n) - 1)); }
  bool coin() { return integer(0, 1) == 1; }

  BigRational rational(long range = 9, long max_den = 5) {
    BigRational r(integer(-range, range), integer(1, max_den));
    r.canonicalize();
    return r;
  }

  /// Random element of Q(zeta_m) with a few nonzero coefficients.
  CycNumber cyc(unsigned m, std::size_t terms = 3) {
    std::vector<BigRational> c(m);
    for (std::size_t t = 0; t < terms; ++t) c[index(m)] += rational();
    return CycNumber::from_coefficients(m, c);
  }

  CycNumber nonzero_cyc(unsigned m) {
    for (;;) {
      CycNumber v = cyc(m);
      if (!v.is_zero()) return v;
    }
  }

  CycNumber root(unsigned m) { return root_of_unity(m, integer(0, m - 1)); }

  MPoly poly(const VarSet& vars, unsigned m, std::size_t terms = 4, unsigned max_deg = 3) {
    MPoly p(vars);
    for (std::size_t t = 0; t < terms; ++t) {
      Exponents e(vars.size());
      for (auto& d : e) d = static_cast<unsigned>(integer(0, max_deg));
      p.add_term(e, cyc(m, 2));
    }
    return p;
  }

  CycMatrix matrix(std::size_t rows, std::size_t cols, unsigned m) {
    CycMatrix out = zeros(rows, cols);
    for (auto& e : out.entries()) e = cyc(m, 2);
    return out;
  }

  PolyMatrix poly_matrix(std::size_t n, const VarSet& vars, unsigned m) {
    std::vector<MPoly> entries;
    for (std::size_t i = 0; i < n * n; ++i) entries.push_back(poly(vars, m, 2, 1));
    return PolyMatrix(n, n, std::move(entries));
  }

  Permutation perm(std::size_t n) {
    std::vector<int> images(n);
    std::iota(images.begin(), images.end(), 0);
    std::shuffle(images.begin(), images.end(), rng_);
    return Permutation(std::move(images));
  }

  std::vector<CycNumber> unimodular_diag(std::size_t n, unsigned m) {
    std::vector<CycNumber> d;
    for (std::size_t i = 0; i < n; ++i) d.push_back(root(m));
    return d;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace testgen
