// Dense matrices over exact scalars (CycNumber or MPoly) and the free
// functions that act on them: products, adjoints, determinants, pencils.
#pragma once

#include "specpencil/cycfield.hpp"
#include "specpencil/mpoly.hpp"

#include <algorithm>
#include <bit>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace specpencil {

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline CycNumber zero_like(const CycNumber&) { return CycNumber(); }
inline CycNumber one_like(const CycNumber&) { return CycNumber(1); }
inline MPoly zero_like(const MPoly& p) { return MPoly(p.vars()); }
inline MPoly one_like(const MPoly& p) { return MPoly::constant(p.vars(), CycNumber(1)); }

inline void add_product(CycNumber& acc, const CycNumber& a, const CycNumber& b, bool negate) {
  fused_multiply_add(acc, a, b, negate);
}
inline void add_product(MPoly& acc, const MPoly& a, const MPoly& b, bool negate) {
  acc.add_product(a, b, negate);
}

inline bool is_zero(const CycNumber& c) { return c.is_zero(); }
inline bool is_zero(const MPoly& p) { return p.is_zero(); }

/// Row-major dense matrix.
template <class Scalar>
class Matrix {
 public:
  using scalar_type = Scalar;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const Scalar& fill)
      : rows_(rows), cols_(cols), entries_(rows * cols, fill) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
      throw DimensionError("matrix entry count " + std::to_string(entries_.size()) + " != " +
                           std::to_string(rows_) + "x" + std::to_string(cols_));
  }

  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows) {
    if (rows.empty()) throw DimensionError("matrix must have at least one row");
    const std::size_t cols = rows.front().size();
    std::vector<Scalar> entries;
    entries.reserve(rows.size() * cols);
    for (const auto& row : rows) {
      if (row.size() != cols) throw DimensionError("ragged matrix rows");
      entries.insert(entries.end(), row.begin(), row.end());
    }
    return Matrix(rows.size(), cols, std::move(entries));
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const Scalar> entries() const { return entries_; }
  std::span<Scalar> entries() { return entries_; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

using CycMatrix = Matrix<CycNumber>;
using PolyMatrix = Matrix<MPoly>;

namespace detail {

inline std::string shape(std::size_t r, std::size_t c) { return std::to_string(r) + "x" + std::to_string(c); }

template <class Scalar>
void require_same_shape(const Matrix<Scalar>& a, const Matrix<Scalar>& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError(std::string(op) + ": shapes " + shape(a.rows(), a.cols()) + " and " +
                         shape(b.rows(), b.cols()) + " differ");
}

template <class Scalar>
void require_square(const Matrix<Scalar>& m, const char* op) {
  if (!m.is_square() || m.rows() == 0)
    throw DimensionError(std::string(op) + ": matrix is " + shape(m.rows(), m.cols()) + ", not square");
}

}  // namespace detail

template <class Scalar>
Matrix<Scalar> operator+(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
  detail::require_same_shape(a, b, "matadd");
  std::vector<Scalar> out(a.entries().begin(), a.entries().end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b.entries()[i];
  return Matrix<Scalar>(a.rows(), a.cols(), std::move(out));
}

template <class Scalar>
Matrix<Scalar> operator-(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
  detail::require_same_shape(a, b, "matsub");
  std::vector<Scalar> out(a.entries().begin(), a.entries().end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b.entries()[i];
  return Matrix<Scalar>(a.rows(), a.cols(), std::move(out));
}

template <class Scalar>
Matrix<Scalar> operator*(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
  if (a.cols() != b.rows())
    throw DimensionError("matmul: " + detail::shape(a.rows(), a.cols()) + " times " +
                         detail::shape(b.rows(), b.cols()));
  if (a.entries().empty() || b.entries().empty()) throw DimensionError("matmul: empty operand");
  const Scalar zero = zero_like(a.entries().front());
  Matrix<Scalar> out(a.rows(), b.cols(), zero);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a(i, k);
      if (is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) add_product(out(i, j), aik, b(k, j), false);
    }
  return out;
}

template <class Scalar>
Matrix<Scalar> scalar_mul(const Matrix<Scalar>& m, const CycNumber& c) {
  std::vector<Scalar> out(m.entries().begin(), m.entries().end());
  for (auto& e : out) e *= c;
  return Matrix<Scalar>(m.rows(), m.cols(), std::move(out));
}

template <class Scalar>
Matrix<Scalar> operator*(const CycNumber& c, const Matrix<Scalar>& m) {
  return scalar_mul(m, c);
}

template <class Scalar>
Matrix<Scalar> transpose(const Matrix<Scalar>& m) {
  std::vector<Scalar> out;
  out.reserve(m.rows() * m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(m(r, c));
  return Matrix<Scalar>(m.cols(), m.rows(), std::move(out));
}

template <class Scalar>
Matrix<Scalar> matrix_pow(const Matrix<Scalar>& m, unsigned exponent) {
  detail::require_square(m, "matrix_pow");
  Matrix<Scalar> result(m.rows(), m.cols(), zero_like(m(0, 0)));
  for (std::size_t i = 0; i < m.rows(); ++i) result(i, i) = one_like(m(0, 0));
  Matrix<Scalar> base = m;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

CycMatrix identity(std::size_t n);
CycMatrix zeros(std::size_t rows, std::size_t cols);
CycMatrix diagonal(std::span<const CycNumber> diag);
PolyMatrix identity(std::size_t n, const VarSet& vars);

/// Conjugate transpose.
CycMatrix adjoint(const CycMatrix& m);
/// Conjugate transpose of a matrix whose entries are all constants; throws
/// std::invalid_argument otherwise.
PolyMatrix adjoint(const PolyMatrix& m);

bool is_constant(const PolyMatrix& m);
PolyMatrix lift(const CycMatrix& m, const VarSet& vars);
CycMatrix to_constant(const PolyMatrix& m);

unsigned conductor(const CycMatrix& m);
unsigned conductor(const PolyMatrix& m);
CycMatrix with_conductor(const CycMatrix& m, unsigned c);
PolyMatrix with_conductor(const PolyMatrix& m, unsigned c);

/// Determinant by Laplace expansion along rows with memoized column-subset
/// minors: 2^n minors, n*2^(n-1) ring multiplications, no divisions.
template <class Scalar>
Scalar determinant(const Matrix<Scalar>& m) {
  detail::require_square(m, "determinant");
  const std::size_t n = m.rows();
  if (n > 20) throw DimensionError("determinant: size limit is 20");
  Matrix<Scalar> work = with_conductor(m, conductor(m));
  const Scalar zero = zero_like(work(0, 0));
  std::vector<Scalar> minors(std::size_t{1} << n, zero);
  minors[0] = one_like(work(0, 0));
  for (std::size_t subset = 1; subset < minors.size(); ++subset) {
    const std::size_t row = static_cast<std::size_t>(std::popcount(subset)) - 1;
    Scalar& acc = minors[subset];
    std::size_t above = static_cast<std::size_t>(std::popcount(subset)) - 1;
    for (std::size_t col = 0; col < n; ++col) {
      const std::size_t bit = std::size_t{1} << col;
      if (!(subset & bit)) continue;
      // columns of the subset to the right of col
      const std::size_t rest = subset ^ bit;
      const Scalar& entry = work(row, col);
      if (!is_zero(entry) && !is_zero(minors[rest])) add_product(acc, entry, minors[rest], (above & 1u) != 0);
      --above;
    }
  }
  return minors.back();
}

/// Leibniz sum over all n! permutations; n <= 6.  Kept as an independent
/// check on determinant().
template <class Scalar>
Scalar determinant_naive(const Matrix<Scalar>& m) {
  detail::require_square(m, "determinant_naive");
  const std::size_t n = m.rows();
  if (n > 6) throw DimensionError("determinant_naive: size limit is 6");
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  Scalar total = zero_like(m(0, 0));
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Scalar term = one_like(m(0, 0));
    for (std::size_t i = 0; i < n; ++i) term = term * m(i, perm[i]);
    if (inversions % 2)
      total -= term;
    else
      total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// sum_i vars[i] * coeffs[i] - I
PolyMatrix pencil(std::span<const CycMatrix> coeffs, const VarSet& vars);

std::string to_string(const CycMatrix& m);
std::string to_string(const PolyMatrix& m);

}  // namespace specpencil
