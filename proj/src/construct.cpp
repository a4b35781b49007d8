#include "specpencil/construct.hpp"

#include <deque>

namespace specpencil {

CycMatrix omega_diag(std::size_t n) {
  if (n == 0) throw std::invalid_argument("omega_diag: n must be positive");
  std::vector<CycNumber> diag;
  for (std::size_t j = 0; j < n; ++j) diag.push_back(root_of_unity(static_cast<unsigned>(n), static_cast<long>(j)));
  return diagonal(diag);
}

CycMatrix fourier_matrix(std::size_t n) {
  if (n == 0) throw std::invalid_argument("fourier_matrix: n must be positive");
  CycMatrix out = zeros(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      out(j, k) = root_of_unity(static_cast<unsigned>(n), static_cast<long>((j * k) % n));
  return out;
}

CycMatrix b_from_hadamard(const CycMatrix& h) {
  if (!h.is_square() || h.rows() == 0) throw DimensionError("b_from_hadamard: h must be square");
  const std::size_t n = h.rows();
  const CycNumber scale(BigRational(1, static_cast<unsigned long>(n)));
  return scalar_mul(adjoint(h) * omega_diag(n) * h, scale);
}

CycMatrix b_hat(std::size_t n) {
  if (n < 1) throw std::invalid_argument("b_hat: n must be positive");
  CycMatrix out = zeros(n, n);
  for (std::size_t k = 0; k < n; ++k) out((k + 1) % n, k) = CycNumber(1);
  return out;
}

CycMatrix b_hat_hat(std::size_t n) {
  if (n < 1) throw std::invalid_argument("b_hat_hat: n must be positive");
  CycMatrix out = zeros(n, n);
  for (std::size_t j = 0; j < n; ++j) out(j, (j + 1) % n) = CycNumber(1);
  return out;
}

Permutation shift_reversal(std::size_t n) {
  std::vector<int> images(n);
  const int nn = static_cast<int>(n);
  for (int j = 0; j < nn; ++j) images[static_cast<std::size_t>(j)] = (((nn - 2 - j) % nn) + nn) % nn;
  return Permutation(std::move(images));
}

CycMatrix h4_family_at(const CycNumber& t) {
  if (!t.is_unimodular()) throw std::invalid_argument("h4_family_at: t is not unimodular: " + to_document_string(t));
  const CycNumber one(1), mone(-1);
  return CycMatrix::from_rows({{one, one, one, one},
                               {one, t, mone, -t},
                               {one, mone, one, mone},
                               {one, -t, mone, t}});
}

HadamardCheck check_complex_hadamard(const CycMatrix& h) {
  if (!h.is_square() || h.rows() == 0) return {false, "matrix is not square"};
  const std::size_t n = h.rows();
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (!h(r, c).is_unimodular())
        return {false, "entry (" + std::to_string(r) + "," + std::to_string(c) + ") is not unimodular"};
  const CycMatrix gram = h * adjoint(h);
  const CycNumber nn(static_cast<long>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = 0; s < n; ++s) {
      const CycNumber expected = r == s ? nn : CycNumber();
      if (!(gram(r, s) == expected))
        return {false, "rows " + std::to_string(r) + " and " + std::to_string(s) + " are not orthogonal"};
    }
  return {true, {}};
}

bool is_complex_hadamard(const CycMatrix& h) { return check_complex_hadamard(h).hadamard; }

namespace {

// ratio(j, k) must equal lambda_j * mu_k with mu_0 = 1.
template <class Ratio>
std::optional<std::pair<std::vector<CycNumber>, std::vector<CycNumber>>> solve_rank_one(std::size_t n,
                                                                                        Ratio ratio) {
  std::vector<CycNumber> lambda, mu;
  lambda.reserve(n);
  mu.reserve(n);
  for (std::size_t j = 0; j < n; ++j) lambda.push_back(ratio(j, 0));
  const CycNumber inv00 = lambda[0].inverse();
  for (std::size_t k = 0; k < n; ++k) mu.push_back(ratio(0, k) * inv00);
  for (const auto& v : lambda)
    if (!v.is_unimodular()) return std::nullopt;
  for (const auto& v : mu)
    if (!v.is_unimodular()) return std::nullopt;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t k = 1; k < n; ++k)
      if (!(ratio(j, k) == lambda[j] * mu[k])) return std::nullopt;
  return std::make_pair(std::move(lambda), std::move(mu));
}

}  // namespace

std::optional<std::pair<std::vector<CycNumber>, std::vector<CycNumber>>> rank_one_ratio(const CycMatrix& h2,
                                                                                        const CycMatrix& m) {
  if (!h2.is_square() || !(m.rows() == h2.rows() && m.cols() == h2.cols()))
    throw DimensionError("rank_one_ratio: shapes differ");
  for (const auto& e : m.entries())
    if (e.is_zero()) throw std::invalid_argument("rank_one_ratio: zero entry");
  return solve_rank_one(h2.rows(), [&](std::size_t j, std::size_t k) { return h2(j, k) / m(j, k); });
}

std::optional<SimilarityWitness> hadamard_similar(const CycMatrix& h1, const CycMatrix& h2) {
  if (!h1.is_square() || !(h1.rows() == h2.rows() && h1.cols() == h2.cols()))
    throw DimensionError("hadamard_similar: matrices must be square of equal size");
  const std::size_t n = h1.rows();
  if (n > 5) throw std::invalid_argument("hadamard_similar: search limited to n <= 5");
  CycMatrix inv = h1;
  for (auto& e : inv.entries()) {
    if (e.is_zero()) throw std::invalid_argument("hadamard_similar: h1 has a zero entry");
    e = e.inverse();
  }
  for (const auto& e : h2.entries())
    if (e.is_zero()) throw std::invalid_argument("hadamard_similar: h2 has a zero entry");
  const auto perms = enumerate_sn(n);
  for (const auto& p1 : perms) {
    const Permutation p1inv = inverse(p1);
    for (const auto& p2 : perms) {
      // (P1 h1 P2)_{jk} = h1_{p1^{-1}(j), p2(k)}
      auto ratio = [&](std::size_t j, std::size_t k) {
        return h2(j, k) * inv(static_cast<std::size_t>(p1inv(j)), static_cast<std::size_t>(p2(k)));
      };
      if (auto solved = solve_rank_one(n, ratio))
        return SimilarityWitness{p1, p2, std::move(solved->first), std::move(solved->second)};
    }
  }
  return std::nullopt;
}

std::optional<std::vector<CycNumber>> diagonal_conjugation(const CycMatrix& b1, const CycMatrix& b2) {
  if (!b1.is_square() || !(b1.rows() == b2.rows() && b1.cols() == b2.cols()))
    throw DimensionError("diagonal_conjugation: matrices must be square of equal size");
  const std::size_t n = b1.rows();
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      if (b1(j, k).is_zero() != b2(j, k).is_zero()) return std::nullopt;
  // (D^* b1 D)_{jk} = conj(d_j) b1_{jk} d_k = (d_k / d_j) b1_{jk} for unimodular d.
  std::vector<std::optional<CycNumber>> d(n);
  for (std::size_t root = 0; root < n; ++root) {
    if (d[root]) continue;
    d[root] = CycNumber(1);
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      const std::size_t j = queue.front();
      queue.pop_front();
      for (std::size_t k = 0; k < n; ++k) {
        if (!b1(j, k).is_zero() && !d[k]) {
          d[k] = *d[j] * (b2(j, k) / b1(j, k));
          queue.push_back(k);
        }
        if (!b1(k, j).is_zero() && !d[k]) {
          d[k] = *d[j] * (b1(k, j) / b2(k, j));
          queue.push_back(k);
        }
      }
    }
  }
  std::vector<CycNumber> out;
  for (auto& v : d) {
    if (!v->is_unimodular()) return std::nullopt;
    out.push_back(*v);
  }
  const CycMatrix dm = diagonal(out);
  if (!(adjoint(dm) * b1 * dm == b2)) return std::nullopt;
  return out;
}

TransitionCheck transition_check(const CycMatrix& h) {
  if (!h.is_square() || h.rows() == 0) throw DimensionError("transition_check: h must be square");
  const std::size_t n = h.rows();
  TransitionCheck out;
  const CycMatrix b = b_from_hadamard(h);
  const CycMatrix v = adjoint(h);
  const CycMatrix bv = b * v;
  for (std::size_t j = 0; j < n; ++j) {
    const CycNumber eigenvalue = root_of_unity(static_cast<unsigned>(n), static_cast<long>(j));
    for (std::size_t r = 0; r < n; ++r) {
      if (!(bv(r, j) == eigenvalue * v(r, j))) {
        out.failed_column = j;
        out.message = "column " + std::to_string(j) + " of adjoint(h) is not an eigenvector of B for zeta_" +
                      std::to_string(n) + "^" + std::to_string(j);
        return out;
      }
    }
  }
  out.eigen_verified = true;
  out.scaled_transition = v;
  const HadamardCheck had = check_complex_hadamard(v);
  out.hadamard = had.hadamard;
  out.message = had.hadamard ? "sqrt(n) * transition matrix is complex Hadamard" : had.witness;
  return out;
}

bool transition_is_hadamard(const CycMatrix& h) { return transition_check(h).ok(); }

}  // namespace specpencil
