#include "specpencil/search.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <thread>

namespace specpencil {

namespace {

constexpr std::size_t kChunk = 32;

// Evaluates fn(i) for i in [0, total) on `workers` threads and returns the
// results by index.  Indices never reached (after a stop) stay empty.
template <class T, class Fn>
std::vector<std::optional<T>> parallel_indexed(std::size_t total, unsigned workers, std::atomic<bool>& stop,
                                               const std::atomic<bool>* cancel, Fn fn) {
  std::vector<std::optional<T>> results(total);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    while (true) {
      const std::size_t begin = next.fetch_add(kChunk);
      if (begin >= total) return;
      const std::size_t end = std::min(total, begin + kChunk);
      for (std::size_t i = begin; i < end; ++i) {
        if (stop.load(std::memory_order_relaxed)) return;
        if (cancel && cancel->load(std::memory_order_relaxed)) {
          stop = true;
          return;
        }
        results[i] = fn(i);
      }
    }
  };
  workers = std::max(1u, workers);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  return results;
}

template <class T>
std::size_t completed_prefix(const std::vector<std::optional<T>>& results) {
  std::size_t k = 0;
  while (k < results.size() && results[k].has_value()) ++k;
  return k;
}

double elapsed_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

CycMatrix permuted_fourier_b(const Permutation& p1, const Permutation& p2) {
  const std::size_t n = p1.size();
  return b_from_hadamard(perm_matrix(p1) * fourier_matrix(n) * perm_matrix(p2));
}

MPoly permuted_fourier_spectrum(const Permutation& p1, const Permutation& p2) {
  const CycMatrix b = permuted_fourier_b(p1, p2);
  return joint_spectrum_poly(fourier_tuple(b, SurfaceKind::three_var), VarSet{Var::x, Var::y, Var::z});
}

ClassificationReport classify_permutation_pairs(unsigned n, const ScanOptions& options) {
  if (n != 4 && n != 5) throw std::invalid_argument("classify_permutation_pairs: n must be 4 or 5");
  const auto start = std::chrono::steady_clock::now();
  const auto perms = enumerate_sn(n);
  const std::size_t count = perms.size();
  std::vector<bool> affine(count);
  for (std::size_t i = 0; i < count; ++i) affine[i] = in_affine_group(perms[i]);

  const CycMatrix a = omega_diag(n);
  const CycMatrix f = fourier_matrix(n);
  const MPoly target = fourier_surface_3(n);
  const VarSet vars{Var::x, Var::y, Var::z};
  std::vector<CycMatrix> pm;
  for (const auto& p : perms) pm.push_back(perm_matrix(p));

  std::atomic<bool> stop{false};
  auto results = parallel_indexed<bool>(count * count, options.workers, stop, options.cancel, [&](std::size_t i) {
    const std::size_t i1 = i / count, i2 = i % count;
    const CycMatrix b = b_from_hadamard(pm[i1] * f * pm[i2]);
    const CycMatrix tuple[] = {a, b, a * b};
    const bool fourier = is_proportional(target, joint_spectrum_poly(tuple, vars));
    if (options.fail_fast && fourier != (affine[i1] || affine[i2])) stop = true;
    return fourier;
  });

  ClassificationReport report;
  report.n = n;
  report.pairs_total = count * count;
  report.pairs_scanned = completed_prefix(results);
  report.complete = report.pairs_scanned == report.pairs_total;
  bool agree = true;
  for (std::size_t i = 0; i < report.pairs_scanned; ++i) {
    const std::size_t i1 = i / count, i2 = i % count;
    const bool predicted = affine[i1] || affine[i2];
    if (*results[i]) report.fourier_pairs.emplace_back(perms[i1], perms[i2]);
    if (predicted) report.predicted.emplace_back(perms[i1], perms[i2]);
    if (predicted != *results[i]) agree = false;
  }
  report.match = report.complete && agree;
  report.elapsed_ms = elapsed_since(start);
  return report;
}

std::vector<std::pair<CycNumber, std::string>> roots_of_unity_samples(unsigned m) {
  std::vector<std::pair<CycNumber, std::string>> out;
  for (unsigned k = 0; k < m; ++k)
    out.emplace_back(root_of_unity(m, k), "zeta" + std::to_string(m) + "^" + std::to_string(k));
  return out;
}

namespace {

std::string sample_label(const CycNumber& t) {
  if (auto k = root_of_unity_exponent(t))
    return "zeta" + std::to_string(t.conductor()) + "^" + std::to_string(*k);
  return to_document_string(t);
}

}  // namespace

H4ScanReport scan_h4_family(std::span<const CycNumber> samples, const ScanOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  for (const auto& t : samples)
    if (!t.is_unimodular()) throw std::invalid_argument("scan_h4_family: sample is not unimodular: " + to_document_string(t));
  const auto perms = enumerate_sn(4);
  const std::size_t count = perms.size();
  const std::size_t per_sample = count * count;
  std::vector<bool> affine(count);
  for (std::size_t i = 0; i < count; ++i) affine[i] = in_affine_group(perms[i]);
  std::vector<CycMatrix> pm;
  for (const auto& p : perms) pm.push_back(perm_matrix(p));
  std::vector<CycMatrix> families;
  for (const auto& t : samples) families.push_back(h4_family_at(t));
  const CycMatrix a = omega_diag(4);
  const VarSet zvar{Var::z};

  std::atomic<bool> stop{false};
  auto results = parallel_indexed<CycNumber>(
      samples.size() * per_sample, options.workers, stop, options.cancel, [&](std::size_t i) {
        const std::size_t s = i / per_sample, rest = i % per_sample;
        const CycMatrix b = b_from_hadamard(pm[rest / count] * families[s] * pm[rest % count]);
        const CycMatrix ab[] = {a * b};
        const MPoly det = joint_spectrum_poly(ab, zvar);
        return coefficient_of(det, Var::z, 2).constant_term();
      });

  H4ScanReport report;
  const std::size_t scanned = completed_prefix(results);
  report.complete = scanned == results.size();
  const CycNumber i_unit = root_of_unity(4, 1);
  const CycNumber minus_i = root_of_unity(4, 3);
  bool consistent = true;
  for (std::size_t s = 0; s < samples.size(); ++s) {
    H4SampleResult r;
    r.t = samples[s];
    r.label = sample_label(samples[s]);
    r.expected_vanishing = samples[s] == i_unit || samples[s] == minus_i;
    bool equals_affine = true;
    for (std::size_t k = 0; k < per_sample; ++k) {
      const std::size_t i = s * per_sample + k;
      if (i >= scanned) break;
      ++r.pairs;
      if (results[i]->is_zero() != (affine[k / count] || affine[k % count])) equals_affine = false;
      if (results[i]->is_zero()) {
        ++r.vanishing_pairs;
      } else if (!r.first_nonzero) {
        r.first_nonzero = PermPair{perms[k / count], perms[k % count]};
        r.first_nonzero_coefficient = *results[i];
      }
    }
    r.all_vanish = r.pairs == per_sample && r.vanishing_pairs == r.pairs;
    r.vanishing_equals_affine = r.pairs == per_sample && equals_affine;
    if (r.pairs == per_sample) {
      if ((r.vanishing_pairs > 0) != r.expected_vanishing) consistent = false;
      if (r.expected_vanishing && !r.vanishing_equals_affine) consistent = false;
    }
    report.samples.push_back(std::move(r));
  }
  report.consistent = report.complete && consistent;
  report.minus_i_similar_to_f4 = hadamard_similar(h4_family_at(minus_i), fourier_matrix(4)).has_value();
  report.elapsed_ms = elapsed_since(start);
  return report;
}

bool Lemma41Report::all_passed() const {
  if (cases.empty()) return false;
  for (const auto& c : cases)
    if (!c.verified || !c.spectrum_fourier || !c.monomial_structure) return false;
  return true;
}

namespace {

// One nonzero per row and column, all equal to one n-th root of unity.
bool has_monomial_structure(const CycMatrix& b, unsigned n) {
  std::optional<CycNumber> value;
  for (std::size_t r = 0; r < b.rows(); ++r) {
    std::size_t in_row = 0, in_col = 0;
    for (std::size_t c = 0; c < b.cols(); ++c) {
      if (!b(r, c).is_zero()) {
        ++in_row;
        if (!value) value = b(r, c);
        if (!(b(r, c) == *value)) return false;
      }
      if (!b(c, r).is_zero()) ++in_col;
    }
    if (in_row != 1 || in_col != 1) return false;
  }
  return value && pow(*value, n).is_one();
}

bool is_permuted_omega_diag(const CycMatrix& d, const CycMatrix& p) {
  return d == adjoint(p) * omega_diag(d.rows()) * p;
}

// multiplication j -> q*j mod n
Permutation scale_perm(std::size_t n, int q) { return affine_perm(n, q, 0); }

}  // namespace

Lemma41Report verify_lemma_4_1_equivalences(unsigned n, std::size_t random_partners, std::uint64_t seed) {
  if (n < 2 || n > 6) throw std::invalid_argument("verify_lemma_4_1_equivalences: n must be in 2..6");
  Lemma41Report report;
  report.n = n;
  std::mt19937_64 rng(seed);
  auto random_perm = [&] {
    std::vector<int> images(n);
    for (unsigned j = 0; j < n; ++j) images[j] = static_cast<int>(j);
    std::shuffle(images.begin(), images.end(), rng);
    return Permutation(std::move(images));
  };
  const auto group = affine_group(n);
  const auto all = enumerate_sn(n);
  const CycMatrix f = fourier_matrix(n);
  const CycMatrix fstar = adjoint(f);
  const CycMatrix bhat = b_hat(n);
  const CycNumber inv_n(BigRational(1, n));
  const MPoly target = fourier_surface_3(n);
  const VarSet vars{Var::x, Var::y, Var::z};

  auto spectrum_ok = [&](const CycMatrix& b) {
    return is_proportional(target, joint_spectrum_poly(fourier_tuple(b, SurfaceKind::three_var), vars));
  };

  for (const auto& g : group) {
    std::vector<Permutation> partners{identity_perm(n)};
    for (std::size_t k = 0; k < random_partners; ++k) partners.push_back(random_perm());

    for (const auto& other : partners) {
      // Kind a: P1 = g.  The entry formula sums over P1^{-1}, whose affine
      // data (q, m) drives the recipe P(s) = q * P2(s) mod n.
      {
        Lemma41Case c;
        c.kind = 'a';
        c.p1 = g;
        c.p2 = other;
        c.affine = *affine_witness(inverse(g));
        const CycMatrix b = permuted_fourier_b(c.p1, c.p2);
        c.monomial_structure = has_monomial_structure(b, n);
        auto try_witness = [&](const Permutation& p) -> bool {
          const CycMatrix pm = perm_matrix(p);
          if (auto lambda = diagonal_conjugation(adjoint(pm) * bhat * pm, b)) {
            for (const auto& l : *lambda)
              if (!pow(l, n).is_one()) return false;
            c.witness = p;
            c.lambda = std::move(*lambda);
            return true;
          }
          return false;
        };
        const Permutation recipe = compose(scale_perm(n, c.affine.q), other);
        c.recipe_witness = try_witness(recipe);
        c.verified = c.recipe_witness;
        for (std::size_t k = 0; !c.verified && k < all.size(); ++k) c.verified = try_witness(all[k]);
        c.spectrum_fourier = spectrum_ok(b);
        report.cases.push_back(std::move(c));
      }
      // Kind b: P2 = g; B(P1, P2) = B(P1 o q^{-1}, I).
      {
        Lemma41Case c;
        c.kind = 'b';
        c.p1 = other;
        c.p2 = g;
        c.affine = *affine_witness(g);
        const CycMatrix b = permuted_fourier_b(c.p1, c.p2);
        auto try_witness = [&](const Permutation& p) -> bool {
          if (!(b == b_from_hadamard(perm_matrix(p) * f))) return false;
          // conjugation by F_n^*/sqrt(n) sends A to b_hat_hat and B to a permuted A
          const CycMatrix d = scalar_mul(f * b * fstar, inv_n);
          const CycMatrix pa = scalar_mul(f * omega_diag(n) * fstar, inv_n);
          if (!(pa == b_hat_hat(n))) return false;
          if (!is_permuted_omega_diag(d, perm_matrix(p))) return false;
          c.witness = p;
          return true;
        };
        int q_inv = 1;
        while ((q_inv * c.affine.q) % static_cast<int>(n) != 1) ++q_inv;
        const Permutation recipe = compose(other, scale_perm(n, q_inv));
        c.recipe_witness = try_witness(recipe);
        c.verified = c.recipe_witness;
        for (std::size_t k = 0; !c.verified && k < all.size(); ++k) c.verified = try_witness(all[k]);
        c.spectrum_fourier = spectrum_ok(b);
        report.cases.push_back(std::move(c));
      }
    }
  }
  return report;
}

}  // namespace specpencil
