#include "specpencil/spectra.hpp"

namespace specpencil {

MPoly joint_spectrum_poly(std::span<const CycMatrix> matrices, const VarSet& vars) {
  return determinant(pencil(matrices, vars));
}

namespace {

CycNumber sign_power(unsigned n) { return CycNumber((n % 2 == 1) ? 1L : -1L); }  // (-1)^{n-1}

}  // namespace

MPoly fourier_surface_3(unsigned n) {
  if (n == 0) throw std::invalid_argument("fourier_surface_3: n must be positive");
  const VarSet vars{Var::x, Var::y, Var::z};
  MPoly p = MPoly::monomial(vars, {n, 0, 0}, CycNumber(1));
  p.add_term({0, n, 0}, CycNumber(1));
  p.add_term({0, 0, n}, sign_power(n));
  p.add_term({0, 0, 0}, CycNumber(-1));
  return p;
}

MPoly fourier_surface_4(unsigned n) {
  if (n == 0) throw std::invalid_argument("fourier_surface_4: n must be positive");
  const VarSet vars{Var::x, Var::y, Var::z1, Var::z2};
  const MPoly linear = scalar_mul(MPoly::variable(vars, Var::z1), root_of_unity(n, 1)) +
                       MPoly::variable(vars, Var::z2);
  MPoly p = scalar_mul(pow(linear, n), sign_power(n));
  p.add_term({n, 0, 0, 0}, CycNumber(1));
  p.add_term({0, n, 0, 0}, CycNumber(1));
  p.add_term({0, 0, 0, 0}, CycNumber(-1));
  return p;
}

SpectrumReport is_fourier_spectrum(std::span<const CycMatrix> matrices, const VarSet& vars, unsigned n,
                                   SurfaceKind which, std::string description) {
  SpectrumReport report;
  report.description = std::move(description);
  report.computed = joint_spectrum_poly(matrices, vars);
  report.target = which == SurfaceKind::three_var ? fourier_surface_3(n) : fourier_surface_4(n);
  report.ratio = proportionality_ratio(report.target, report.computed);
  report.proportional = report.ratio.has_value() && !report.computed.is_zero();
  report.degree_matches = report.computed.total_degree() == static_cast<int>(n);
  return report;
}

std::vector<CycMatrix> fourier_tuple(const CycMatrix& b, SurfaceKind which) {
  const CycMatrix a = omega_diag(b.rows());
  std::vector<CycMatrix> tuple{a, b, a * b};
  if (which == SurfaceKind::four_var) tuple.push_back(b * a);
  return tuple;
}

SpectrumReport fourier_pair_spectrum(unsigned n, SurfaceKind which) {
  const auto tuple = fourier_tuple(b_hat(n), which);
  const VarSet vars = which == SurfaceKind::three_var ? VarSet{Var::x, Var::y, Var::z}
                                                      : VarSet{Var::x, Var::y, Var::z1, Var::z2};
  const std::string desc = which == SurfaceKind::three_var ? "(A, B, AB) with B = b_hat(" + std::to_string(n) + ")"
                                                           : "(A, B, AB, BA) with B = b_hat(" + std::to_string(n) + ")";
  return is_fourier_spectrum(tuple, vars, n, which, desc);
}

CycMatrix projection_P0(std::size_t n) {
  if (n < 1) throw std::invalid_argument("projection_P0: n must be positive");
  CycMatrix p = zeros(n, n);
  p(0, 0) = CycNumber(1);
  return p;
}

CycMatrix resolvent_T(std::size_t n) {
  if (n < 1) throw std::invalid_argument("resolvent_T: n must be positive");
  std::vector<CycNumber> diag{CycNumber()};
  for (std::size_t j = 1; j < n; ++j)
    diag.push_back((root_of_unity(static_cast<unsigned>(n), static_cast<long>(j)) - CycNumber(1)).inverse());
  return diagonal(diag);
}

bool RelationReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return !checks.empty();
}

RelationReport verify_moment_relations(const CycMatrix& b, unsigned n) {
  if (!b.is_square() || b.rows() != n) throw DimensionError("verify_moment_relations: B must be n x n");
  RelationReport report;
  report.n = n;
  const CycMatrix a = omega_diag(n);
  const CycMatrix p0 = projection_P0(n);
  const CycMatrix t = resolvent_T(n);
  const CycMatrix id = identity(n);
  const CycMatrix zero = zeros(n, n);
  const CycMatrix ab = a * b;
  const CycNumber inv_n(BigRational(1, n));
  auto check = [&](std::string name, const CycMatrix& lhs, const CycMatrix& rhs) {
    report.checks.push_back({std::move(name), lhs == rhs});
  };

  // P0 (BT)^k B P0 and P0 (ABT)^k AB P0
  const CycMatrix bt = b * t;
  const CycMatrix abt = ab * t;
  CycMatrix bt_pow = id, abt_pow = id;
  for (unsigned k = 0; k < n; ++k) {
    const bool last = k == n - 1;
    const std::string kk = std::to_string(k);
    check("P0 (BT)^" + kk + " B P0 = " + (last ? "(-1)^(n-1)/n P0" : "0"), p0 * bt_pow * b * p0,
          last ? scalar_mul(p0, sign_power(n) * inv_n) : zero);
    check("P0 (ABT)^" + kk + " AB P0 = " + (last ? "1/n P0" : "0"), p0 * abt_pow * ab * p0,
          last ? scalar_mul(p0, inv_n) : zero);
    bt_pow = bt_pow * bt;
    abt_pow = abt_pow * abt;
  }

  // P0 B^k P0
  CycMatrix b_pow = id;
  for (unsigned k = 1; k <= n; ++k) {
    b_pow = b_pow * b;
    const bool last = k == n;
    check("P0 B^" + std::to_string(k) + " P0 = " + (last ? "P0" : "0"), p0 * b_pow * p0, last ? p0 : zero);
  }
  report.checks.push_back({"<B^n e0, e0> = 1", b_pow(0, 0) == CycNumber(1)});

  // P0 B^r AB P0
  b_pow = id;
  for (unsigned r = 1; r + 1 <= n; ++r) {
    b_pow = b_pow * b;
    const bool last = r == n - 1;
    check("P0 B^" + std::to_string(r) + " AB P0 = " + (last ? "zeta_n P0" : "0"), p0 * b_pow * ab * p0,
          last ? scalar_mul(p0, root_of_unity(n, 1)) : zero);
  }

  check("AT = I - P0 + T", a * t, id - p0 + t);
  check("TA = I - P0 + T", t * a, id - p0 + t);
  return report;
}

bool CounterexampleReport::passed() const {
  for (const auto& r : relations)
    if (!r.passed) return false;
  return !relations.empty() && spectra_match_target && !diagonal_conjugation_found;
}

CounterexampleReport verify_counterexample_27() {
  CounterexampleReport report;
  const CycMatrix a = omega_diag(3);
  const CycMatrix id = identity(3);
  const std::pair<std::string, CycMatrix> pairs[] = {{"b_hat_hat(3)", b_hat_hat(3)}, {"b_hat(3)", b_hat(3)}};
  for (const auto& [label, b] : pairs) {
    auto check = [&](const std::string& name, const CycMatrix& g) {
      report.relations.push_back({"B = " + label + ": " + name + " = I", matrix_pow(g, 3) == id});
    };
    check("A^3", a);
    check("B^3", b);
    check("(AB)^3", a * b);
    check("(AB^2)^3", a * b * b);
  }
  const VarSet vars{Var::x, Var::y};
  const CycMatrix hat_pair[] = {a, b_hat(3)};
  const CycMatrix hat_hat_pair[] = {a, b_hat_hat(3)};
  report.spectrum_hat = joint_spectrum_poly(hat_pair, vars);
  report.spectrum_hat_hat = joint_spectrum_poly(hat_hat_pair, vars);
  MPoly target = MPoly::monomial(vars, {3, 0}, CycNumber(1));
  target.add_term({0, 3}, CycNumber(1));
  target.add_term({0, 0}, CycNumber(-1));
  report.spectra_match_target =
      is_proportional(target, report.spectrum_hat) && is_proportional(target, report.spectrum_hat_hat);
  report.diagonal_conjugation_found = diagonal_conjugation(b_hat(3), b_hat_hat(3)).has_value() ||
                                      diagonal_conjugation(b_hat_hat(3), b_hat(3)).has_value();
  report.inequivalence_scope =
      "checked: no unimodular diagonal D (the unitaries commuting with A) satisfies D^* B1 D = B2 "
      "in either direction; general unitary inequivalence is not tested";
  return report;
}

}  // namespace specpencil
