#include "specpencil/matrix.hpp"

#include <sstream>

namespace specpencil {

CycMatrix identity(std::size_t n) {
  CycMatrix out(n, n, CycNumber());
  for (std::size_t i = 0; i < n; ++i) out(i, i) = CycNumber(1);
  return out;
}

CycMatrix zeros(std::size_t rows, std::size_t cols) { return CycMatrix(rows, cols, CycNumber()); }

CycMatrix diagonal(std::span<const CycNumber> diag) {
  CycMatrix out(diag.size(), diag.size(), CycNumber());
  for (std::size_t i = 0; i < diag.size(); ++i) out(i, i) = diag[i];
  return out;
}

PolyMatrix identity(std::size_t n, const VarSet& vars) { return lift(identity(n), vars); }

CycMatrix adjoint(const CycMatrix& m) {
  std::vector<CycNumber> out;
  out.reserve(m.rows() * m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(m(r, c).conjugate());
  return CycMatrix(m.cols(), m.rows(), std::move(out));
}

PolyMatrix adjoint(const PolyMatrix& m) {
  if (!is_constant(m)) throw std::invalid_argument("adjoint: matrix has non-constant entries");
  const VarSet vars = m.entries().empty() ? VarSet{} : m(0, 0).vars();
  return lift(adjoint(to_constant(m)), vars);
}

bool is_constant(const PolyMatrix& m) {
  for (const auto& e : m.entries())
    if (!e.is_constant()) return false;
  return true;
}

PolyMatrix lift(const CycMatrix& m, const VarSet& vars) {
  std::vector<MPoly> out;
  out.reserve(m.rows() * m.cols());
  for (const auto& c : m.entries()) out.push_back(MPoly::constant(vars, c));
  return PolyMatrix(m.rows(), m.cols(), std::move(out));
}

CycMatrix to_constant(const PolyMatrix& m) {
  std::vector<CycNumber> out;
  out.reserve(m.rows() * m.cols());
  for (const auto& e : m.entries()) {
    if (!e.is_constant()) throw std::invalid_argument("matrix entry is not constant: " + to_string(e));
    out.push_back(e.constant_term());
  }
  return CycMatrix(m.rows(), m.cols(), std::move(out));
}

unsigned conductor(const CycMatrix& m) {
  unsigned c = 1;
  for (const auto& e : m.entries()) c = lcm_conductor(c, e.conductor());
  return c;
}

unsigned conductor(const PolyMatrix& m) {
  unsigned c = 1;
  for (const auto& e : m.entries()) c = lcm_conductor(c, e.conductor());
  return c;
}

CycMatrix with_conductor(const CycMatrix& m, unsigned c) {
  std::vector<CycNumber> out;
  out.reserve(m.rows() * m.cols());
  for (const auto& e : m.entries()) out.push_back(e.promote(c));
  return CycMatrix(m.rows(), m.cols(), std::move(out));
}

PolyMatrix with_conductor(const PolyMatrix& m, unsigned c) {
  std::vector<MPoly> out;
  out.reserve(m.rows() * m.cols());
  for (const auto& e : m.entries()) out.push_back(e.with_conductor(c));
  return PolyMatrix(m.rows(), m.cols(), std::move(out));
}

PolyMatrix pencil(std::span<const CycMatrix> coeffs, const VarSet& vars) {
  if (coeffs.size() != vars.size())
    throw DimensionError("pencil: " + std::to_string(coeffs.size()) + " matrices for " +
                         std::to_string(vars.size()) + " variables");
  if (coeffs.empty()) throw DimensionError("pencil: no matrices");
  const std::size_t n = coeffs.front().rows();
  unsigned m = 1;
  for (const auto& a : coeffs) {
    if (!a.is_square() || a.rows() != n)
      throw DimensionError("pencil: all matrices must be square of size " + std::to_string(n));
    m = lcm_conductor(m, conductor(a));
  }
  std::vector<MPoly> entries;
  entries.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      MPoly e(vars);
      for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const CycNumber& a = coeffs[i](r, c);
        if (a.is_zero()) continue;
        Exponents exps(vars.size());
        exps[i] = 1;
        e.add_term(exps, a.promote(m));
      }
      if (r == c) e.add_term(Exponents(vars.size()), CycNumber(-1).promote(m));
      entries.push_back(std::move(e));
    }
  return PolyMatrix(n, n, std::move(entries));
}

namespace {

template <class Scalar, class Render>
std::string render_rows(const Matrix<Scalar>& m, Render render) {
  std::ostringstream os;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << "[";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) os << ", ";
      os << render(m(r, c));
    }
    os << "]\n";
  }
  return os.str();
}

}  // namespace

std::string to_string(const CycMatrix& m) {
  const unsigned c = conductor(m);
  return "conductor " + std::to_string(c) + "\n" +
         render_rows(m, [c](const CycNumber& e) { return to_string(e, c); });
}

std::string to_string(const PolyMatrix& m) {
  const unsigned c = conductor(m);
  return "conductor " + std::to_string(c) + "\n" +
         render_rows(m, [c](const MPoly& e) { return to_string(e, c); });
}

}  // namespace specpencil
