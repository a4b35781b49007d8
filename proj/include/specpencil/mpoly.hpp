// Sparse multivariate polynomials over cyclotomic numbers.
#pragma once

#include "specpencil/cycfield.hpp"

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace specpencil {

/// Variable names in their fixed global order x < y < z < z1 < z2.
enum class Var : std::uint8_t { x, y, z, z1, z2 };

std::string_view var_name(Var v);
std::optional<Var> parse_var(std::string_view name);

class VarSetMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnknownVariable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Strictly increasing list of variables.
class VarSet {
 public:
  VarSet() = default;
  VarSet(std::initializer_list<Var> vars);
  explicit VarSet(std::vector<Var> vars);
  /// "x,y,z" or "x y z"
  static VarSet parse(std::string_view text);
  /// Default choice for k matrices: x | x,y | x,y,z | x,y,z1,z2 | x,y,z,z1,z2.
  static VarSet for_count(std::size_t k);

  std::size_t size() const { return vars_.size(); }
  bool empty() const { return vars_.empty(); }
  Var operator[](std::size_t i) const { return vars_[i]; }
  std::optional<std::size_t> index_of(Var v) const;
  bool contains(Var v) const { return index_of(v).has_value(); }
  VarSet without(Var v) const;
  auto begin() const { return vars_.begin(); }
  auto end() const { return vars_.end(); }
  std::string to_string() const;

  friend bool operator==(const VarSet&, const VarSet&) = default;

 private:
  std::vector<Var> vars_;
};

using Exponents = std::vector<unsigned>;

namespace detail {

// Monomials are packed into one word: total degree in the top 8 bits, then
// one 11-bit slot per variable position, first variable most significant.
// Unsigned comparison of packed words is graded-lex order.
constexpr unsigned kMaxVars = 5;
constexpr unsigned kSlotBits = 11;
constexpr unsigned kMaxDegree = 255;

std::uint64_t pack_monomial(const Exponents& e);
Exponents unpack_monomial(std::uint64_t key, std::size_t nvars);
unsigned monomial_degree(std::uint64_t key);
unsigned monomial_exponent(std::uint64_t key, std::size_t position);
std::uint64_t multiply_monomials(std::uint64_t a, std::uint64_t b);

}  // namespace detail

class MPoly {
 public:
  using Key = std::uint64_t;
  using TermMap = std::map<Key, CycNumber, std::greater<>>;

  struct Term {
    Exponents exponents;
    CycNumber coeff;
  };

  explicit MPoly(VarSet vars = {});
  static MPoly constant(VarSet vars, const CycNumber& c);
  static MPoly variable(VarSet vars, Var v);
  static MPoly monomial(VarSet vars, const Exponents& e, const CycNumber& c);

  const VarSet& vars() const { return vars_; }
  /// Terms in descending graded-lex order.
  std::vector<Term> terms() const;
  const TermMap& term_map() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  CycNumber constant_term() const;
  /// -1 for the zero polynomial.
  int total_degree() const;
  unsigned degree_in(Var v) const;
  CycNumber coefficient(const Exponents& e) const;
  /// Least common multiple of coefficient conductors (1 for zero).
  unsigned conductor() const;
  MPoly with_conductor(unsigned m) const;

  void add_term(const Exponents& e, const CycNumber& c);
  /// this += (negate ? -1 : 1) * a * b
  void add_product(const MPoly& a, const MPoly& b, bool negate = false);

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& rhs);
  MPoly& operator-=(const MPoly& rhs);
  MPoly& operator*=(const MPoly& rhs);
  MPoly& operator*=(const CycNumber& c);

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const CycNumber& c) { return a *= c; }
  friend MPoly operator*(const CycNumber& c, MPoly a) { return a *= c; }
  friend bool operator==(const MPoly& a, const MPoly& b);

 private:
  void require_same_vars(const MPoly& other, const char* op) const;
  void accumulate(Key key, const CycNumber& c);

  VarSet vars_;
  TermMap terms_;
};

MPoly scalar_mul(const MPoly& p, const CycNumber& c);
MPoly pow(const MPoly& p, unsigned exponent);

/// The polynomial in the remaining variables multiplying v^d.
MPoly coefficient_of(const MPoly& p, Var v, unsigned d);

/// Exact evaluation of v at c; v is dropped from the variable set.
MPoly substitute(const MPoly& p, Var v, const CycNumber& c);

/// Returns c with q == c * p, c != 0, if it exists.  Zero is proportional
/// only to zero (ratio 1).
std::optional<CycNumber> proportionality_ratio(const MPoly& p, const MPoly& q);
bool is_proportional(const MPoly& p, const MPoly& q);

/// Canonical text, e.g. "x^3 + y^3 + z^3 - 1"; non-rational coefficients
/// render as "(a + b*w^k)" with w = zeta_conductor.
std::string to_string(const MPoly& p, unsigned conductor);
std::string to_string(const MPoly& p);

}  // namespace specpencil
