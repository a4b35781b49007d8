// Exact arithmetic in cyclotomic fields Q(zeta_m).
//
// A CycNumber is stored in canonical form modulo the m-th cyclotomic
// polynomial: an integer coefficient vector of length phi(m) over a single
// positive denominator, with gcd(den, all numerators) = 1.  Zero testing is
// therefore a coefficient check.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace specpencil {

using BigInt = mpz_class;
using BigRational = mpq_class;

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

unsigned euler_phi(unsigned m);
unsigned lcm_conductor(unsigned a, unsigned b);

/// Coefficients of the monic m-th cyclotomic polynomial, lowest degree first.
std::vector<BigRational> cyclotomic_polynomial(unsigned m);

namespace detail {

// Per-conductor data shared by every CycNumber of that conductor.  Built
// once and never freed; lookups are thread-safe.
struct CyclotomicField {
  unsigned conductor = 1;
  unsigned degree = 1;  // phi(conductor)
  std::vector<BigInt> modulus;  // Phi_m, lowest degree first, length degree+1
  // powers[k] = zeta^k reduced, k in [0, conductor), each of length degree.
  std::vector<std::vector<long>> powers;
};

const CyclotomicField& field(unsigned m);

}  // namespace detail

class CycNumber {
 public:
  CycNumber();
  CycNumber(long value);  // NOLINT(google-explicit-constructor)
  explicit CycNumber(const BigRational& value);

  /// Element sum_k coeffs[k] * zeta_m^k; any length, reduced on entry.
  static CycNumber from_coefficients(unsigned m, std::span<const BigRational> coeffs);

  unsigned conductor() const { return field_->conductor; }
  unsigned degree() const { return field_->degree; }

  /// Canonical coefficient vector, length phi(conductor).
  std::vector<BigRational> coefficients() const;
  BigRational coefficient(std::size_t k) const;
  const std::vector<BigInt>& numerators() const { return num_; }
  const BigInt& denominator() const { return den_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  std::optional<BigRational> to_rational() const;
  /// Number of nonzero canonical coefficients.
  std::size_t support_size() const;

  /// Same element at conductor m2; requires conductor() | m2.
  CycNumber promote(unsigned m2) const;
  /// zeta -> zeta^{-1}; complex conjugation under every embedding.
  CycNumber conjugate() const;
  CycNumber inverse() const;
  /// a * conj(a) == 1
  bool is_unimodular() const;

  CycNumber operator-() const;
  CycNumber& operator+=(const CycNumber& rhs);
  CycNumber& operator-=(const CycNumber& rhs);
  CycNumber& operator*=(const CycNumber& rhs);
  CycNumber& operator/=(const CycNumber& rhs);

  friend CycNumber operator+(CycNumber a, const CycNumber& b) { return a += b; }
  friend CycNumber operator-(CycNumber a, const CycNumber& b) { return a -= b; }
  friend CycNumber operator*(const CycNumber& a, const CycNumber& b);
  friend CycNumber operator/(CycNumber a, const CycNumber& b) { return a /= b; }
  friend bool operator==(const CycNumber& a, const CycNumber& b);

  /// Computes acc += sign * a * b with all three at one conductor.
  friend void fused_multiply_add(CycNumber& acc, const CycNumber& a, const CycNumber& b,
                                 bool negate);

 private:
  CycNumber(const detail::CyclotomicField* f, std::vector<BigInt> num, BigInt den);
  void normalize();
  void scale_rational(const BigInt& num, const BigInt& den);

  const detail::CyclotomicField* field_;
  std::vector<BigInt> num_;
  BigInt den_;
};

/// zeta_m^(k mod m)
CycNumber root_of_unity(unsigned m, long k);

CycNumber pow(const CycNumber& base, unsigned exponent);

/// Brings both operands to their least common conductor.
void unify_conductors(CycNumber& a, CycNumber& b);

/// If the value equals zeta_m^k at its own conductor m, returns k.  For odd m
/// the values -zeta_m^k are not matched.
std::optional<unsigned> root_of_unity_exponent(const CycNumber& value);

/// Rendering with w standing for zeta_m, e.g. "1/5 + 2/5*w^3".
/// The value is first promoted to `conductor` (must be a multiple of its own).
std::string to_string(const CycNumber& value, unsigned conductor);
std::string to_string(const CycNumber& value);
/// Full text including the conductor announcement, "conductor 5: 1/5 + 2/5*w^3".
std::string to_document_string(const CycNumber& value);

/// Optional diagnostic: evaluation at zeta_m = exp(2 pi i / m).
struct ComplexApprox {
  double re;
  double im;
};
ComplexApprox approximate(const CycNumber& value);

}  // namespace specpencil
