#include "specpencil/cycfield.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>

namespace specpencil {

unsigned euler_phi(unsigned m) {
  if (m == 0) throw std::invalid_argument("euler_phi: m must be positive");
  unsigned result = m;
  unsigned rest = m;
  for (unsigned p = 2; p * p <= rest; ++p) {
    if (rest % p == 0) {
      while (rest % p == 0) rest /= p;
      result -= result / p;
    }
  }
  if (rest > 1) result -= result / rest;
  return result;
}

unsigned lcm_conductor(unsigned a, unsigned b) { return std::lcm(a, b); }

namespace detail {
namespace {

using IntPoly = std::vector<BigInt>;

// Exact division by a monic polynomial; the remainder must vanish.
IntPoly divide_exact(IntPoly num, const IntPoly& den) {
  const std::size_t dd = den.size() - 1;
  if (num.size() <= dd) throw std::logic_error("cyclotomic division underflow");
  IntPoly quot(num.size() - dd);
  for (std::size_t k = num.size(); k-- > dd;) {
    const BigInt c = num[k];
    quot[k - dd] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) num[k - dd + j] -= c * den[j];
  }
  for (const auto& r : num)
    if (r != 0) throw std::logic_error("cyclotomic division left a remainder");
  return quot;
}

std::recursive_mutex& cache_mutex() {
  static std::recursive_mutex mu;
  return mu;
}

std::map<unsigned, std::unique_ptr<CyclotomicField>>& cache() {
  static std::map<unsigned, std::unique_ptr<CyclotomicField>> fields;
  return fields;
}

std::unique_ptr<CyclotomicField> build_field(unsigned m) {
  auto f = std::make_unique<CyclotomicField>();
  f->conductor = m;
  // x^m - 1 divided by Phi_d for every proper divisor d.
  IntPoly poly(m + 1);
  poly[0] = -1;
  poly[m] = 1;
  for (unsigned d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    poly = divide_exact(std::move(poly), field(d).modulus);
  }
  f->modulus = std::move(poly);
  f->degree = static_cast<unsigned>(f->modulus.size() - 1);
  if (f->degree != euler_phi(m)) throw std::logic_error("cyclotomic degree mismatch");

  const unsigned d = f->degree;
  std::vector<BigInt> cur(d);
  cur[0] = 1;
  f->powers.reserve(m);
  for (unsigned k = 0; k < m; ++k) {
    std::vector<long> row(d);
    for (unsigned i = 0; i < d; ++i) {
      if (!cur[i].fits_slong_p()) throw std::overflow_error("cyclotomic power table overflow");
      row[i] = cur[i].get_si();
    }
    f->powers.push_back(std::move(row));
    // cur *= x, reduce with the monic modulus
    BigInt top = cur[d - 1];
    for (unsigned i = d - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0)
      for (unsigned i = 0; i < d; ++i) cur[i] -= top * f->modulus[i];
  }
  return f;
}

}  // namespace

const CyclotomicField& field(unsigned m) {
  if (m == 0) throw std::invalid_argument("conductor must be positive");
  std::lock_guard lock(cache_mutex());
  auto& fields = cache();
  auto it = fields.find(m);
  if (it != fields.end()) return *it->second;
  auto built = build_field(m);
  auto [pos, inserted] = fields.emplace(m, std::move(built));
  return *pos->second;
}

}  // namespace detail

std::vector<BigRational> cyclotomic_polynomial(unsigned m) {
  const auto& f = detail::field(m);
  std::vector<BigRational> out;
  out.reserve(f.modulus.size());
  for (const auto& c : f.modulus) out.emplace_back(c);
  return out;
}

// ---------------------------------------------------------------------------

CycNumber::CycNumber() : field_(&detail::field(1)), num_(1), den_(1) {}

CycNumber::CycNumber(long value) : field_(&detail::field(1)), num_{BigInt(value)}, den_(1) {}

CycNumber::CycNumber(const BigRational& value)
    : field_(&detail::field(1)), num_{value.get_num()}, den_(value.get_den()) {
  normalize();  // mpq values built without canonicalize() may be unreduced
}

CycNumber::CycNumber(const detail::CyclotomicField* f, std::vector<BigInt> num, BigInt den)
    : field_(f), num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

CycNumber CycNumber::from_coefficients(unsigned m, std::span<const BigRational> coeffs) {
  const auto* f = &detail::field(m);
  BigInt den = 1;
  for (const auto& c : coeffs) den = lcm(den, BigInt(c.get_den()));
  std::vector<BigInt> num(f->degree);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0) continue;
    const BigInt scaled = coeffs[k].get_num() * (den / coeffs[k].get_den());
    const auto& row = f->powers[k % m];
    for (unsigned i = 0; i < f->degree; ++i)
      if (row[i] != 0) num[i] += scaled * row[i];
  }
  return CycNumber(f, std::move(num), std::move(den));
}

void CycNumber::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;
  }
  if (den_ == 0) throw DivisionByZero("zero denominator");
  bool all_zero = true;
  for (const auto& c : num_)
    if (c != 0) {
      all_zero = false;
      break;
    }
  if (all_zero) {
    den_ = 1;
    return;
  }
  if (den_ == 1) return;
  BigInt g = den_;
  for (const auto& c : num_) {
    if (c == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) return;
  }
  for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
}

std::vector<BigRational> CycNumber::coefficients() const {
  std::vector<BigRational> out;
  out.reserve(num_.size());
  for (const auto& c : num_) {
    BigRational q(c, den_);
    q.canonicalize();
    out.push_back(std::move(q));
  }
  return out;
}

BigRational CycNumber::coefficient(std::size_t k) const {
  if (k >= num_.size()) return 0;
  BigRational q(num_[k], den_);
  q.canonicalize();
  return q;
}

bool CycNumber::is_zero() const {
  for (const auto& c : num_)
    if (c != 0) return false;
  return true;
}

bool CycNumber::is_one() const { return is_rational() && num_[0] == 1 && den_ == 1; }

bool CycNumber::is_rational() const {
  for (std::size_t i = 1; i < num_.size(); ++i)
    if (num_[i] != 0) return false;
  return true;
}

std::optional<BigRational> CycNumber::to_rational() const {
  if (!is_rational()) return std::nullopt;
  BigRational q(num_[0], den_);
  q.canonicalize();
  return q;
}

std::size_t CycNumber::support_size() const {
  std::size_t n = 0;
  for (const auto& c : num_)
    if (c != 0) ++n;
  return n;
}

CycNumber CycNumber::promote(unsigned m2) const {
  const unsigned m = conductor();
  if (m2 == 0 || m2 % m != 0)
    throw std::invalid_argument("promote: conductor " + std::to_string(m) +
                                " does not divide " + std::to_string(m2));
  if (m2 == m) return *this;
  const auto* f = &detail::field(m2);
  const unsigned step = m2 / m;
  std::vector<BigInt> num(f->degree);
  for (std::size_t k = 0; k < num_.size(); ++k) {
    if (num_[k] == 0) continue;
    const auto& row = f->powers[(k * step) % m2];
    for (unsigned i = 0; i < f->degree; ++i)
      if (row[i] != 0) num[i] += num_[k] * row[i];
  }
  return CycNumber(f, std::move(num), den_);
}

CycNumber CycNumber::conjugate() const {
  const unsigned m = conductor();
  if (m <= 2) return *this;
  std::vector<BigInt> num(num_.size());
  for (std::size_t k = 0; k < num_.size(); ++k) {
    if (num_[k] == 0) continue;
    const auto& row = field_->powers[(m - k) % m];
    for (std::size_t i = 0; i < num.size(); ++i)
      if (row[i] != 0) num[i] += num_[k] * row[i];
  }
  return CycNumber(field_, std::move(num), den_);
}

namespace {

using RatPoly = std::vector<BigRational>;

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Returns (quotient, remainder); divisor must be nonzero and trimmed.
std::pair<RatPoly, RatPoly> divmod(RatPoly num, const RatPoly& den) {
  trim(num);
  if (num.size() < den.size()) return {RatPoly{}, num};
  RatPoly quot(num.size() - den.size() + 1);
  const BigRational& lead = den.back();
  for (std::size_t k = num.size(); k-- >= den.size();) {
    if (num[k] == 0) continue;
    const BigRational c = num[k] / lead;
    const std::size_t shift = k - (den.size() - 1);
    quot[shift] = c;
    for (std::size_t j = 0; j < den.size(); ++j) num[shift + j] -= c * den[j];
  }
  trim(num);
  return {quot, num};
}

RatPoly sub_mul(const RatPoly& a, const RatPoly& q, const RatPoly& b) {
  RatPoly out = a;
  if (!q.empty() && !b.empty()) {
    out.resize(std::max(out.size(), q.size() + b.size() - 1));
    for (std::size_t i = 0; i < q.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] -= q[i] * b[j];
  }
  trim(out);
  return out;
}

}  // namespace

CycNumber CycNumber::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero cyclotomic number");
  if (auto q = to_rational()) return CycNumber(BigRational(1) / *q);
  if (support_size() == 1) {
    // c * zeta^k  ->  (1/c) * zeta^{-k}
    std::size_t k = 0;
    while (num_[k] == 0) ++k;
    const unsigned m = conductor();
    const auto& row = field_->powers[(m - k) % m];
    std::vector<BigInt> num(num_.size());
    for (std::size_t i = 0; i < num.size(); ++i) num[i] = row[i];
    CycNumber out(field_, std::move(num), 1);
    out.scale_rational(den_, num_[k]);
    return out;
  }
  // Extended Euclid over Q[x] with the cyclotomic modulus.
  RatPoly r0, r1;
  for (const auto& c : field_->modulus) r0.emplace_back(c);
  r1 = coefficients();
  trim(r1);
  RatPoly s0{}, s1{BigRational(1)};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    RatPoly s2 = sub_mul(s0, q, s1);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.size() != 1) throw std::logic_error("cyclotomic modulus is not irreducible");
  for (auto& c : s0) c /= r0[0];
  return from_coefficients(conductor(), s0);
}

bool CycNumber::is_unimodular() const { return (*this * conjugate()).is_one(); }

void CycNumber::scale_rational(const BigInt& num, const BigInt& den) {
  for (auto& c : num_) c *= num;
  den_ *= den;
  normalize();
}

CycNumber CycNumber::operator-() const {
  CycNumber out = *this;
  for (auto& c : out.num_) c = -c;
  return out;
}

void unify_conductors(CycNumber& a, CycNumber& b) {
  if (a.conductor() == b.conductor()) return;
  const unsigned m = lcm_conductor(a.conductor(), b.conductor());
  if (a.conductor() != m) a = a.promote(m);
  if (b.conductor() != m) b = b.promote(m);
}

CycNumber& CycNumber::operator+=(const CycNumber& rhs) {
  if (rhs.conductor() != conductor()) {
    CycNumber other = rhs;
    unify_conductors(*this, other);
    return *this += other;
  }
  if (den_ == rhs.den_) {
    for (std::size_t i = 0; i < num_.size(); ++i) num_[i] += rhs.num_[i];
  } else {
    for (std::size_t i = 0; i < num_.size(); ++i) {
      num_[i] *= rhs.den_;
      mpz_addmul(num_[i].get_mpz_t(), rhs.num_[i].get_mpz_t(), den_.get_mpz_t());
    }
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

CycNumber& CycNumber::operator-=(const CycNumber& rhs) { return *this += -rhs; }

namespace {

// Unreduced polynomial product a*b of two same-conductor numerator vectors,
// folded back into length phi(m).
std::vector<BigInt> multiply_numerators(const detail::CyclotomicField& f,
                                        const std::vector<BigInt>& a,
                                        const std::vector<BigInt>& b) {
  const unsigned d = f.degree;
  std::vector<BigInt> prod(2 * d - 1);
  for (unsigned i = 0; i < d; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < d; ++j) {
      if (b[j] == 0) continue;
      mpz_addmul(prod[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  for (unsigned k = 2 * d - 1; k-- > d;) {
    if (prod[k] == 0) continue;
    const auto& row = f.powers[k % f.conductor];
    for (unsigned i = 0; i < d; ++i) {
      const long r = row[i];
      if (r > 0)
        mpz_addmul_ui(prod[i].get_mpz_t(), prod[k].get_mpz_t(), static_cast<unsigned long>(r));
      else if (r < 0)
        mpz_submul_ui(prod[i].get_mpz_t(), prod[k].get_mpz_t(), static_cast<unsigned long>(-r));
    }
  }
  prod.resize(d);
  return prod;
}

}  // namespace

CycNumber operator*(const CycNumber& a, const CycNumber& b) {
  if (a.conductor() != b.conductor()) {
    CycNumber x = a, y = b;
    unify_conductors(x, y);
    return x * y;
  }
  if (a.is_zero() || b.is_zero()) return CycNumber(a.field_, std::vector<BigInt>(a.num_.size()), 1);
  return CycNumber(a.field_, multiply_numerators(*a.field_, a.num_, b.num_), a.den_ * b.den_);
}

CycNumber& CycNumber::operator*=(const CycNumber& rhs) { return *this = *this * rhs; }

CycNumber& CycNumber::operator/=(const CycNumber& rhs) {
  if (rhs.is_zero()) throw DivisionByZero("division by zero cyclotomic number");
  if (auto q = rhs.to_rational()) {
    CycNumber out = *this;
    out.scale_rational(q->get_den(), q->get_num());
    return *this = out;
  }
  return *this *= rhs.inverse();
}

void fused_multiply_add(CycNumber& acc, const CycNumber& a, const CycNumber& b, bool negate) {
  if (a.is_zero() || b.is_zero()) return;
  if (acc.conductor() != a.conductor() || a.conductor() != b.conductor()) {
    if (negate)
      acc -= a * b;
    else
      acc += a * b;
    return;
  }
  std::vector<BigInt> prod = multiply_numerators(*a.field_, a.num_, b.num_);
  BigInt pden = a.den_ * b.den_;
  if (acc.den_ == pden) {
    for (std::size_t i = 0; i < prod.size(); ++i) {
      if (negate)
        acc.num_[i] -= prod[i];
      else
        acc.num_[i] += prod[i];
    }
  } else {
    for (std::size_t i = 0; i < prod.size(); ++i) {
      acc.num_[i] *= pden;
      if (negate)
        mpz_submul(acc.num_[i].get_mpz_t(), prod[i].get_mpz_t(), acc.den_.get_mpz_t());
      else
        mpz_addmul(acc.num_[i].get_mpz_t(), prod[i].get_mpz_t(), acc.den_.get_mpz_t());
    }
    acc.den_ *= pden;
  }
  acc.normalize();
}

bool operator==(const CycNumber& a, const CycNumber& b) {
  if (a.conductor() != b.conductor()) {
    CycNumber x = a, y = b;
    unify_conductors(x, y);
    return x == y;
  }
  return a.den_ == b.den_ && a.num_ == b.num_;
}

CycNumber root_of_unity(unsigned m, long k) {
  if (m == 0) throw std::invalid_argument("root_of_unity: m must be positive");
  const long r = ((k % static_cast<long>(m)) + static_cast<long>(m)) % static_cast<long>(m);
  std::vector<BigRational> coeffs(static_cast<std::size_t>(r) + 1);
  coeffs[static_cast<std::size_t>(r)] = 1;
  return CycNumber::from_coefficients(m, coeffs);
}

CycNumber pow(const CycNumber& base, unsigned exponent) {
  CycNumber result = CycNumber(1).promote(base.conductor());
  CycNumber b = base;
  while (exponent > 0) {
    if (exponent & 1u) result *= b;
    exponent >>= 1;
    if (exponent > 0) b *= b;
  }
  return result;
}

std::optional<unsigned> root_of_unity_exponent(const CycNumber& value) {
  const unsigned m = value.conductor();
  for (unsigned k = 0; k < m; ++k)
    if (value == root_of_unity(m, k)) return k;
  return std::nullopt;
}

namespace {

std::string rational_text(const BigRational& q) { return q.get_str(); }

}  // namespace

std::string to_string(const CycNumber& value, unsigned conductor) {
  const CycNumber v = value.promote(conductor);
  std::ostringstream os;
  bool first = true;
  const auto coeffs = v.coefficients();
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const BigRational& c = coeffs[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    const BigRational mag = negative ? BigRational(-c) : c;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    if (k == 0) {
      os << rational_text(mag);
      continue;
    }
    if (mag != 1) os << rational_text(mag) << "*";
    os << "w";
    if (k > 1) os << "^" << k;
  }
  if (first) return "0";
  return os.str();
}

std::string to_string(const CycNumber& value) { return to_string(value, value.conductor()); }

std::string to_document_string(const CycNumber& value) {
  return "conductor " + std::to_string(value.conductor()) + ": " + to_string(value);
}

ComplexApprox approximate(const CycNumber& value) {
  const double step = 2.0 * std::numbers::pi / value.conductor();
  ComplexApprox out{0.0, 0.0};
  const auto coeffs = value.coefficients();
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const double c = coeffs[k].get_d();
    out.re += c * std::cos(step * static_cast<double>(k));
    out.im += c * std::sin(step * static_cast<double>(k));
  }
  return out;
}

}  // namespace specpencil
