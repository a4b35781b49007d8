#include "specpencil/mpoly.hpp"

#include <algorithm>
#include <sstream>

namespace specpencil {

namespace {

constexpr std::string_view kVarNames[] = {"x", "y", "z", "z1", "z2"};

}  // namespace

std::string_view var_name(Var v) { return kVarNames[static_cast<std::size_t>(v)]; }

std::optional<Var> parse_var(std::string_view name) {
  for (std::size_t i = 0; i < std::size(kVarNames); ++i)
    if (kVarNames[i] == name) return static_cast<Var>(i);
  return std::nullopt;
}

VarSet::VarSet(std::initializer_list<Var> vars) : VarSet(std::vector<Var>(vars)) {}

VarSet::VarSet(std::vector<Var> vars) : vars_(std::move(vars)) {
  if (vars_.size() > detail::kMaxVars) throw std::invalid_argument("too many variables");
  for (std::size_t i = 1; i < vars_.size(); ++i)
    if (!(vars_[i - 1] < vars_[i]))
      throw std::invalid_argument("variables must be distinct and in order x < y < z < z1 < z2");
}

VarSet VarSet::parse(std::string_view text) {
  std::vector<Var> vars;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    auto v = parse_var(token);
    if (!v) throw UnknownVariable("unknown variable '" + token + "'");
    vars.push_back(*v);
    token.clear();
  };
  for (char ch : text) {
    if (ch == ',' || ch == ' ')
      flush();
    else
      token.push_back(ch);
  }
  flush();
  return VarSet(std::move(vars));
}

VarSet VarSet::for_count(std::size_t k) {
  switch (k) {
    case 1: return {Var::x};
    case 2: return {Var::x, Var::y};
    case 3: return {Var::x, Var::y, Var::z};
    case 4: return {Var::x, Var::y, Var::z1, Var::z2};
    case 5: return {Var::x, Var::y, Var::z, Var::z1, Var::z2};
    default: throw std::invalid_argument("no default variable set for " + std::to_string(k) + " matrices");
  }
}

std::optional<std::size_t> VarSet::index_of(Var v) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == v) return i;
  return std::nullopt;
}

VarSet VarSet::without(Var v) const {
  std::vector<Var> rest;
  for (Var u : vars_)
    if (u != v) rest.push_back(u);
  return VarSet(std::move(rest));
}

std::string VarSet::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (i) out += ",";
    out += var_name(vars_[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace detail {

namespace {
constexpr unsigned kDegreeShift = 56;
constexpr std::uint64_t kSlotMask = (std::uint64_t{1} << kSlotBits) - 1;

unsigned slot_shift(std::size_t position) {
  return static_cast<unsigned>((kMaxVars - 1 - position) * kSlotBits);
}
}  // namespace

std::uint64_t pack_monomial(const Exponents& e) {
  if (e.size() > kMaxVars) throw std::invalid_argument("too many exponents");
  std::uint64_t key = 0;
  unsigned degree = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    degree += e[i];
    if (degree > kMaxDegree) throw std::overflow_error("monomial degree exceeds 255");
    key |= static_cast<std::uint64_t>(e[i]) << slot_shift(i);
  }
  return key | (static_cast<std::uint64_t>(degree) << kDegreeShift);
}

Exponents unpack_monomial(std::uint64_t key, std::size_t nvars) {
  Exponents e(nvars);
  for (std::size_t i = 0; i < nvars; ++i) e[i] = monomial_exponent(key, i);
  return e;
}

unsigned monomial_degree(std::uint64_t key) { return static_cast<unsigned>(key >> kDegreeShift); }

unsigned monomial_exponent(std::uint64_t key, std::size_t position) {
  return static_cast<unsigned>((key >> slot_shift(position)) & kSlotMask);
}

std::uint64_t multiply_monomials(std::uint64_t a, std::uint64_t b) {
  if (monomial_degree(a) + monomial_degree(b) > kMaxDegree)
    throw std::overflow_error("monomial degree exceeds 255");
  return a + b;
}

}  // namespace detail

// ---------------------------------------------------------------------------

MPoly::MPoly(VarSet vars) : vars_(std::move(vars)) {}

MPoly MPoly::constant(VarSet vars, const CycNumber& c) {
  MPoly p(std::move(vars));
  if (!c.is_zero()) p.terms_.emplace(0, c);
  return p;
}

MPoly MPoly::variable(VarSet vars, Var v) {
  auto idx = vars.index_of(v);
  if (!idx) throw UnknownVariable("variable " + std::string(var_name(v)) + " not in " + vars.to_string());
  Exponents e(vars.size());
  e[*idx] = 1;
  return monomial(std::move(vars), e, CycNumber(1));
}

MPoly MPoly::monomial(VarSet vars, const Exponents& e, const CycNumber& c) {
  if (e.size() != vars.size()) throw std::invalid_argument("exponent vector length differs from variable count");
  MPoly p(std::move(vars));
  if (!c.is_zero()) p.terms_.emplace(detail::pack_monomial(e), c);
  return p;
}

std::vector<MPoly::Term> MPoly::terms() const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [key, c] : terms_) out.push_back({detail::unpack_monomial(key, vars_.size()), c});
  return out;
}

bool MPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }

CycNumber MPoly::constant_term() const {
  auto it = terms_.find(0);
  return it == terms_.end() ? CycNumber() : it->second;
}

int MPoly::total_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(detail::monomial_degree(terms_.begin()->first));
}

unsigned MPoly::degree_in(Var v) const {
  auto idx = vars_.index_of(v);
  if (!idx) throw UnknownVariable("variable " + std::string(var_name(v)) + " not in " + vars_.to_string());
  unsigned d = 0;
  for (const auto& [key, c] : terms_) d = std::max(d, detail::monomial_exponent(key, *idx));
  return d;
}

CycNumber MPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(detail::pack_monomial(e));
  return it == terms_.end() ? CycNumber() : it->second;
}

unsigned MPoly::conductor() const {
  unsigned m = 1;
  for (const auto& [key, c] : terms_) m = lcm_conductor(m, c.conductor());
  return m;
}

MPoly MPoly::with_conductor(unsigned m) const {
  MPoly out(vars_);
  for (const auto& [key, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), key, c.promote(m));
  return out;
}

void MPoly::require_same_vars(const MPoly& other, const char* op) const {
  if (!(vars_ == other.vars_))
    throw VarSetMismatch(std::string(op) + ": variable sets differ (" + vars_.to_string() + " vs " +
                         other.vars_.to_string() + ")");
}

void MPoly::accumulate(Key key, const CycNumber& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void MPoly::add_term(const Exponents& e, const CycNumber& c) {
  if (e.size() != vars_.size()) throw std::invalid_argument("exponent vector length differs from variable count");
  accumulate(detail::pack_monomial(e), c);
}

void MPoly::add_product(const MPoly& a, const MPoly& b, bool negate) {
  require_same_vars(a, "add_product");
  require_same_vars(b, "add_product");
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      const Key key = detail::multiply_monomials(ka, kb);
      auto it = terms_.find(key);
      if (it == terms_.end()) {
        CycNumber prod = ca * cb;
        terms_.emplace(key, negate ? -prod : std::move(prod));
      } else {
        fused_multiply_add(it->second, ca, cb, negate);
        if (it->second.is_zero()) terms_.erase(it);
      }
    }
  }
}

MPoly MPoly::operator-() const {
  MPoly out = *this;
  for (auto& [key, c] : out.terms_) c = -c;
  return out;
}

MPoly& MPoly::operator+=(const MPoly& rhs) {
  require_same_vars(rhs, "add");
  for (const auto& [key, c] : rhs.terms_) accumulate(key, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& rhs) {
  require_same_vars(rhs, "sub");
  for (const auto& [key, c] : rhs.terms_) accumulate(key, -c);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  a.require_same_vars(b, "mul");
  MPoly out(a.vars_);
  out.add_product(a, b);
  return out;
}

MPoly& MPoly::operator*=(const MPoly& rhs) { return *this = *this * rhs; }

MPoly& MPoly::operator*=(const CycNumber& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, coeff] : terms_) coeff *= c;
  return *this;
}

bool operator==(const MPoly& a, const MPoly& b) {
  if (!(a.vars_ == b.vars_) || a.terms_.size() != b.terms_.size()) return false;
  auto ib = b.terms_.begin();
  for (const auto& [key, c] : a.terms_) {
    if (key != ib->first || !(c == ib->second)) return false;
    ++ib;
  }
  return true;
}

MPoly scalar_mul(const MPoly& p, const CycNumber& c) { return p * c; }

MPoly pow(const MPoly& p, unsigned exponent) {
  MPoly result = MPoly::constant(p.vars(), CycNumber(1));
  MPoly base = p;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

MPoly coefficient_of(const MPoly& p, Var v, unsigned d) {
  auto idx = p.vars().index_of(v);
  if (!idx) throw UnknownVariable("variable " + std::string(var_name(v)) + " not in " + p.vars().to_string());
  MPoly out(p.vars().without(v));
  for (const auto& [key, c] : p.term_map()) {
    Exponents e = detail::unpack_monomial(key, p.vars().size());
    if (e[*idx] != d) continue;
    e.erase(e.begin() + static_cast<std::ptrdiff_t>(*idx));
    out.add_term(e, c);
  }
  return out;
}

MPoly substitute(const MPoly& p, Var v, const CycNumber& c) {
  auto idx = p.vars().index_of(v);
  if (!idx) throw UnknownVariable("variable " + std::string(var_name(v)) + " not in " + p.vars().to_string());
  const unsigned top = p.is_zero() ? 0 : p.degree_in(v);
  std::vector<CycNumber> powers{CycNumber(1)};
  for (unsigned k = 1; k <= top; ++k) powers.push_back(powers.back() * c);
  MPoly out(p.vars().without(v));
  for (const auto& [key, coeff] : p.term_map()) {
    Exponents e = detail::unpack_monomial(key, p.vars().size());
    const unsigned k = e[*idx];
    e.erase(e.begin() + static_cast<std::ptrdiff_t>(*idx));
    out.add_term(e, coeff * powers[k]);
  }
  return out;
}

std::optional<CycNumber> proportionality_ratio(const MPoly& p, const MPoly& q) {
  if (p.is_zero() || q.is_zero()) {
    if (p.is_zero() && q.is_zero()) return CycNumber(1);
    return std::nullopt;
  }
  if (!(p.vars() == q.vars()) || p.term_count() != q.term_count()) return std::nullopt;
  const auto& pt = p.term_map();
  const auto& qt = q.term_map();
  if (pt.begin()->first != qt.begin()->first) return std::nullopt;
  const CycNumber ratio = qt.begin()->second / pt.begin()->second;
  auto iq = qt.begin();
  for (const auto& [key, c] : pt) {
    if (key != iq->first) return std::nullopt;
    if (!(iq->second == ratio * c)) return std::nullopt;
    ++iq;
  }
  return ratio;
}

bool is_proportional(const MPoly& p, const MPoly& q) { return proportionality_ratio(p, q).has_value(); }

namespace {

std::string monomial_text(const MPoly& p, MPoly::Key key) {
  std::string out;
  for (std::size_t i = 0; i < p.vars().size(); ++i) {
    const unsigned e = detail::monomial_exponent(key, i);
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    out += var_name(p.vars()[i]);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

void append_signed(std::ostringstream& os, bool first, bool negative) {
  if (first)
    os << (negative ? "-" : "");
  else
    os << (negative ? " - " : " + ");
}

}  // namespace

std::string to_string(const MPoly& p, unsigned conductor) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, raw] : p.term_map()) {
    const CycNumber c = raw.promote(conductor);
    const std::string mono = monomial_text(p, key);
    if (c.support_size() == 1) {
      // r * w^k with rational r
      std::size_t k = 0;
      while (c.numerators()[k] == 0) ++k;
      const BigRational r = c.coefficient(k);
      const bool negative = r < 0;
      const BigRational mag = negative ? BigRational(-r) : r;
      append_signed(os, first, negative);
      std::string body;
      if (k == 0) {
        if (mag != 1 || mono.empty()) body = mag.get_str();
      } else {
        if (mag != 1) body = mag.get_str() + "*";
        body += k == 1 ? "w" : "w^" + std::to_string(k);
      }
      if (!mono.empty()) body += body.empty() ? mono : "*" + mono;
      os << body;
    } else {
      append_signed(os, first, false);
      os << "(" << to_string(c, conductor) << ")";
      if (!mono.empty()) os << "*" << mono;
    }
    first = false;
  }
  return os.str();
}

std::string to_string(const MPoly& p) { return to_string(p, p.conductor()); }

}  // namespace specpencil
