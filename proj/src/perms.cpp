#include "specpencil/perms.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>

namespace specpencil {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || static_cast<std::size_t>(v) >= images_.size() || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("not a permutation: " + to_string(*this));
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation identity_perm(std::size_t n) { return Permutation::identity(n); }

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw std::invalid_argument("compose: permutation sizes differ");
  std::vector<int> images(p.size());
  for (std::size_t j = 0; j < p.size(); ++j) images[j] = p(static_cast<std::size_t>(q(j)));
  return Permutation(std::move(images));
}

Permutation inverse(const Permutation& p) {
  std::vector<int> images(p.size());
  for (std::size_t j = 0; j < p.size(); ++j) images[static_cast<std::size_t>(p(j))] = static_cast<int>(j);
  return Permutation(std::move(images));
}

CycMatrix perm_matrix(const Permutation& p) {
  CycMatrix out = zeros(p.size(), p.size());
  for (std::size_t j = 0; j < p.size(); ++j) out(static_cast<std::size_t>(p(j)), j) = CycNumber(1);
  return out;
}

std::vector<Permutation> enumerate_sn(std::size_t n) {
  if (n > 8) throw std::invalid_argument("enumerate_sn: n must be at most 8");
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

Permutation affine_perm(std::size_t n, int q, int m) {
  const int nn = static_cast<int>(n);
  std::vector<int> images(n);
  for (int j = 0; j < nn; ++j) images[static_cast<std::size_t>(j)] = (((q * j + m) % nn) + nn) % nn;
  return Permutation(std::move(images));
}

std::optional<AffineWitness> affine_witness(const Permutation& p) {
  const int n = static_cast<int>(p.size());
  if (n == 0) return std::nullopt;
  if (n == 1) return AffineWitness{1, 0};
  // p(0) = m and p(1) = q + m pin the only candidate.
  const int m = p(0);
  const int q = ((p(1) - m) % n + n) % n;
  if (std::gcd(q, n) != 1) return std::nullopt;
  if (affine_perm(p.size(), q, m) != p) return std::nullopt;
  return AffineWitness{q, m};
}

bool in_affine_group(const Permutation& p) { return affine_witness(p).has_value(); }

std::vector<Permutation> affine_group(std::size_t n) {
  std::vector<Permutation> out;
  const int nn = static_cast<int>(n);
  for (int q = 1; q <= std::max(1, nn - 1); ++q) {
    if (std::gcd(q, nn) != 1) continue;
    for (int m = 0; m < nn; ++m) out.push_back(affine_perm(n, q, m));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::set<Permutation> generated_subgroup(std::span<const Permutation> gens) {
  if (gens.empty()) throw std::invalid_argument("generated_subgroup: no generators");
  const std::size_t n = gens.front().size();
  for (const auto& g : gens)
    if (g.size() != n) throw std::invalid_argument("generated_subgroup: generator sizes differ");
  std::set<Permutation> group{identity_perm(n)};
  std::deque<Permutation> frontier{identity_perm(n)};
  // In a finite group, closure under right multiplication by generators
  // already contains all inverses.
  while (!frontier.empty()) {
    Permutation cur = frontier.front();
    frontier.pop_front();
    for (const auto& g : gens) {
      Permutation next = compose(cur, g);
      if (group.insert(next).second) frontier.push_back(std::move(next));
    }
  }
  return group;
}

namespace {

int parse_int(std::string_view text, std::size_t& pos) {
  std::size_t start = pos;
  bool neg = false;
  if (pos < text.size() && text[pos] == '-') {
    neg = true;
    ++pos;
  }
  int value = 0;
  bool any = false;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    value = value * 10 + (text[pos] - '0');
    ++pos;
    any = true;
  }
  if (!any) throw std::invalid_argument("expected integer at position " + std::to_string(start));
  return neg ? -value : value;
}

void skip_space(std::string_view text, std::size_t& pos) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
}

}  // namespace

Permutation from_cycles(std::size_t n, std::string_view text, int base) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  std::vector<bool> used(n, false);
  std::size_t pos = 0;
  skip_space(text, pos);
  while (pos < text.size()) {
    if (text[pos] != '(') throw std::invalid_argument("expected '(' at position " + std::to_string(pos));
    ++pos;
    skip_space(text, pos);
    // "()" is the identity
    if (pos < text.size() && text[pos] == ')') {
      ++pos;
      skip_space(text, pos);
      continue;
    }
    std::vector<int> cycle;
    while (true) {
      skip_space(text, pos);
      const int label = parse_int(text, pos) - base;
      if (label < 0 || static_cast<std::size_t>(label) >= n)
        throw std::invalid_argument("cycle label out of range at position " + std::to_string(pos));
      if (used[static_cast<std::size_t>(label)])
        throw std::invalid_argument("label repeated in cycles at position " + std::to_string(pos));
      used[static_cast<std::size_t>(label)] = true;
      cycle.push_back(label);
      skip_space(text, pos);
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      throw std::invalid_argument("expected ',' or ')' at position " + std::to_string(pos));
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      images[static_cast<std::size_t>(cycle[i])] = cycle[(i + 1) % cycle.size()];
    skip_space(text, pos);
  }
  return Permutation(std::move(images));
}

Permutation parse_permutation(std::string_view text, std::optional<std::size_t> n) {
  std::size_t pos = 0;
  skip_space(text, pos);
  if (pos < text.size() && text[pos] == '(') {
    if (!n) throw std::invalid_argument("cycle notation needs the permutation size");
    return from_cycles(*n, text, 0);
  }
  if (pos >= text.size() || text[pos] != '[') throw std::invalid_argument("expected '[' or '('");
  ++pos;
  std::vector<int> images;
  skip_space(text, pos);
  if (pos < text.size() && text[pos] == ']') {
    ++pos;
  } else {
    while (true) {
      skip_space(text, pos);
      images.push_back(parse_int(text, pos));
      skip_space(text, pos);
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ']') {
        ++pos;
        break;
      }
      throw std::invalid_argument("expected ',' or ']' at position " + std::to_string(pos));
    }
  }
  skip_space(text, pos);
  if (pos != text.size()) throw std::invalid_argument("trailing characters at position " + std::to_string(pos));
  if (n && images.size() != *n) throw std::invalid_argument("permutation has wrong size");
  return Permutation(std::move(images));
}

std::string to_string(const Permutation& p) {
  std::string out = "[";
  for (std::size_t j = 0; j < p.images().size(); ++j) {
    if (j) out += ",";
    out += std::to_string(p.images()[j]);
  }
  return out + "]";
}

std::vector<Permutation> sage_generators_g4() {
  return {from_cycles(4, "(1,2,3,4)", 1), from_cycles(4, "(1,3)", 1)};
}

std::vector<Permutation> sage_generators_g5() {
  return {from_cycles(5, "(1,2,3,4,5)", 1), from_cycles(5, "(1,2,4,3)", 1)};
}

}  // namespace specpencil
