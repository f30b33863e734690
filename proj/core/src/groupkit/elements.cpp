#include "cremona/groupkit/elements.hpp"

#include <algorithm>
#include <bit>

namespace cremona {

Perm::Perm(std::vector<std::uint8_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto x : images_) {
    if (x >= images_.size() || seen[x]) throw PreconditionError("not a permutation");
    seen[x] = true;
  }
}

Perm Perm::identity(std::size_t n) {
  std::vector<std::uint8_t> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<std::uint8_t>(i);
  return Perm(std::move(img));
}

Perm Perm::from_cycles(std::size_t n, const std::vector<std::vector<std::uint8_t>>& cycles) {
  std::vector<std::uint8_t> img = identity(n).images_;
  for (const auto& c : cycles) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k] >= n) throw PreconditionError("cycle point out of range");
      img[c[k]] = c[(k + 1) % c.size()];
    }
  }
  return Perm(std::move(img));
}

Perm Perm::operator*(const Perm& o) const {
  if (size() != o.size()) throw PreconditionError("permutations of different degree");
  std::vector<std::uint8_t> img(size());
  for (std::size_t i = 0; i < size(); ++i) img[i] = images_[o.images_[i]];
  Perm p;
  p.images_ = std::move(img);
  return p;
}

Perm Perm::inverse() const {
  std::vector<std::uint8_t> img(size());
  for (std::size_t i = 0; i < size(); ++i) img[images_[i]] = static_cast<std::uint8_t>(i);
  Perm p;
  p.images_ = std::move(img);
  return p;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::vector<std::size_t> Perm::cycle_type() const {
  std::vector<bool> seen(size(), false);
  std::vector<std::size_t> type;
  for (std::size_t i = 0; i < size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    if (len > 1) type.push_back(len);
  }
  std::sort(type.rbegin(), type.rend());
  return type;
}

bool Perm::is_even() const {
  std::size_t transpositions = 0;
  for (auto len : cycle_type()) transpositions += len - 1;
  return transpositions % 2 == 0;
}

std::string Perm::to_string() const {
  std::string out;
  std::vector<bool> seen(size(), false);
  for (std::size_t i = 0; i < size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out += "(";
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (j != i) out += " ";
      out += std::to_string(j + 1);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

std::string group_key(const Perm& p) { return std::string(p.images().begin(), p.images().end()); }

Perm group_identity(const Perm& p) { return Perm::identity(p.size()); }

std::uint32_t permute_bits(const Perm& s, std::uint32_t v) {
  std::uint32_t out = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (v & (1U << i)) out |= 1U << s(i);
  }
  return out;
}

std::uint32_t bits_from_list(const std::vector<int>& bits) {
  std::uint32_t v = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] & 1) v |= 1U << i;
  }
  return v;
}

PermVectorElement::PermVectorElement(std::uint32_t vector, Perm perm) : v_(vector), p_(std::move(perm)) {
  if (p_.size() > 32 || (p_.size() < 32 && (v_ >> p_.size()) != 0)) {
    throw PreconditionError("vector has more coordinates than the permutation degree");
  }
  if (std::popcount(v_) % 2 != 0) throw PreconditionError("vector must have even weight");
}

PermVectorElement PermVectorElement::operator*(const PermVectorElement& o) const {
  PermVectorElement r;
  r.v_ = v_ ^ permute_bits(p_, o.v_);
  r.p_ = p_ * o.p_;
  return r;
}

std::string group_key(const PermVectorElement& x) {
  return std::to_string(x.vector()) + ":" + group_key(x.perm());
}

PermVectorElement group_identity(const PermVectorElement& x) {
  return PermVectorElement(0, Perm::identity(x.perm().size()));
}

PairSwapElement::PairSwapElement(ProjMap first, ProjMap second, bool swap)
    : first_(std::move(first)), second_(std::move(second)), swap_(swap) {
  if (first_.dimension() != 2 || second_.dimension() != 2) throw PreconditionError("pair factors must lie in PGL_2");
}

PairSwapElement PairSwapElement::operator*(const PairSwapElement& o) const {
  if (!swap_) return {first_ * o.first_, second_ * o.second_, o.swap_};
  return {first_ * o.second_, second_ * o.first_, !o.swap_};
}

std::string group_key(const PairSwapElement& x) {
  return x.first().key() + "|" + x.second().key() + "|" + (x.swap() ? "1" : "0");
}

PairSwapElement group_identity(const PairSwapElement& /*x*/) {
  return {ProjMap::identity(2), ProjMap::identity(2), false};
}

FiniteGroup<PairSwapElement> product_with_swap(const FiniteGroup<ProjMap>& g, bool include_swap, std::size_t cap) {
  const ProjMap one = ProjMap::identity(2);
  std::vector<PairSwapElement> gens;
  const auto& base = g.generators().empty() ? g.elements() : g.generators();
  for (const auto& s : base) {
    gens.emplace_back(s, one, false);
    gens.emplace_back(one, s, false);
  }
  if (include_swap) gens.emplace_back(one, one, true);
  return closure(gens, PairSwapElement(one, one, false), cap);
}

}  // namespace cremona
