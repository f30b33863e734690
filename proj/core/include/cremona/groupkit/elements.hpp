#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cremona/groupkit/group.hpp"
#include "cremona/projlin/projmap.hpp"

namespace cremona {

/// Permutation of {0, ..., n-1}; images[i] is the image of i.
/// Products compose right to left: (p * q)(i) = p(q(i)).
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<std::uint8_t> images);
  static Perm identity(std::size_t n);
  /// Permutation of {0..n-1} from cycles written with 0-based points.
  static Perm from_cycles(std::size_t n, const std::vector<std::vector<std::uint8_t>>& cycles);

  std::size_t size() const { return images_.size(); }
  std::uint8_t operator()(std::size_t i) const { return images_[i]; }
  const std::vector<std::uint8_t>& images() const { return images_; }

  Perm operator*(const Perm& o) const;
  Perm inverse() const;
  bool is_identity() const;
  bool is_even() const;
  /// Cycle lengths > 1, sorted descending.
  std::vector<std::size_t> cycle_type() const;
  /// Cycle notation with 1-based points, e.g. "(1 2)(3 4)" or "()".
  std::string to_string() const;

  friend bool operator==(const Perm&, const Perm&) = default;

 private:
  std::vector<std::uint8_t> images_;
};

std::string group_key(const Perm& p);
Perm group_identity(const Perm& p);

/// Element (v, s) of F_2^n x| Sym_n with (v, s)(w, t) = (v + s(w), s t), where
/// s(w) moves coordinate i of w to position s(i). Vectors are bitmasks and
/// must have even weight.
class PermVectorElement {
 public:
  PermVectorElement() = default;
  PermVectorElement(std::uint32_t vector, Perm perm);

  std::uint32_t vector() const { return v_; }
  const Perm& perm() const { return p_; }

  PermVectorElement operator*(const PermVectorElement& o) const;
  friend bool operator==(const PermVectorElement&, const PermVectorElement&) = default;

 private:
  std::uint32_t v_ = 0;
  Perm p_;
};

/// Applies s to the coordinates of a bit vector.
std::uint32_t permute_bits(const Perm& s, std::uint32_t v);
/// Bit vector from a 0/1 list, coordinate 0 first.
std::uint32_t bits_from_list(const std::vector<int>& bits);

std::string group_key(const PermVectorElement& x);
PermVectorElement group_identity(const PermVectorElement& x);

/// Element of (G x G) x| Z/2 for G in PGL_2: the swap bit exchanges factors.
class PairSwapElement {
 public:
  PairSwapElement(ProjMap first, ProjMap second, bool swap);

  const ProjMap& first() const { return first_; }
  const ProjMap& second() const { return second_; }
  bool swap() const { return swap_; }

  PairSwapElement operator*(const PairSwapElement& o) const;

 private:
  ProjMap first_;
  ProjMap second_;
  bool swap_ = false;
};

std::string group_key(const PairSwapElement& x);
PairSwapElement group_identity(const PairSwapElement& x);

/// Closure of {(g, 1, 0), (1, g, 0) : g a generator of G}, plus (1, 1, 1) when
/// include_swap is set. Has order 2|G|^2 (or |G|^2 without the swap).
FiniteGroup<PairSwapElement> product_with_swap(const FiniteGroup<ProjMap>& g, bool include_swap = true,
                                               std::size_t cap = kDefaultClosureCap);

}  // namespace cremona
