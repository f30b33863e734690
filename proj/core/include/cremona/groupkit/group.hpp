#pragma once

#include <concepts>
#include <cstddef>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cremona/errors.hpp"

namespace cremona {

/// Types usable with closure(): an associative product, a canonical text key
/// (equal keys mean equal group elements) and an identity of the same shape.
template <class T>
concept GroupElement = requires(const T& a, const T& b) {
  { a * b } -> std::convertible_to<T>;
  { group_key(a) } -> std::convertible_to<std::string>;
  { group_identity(a) } -> std::convertible_to<T>;
};

inline constexpr std::size_t kDefaultClosureCap = 100000;

/// A finite group stored as an explicit list of elements in discovery order.
template <GroupElement T>
class FiniteGroup {
 public:
  FiniteGroup() = default;

  /// Wraps an element list that is already known to be closed.
  static FiniteGroup from_elements(std::vector<T> elements, std::vector<T> generators) {
    FiniteGroup g;
    g.generators_ = std::move(generators);
    for (auto& e : elements) g.insert(std::move(e));
    return g;
  }

  std::size_t order() const { return elements_.size(); }
  const std::vector<T>& elements() const { return elements_; }
  const std::vector<T>& generators() const { return generators_; }
  const T& identity() const { return elements_.front(); }
  const T& operator[](std::size_t i) const { return elements_[i]; }

  std::optional<std::size_t> index_of(const T& x) const {
    auto it = index_.find(group_key(x));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  bool contains(const T& x) const { return index_of(x).has_value(); }

  /// Inserts x if new; returns its index and whether it was added.
  std::pair<std::size_t, bool> insert(T x) {
    std::string k = group_key(x);
    auto [it, added] = index_.try_emplace(std::move(k), elements_.size());
    if (added) elements_.push_back(std::move(x));
    return {it->second, added};
  }

 private:
  std::vector<T> elements_;
  std::vector<T> generators_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Breadth-first closure of `generators` under right multiplication, starting
/// from `identity`. The element order is deterministic for a given generator
/// list. Throws CapExceeded once more than `cap` elements appear.
template <GroupElement T>
FiniteGroup<T> closure(const std::vector<T>& generators, const T& identity, std::size_t cap = kDefaultClosureCap) {
  if (cap == 0) throw PreconditionError("closure cap must be positive");
  FiniteGroup<T> g = FiniteGroup<T>::from_elements({identity}, generators);
  for (std::size_t i = 0; i < g.order(); ++i) {
    for (const auto& s : generators) {
      T next = g[i] * s;
      if (g.insert(std::move(next)).second && g.order() > cap) throw CapExceeded(cap);
    }
  }
  return g;
}

/// Closure with the identity taken from the first generator.
template <GroupElement T>
FiniteGroup<T> closure(const std::vector<T>& generators, std::size_t cap = kDefaultClosureCap) {
  if (generators.empty()) throw PreconditionError("closure of an empty generator list needs an explicit identity");
  return closure(generators, group_identity(generators.front()), cap);
}

/// Least k >= 1 with x^k = 1; nullopt past `cap`.
template <GroupElement T>
std::optional<std::size_t> element_order(const T& x, std::size_t cap = kDefaultClosureCap) {
  const std::string one = group_key(group_identity(x));
  T power = x;
  for (std::size_t k = 1; k <= cap; ++k) {
    if (group_key(power) == one) return k;
    power = power * x;
  }
  return std::nullopt;
}

template <GroupElement T>
T element_power(const T& x, long e) {
  T result = group_identity(x);
  if (e < 0) {
    const auto ord = element_order(x);
    if (!ord) throw PreconditionError("inverse of an element of unbounded order");
    e = static_cast<long>(*ord) - ((-e) % static_cast<long>(*ord));
  }
  for (long k = 0; k < e; ++k) result = result * x;
  return result;
}

template <GroupElement T>
T element_inverse(const T& x) {
  return element_power(x, -1);
}

/// Element order -> number of elements of that order.
template <GroupElement T>
std::map<std::size_t, std::size_t> order_histogram(const FiniteGroup<T>& g) {
  std::map<std::size_t, std::size_t> h;
  for (const auto& x : g.elements()) ++h[*element_order(x, g.order())];
  return h;
}

/// Least common multiple of the element orders.
template <GroupElement T>
std::size_t group_exponent(const FiniteGroup<T>& g) {
  std::size_t e = 1;
  for (const auto& [ord, count] : order_histogram(g)) e = std::lcm(e, ord);
  return e;
}

template <GroupElement T>
bool commute(const T& a, const T& b) {
  return group_key(a * b) == group_key(b * a);
}

template <GroupElement T>
bool is_abelian(const FiniteGroup<T>& g) {
  const auto& gens = g.generators().empty() ? g.elements() : g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (!commute(gens[i], gens[j])) return false;
    }
  }
  return true;
}

/// Elements commuting with every generator (hence with all of g).
template <GroupElement T>
FiniteGroup<T> center(const FiniteGroup<T>& g) {
  const auto& gens = g.generators().empty() ? g.elements() : g.generators();
  std::vector<T> z;
  for (const auto& x : g.elements()) {
    bool central = true;
    for (const auto& s : gens) {
      if (!commute(x, s)) {
        central = false;
        break;
      }
    }
    if (central) z.push_back(x);
  }
  return FiniteGroup<T>::from_elements(z, {});
}

/// A word such as "b a b a" or "(ba)^2" flattened to (symbol, exponent)
/// factors. Symbols are single characters (a full UTF-8 code point), optionally
/// followed by ^n with n a possibly negative integer; parentheses group.
std::vector<std::pair<std::string, long>> parse_word(std::string_view word);

template <GroupElement T>
T evaluate_word(std::string_view word, const std::map<std::string, T>& generators) {
  if (generators.empty()) throw PreconditionError("no generators to evaluate a word over");
  T acc = group_identity(generators.begin()->second);
  for (const auto& [sym, e] : parse_word(word)) {
    auto it = generators.find(sym);
    if (it == generators.end()) throw PreconditionError("unknown generator symbol '" + sym + "'");
    acc = acc * element_power(it->second, e);
  }
  return acc;
}

/// True iff each relation evaluates to the identity and the generated group
/// has exactly `expected_order` elements.
template <GroupElement T>
bool verify_presentation(const std::map<std::string, T>& generators, const std::vector<std::string>& relations,
                         std::size_t expected_order, std::size_t cap = kDefaultClosureCap) {
  if (generators.empty()) throw PreconditionError("presentation without generators");
  const std::string one = group_key(group_identity(generators.begin()->second));
  for (const auto& r : relations) {
    if (group_key(evaluate_word(r, generators)) != one) return false;
  }
  std::vector<T> gens;
  for (const auto& [sym, x] : generators) gens.push_back(x);
  return closure(gens, cap).order() == expected_order;
}

/// Facts about a candidate normal subgroup n of g.
struct SubgroupReport {
  bool is_subgroup = false;
  bool is_normal = false;
  bool is_abelian = false;
  std::size_t order = 0;
  std::size_t exponent = 0;
  std::size_t quotient_order = 0;
};

/// Checks n <= g, normality (conjugation by the generators of g), commutativity
/// and the orders needed to confirm an extension N . Q of the stated shape.
template <GroupElement T>
SubgroupReport analyze_subgroup(const FiniteGroup<T>& g, const FiniteGroup<T>& n) {
  SubgroupReport r;
  r.order = n.order();
  r.exponent = group_exponent(n);
  r.is_abelian = is_abelian(n);
  r.is_subgroup = true;
  for (const auto& x : n.elements()) {
    if (!g.contains(x)) {
      r.is_subgroup = false;
      break;
    }
  }
  r.quotient_order = (r.is_subgroup && g.order() % n.order() == 0) ? g.order() / n.order() : 0;
  r.is_normal = r.is_subgroup;
  const auto& gens = g.generators().empty() ? g.elements() : g.generators();
  const auto& ngens = n.generators().empty() ? n.elements() : n.generators();
  for (const auto& s : gens) {
    if (!r.is_normal) break;
    const T s_inv = element_inverse(s);
    for (const auto& x : ngens) {
      if (!n.contains(s * x * s_inv)) {
        r.is_normal = false;
        break;
      }
    }
  }
  return r;
}

}  // namespace cremona
