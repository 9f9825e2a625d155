#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "shr/semihyperring.hpp"

namespace shr {

inline constexpr std::size_t default_ideal_cap = 16;

// ---------------------------------------------------------------------------
// Predicates

/// x + y ⊆ I for all x, y in I.
inline bool closed_under_add(const Semihyperring& s, Subset i) {
  for (Element x : i)
    for (Element y : i)
      if (!s.add(x, y).subset_of(i)) return false;
  return true;
}

inline bool is_left_hyperideal(const Semihyperring& s, Subset i) {
  if (i.empty()) throw empty_operand_error("is_left_hyperideal");
  if (!closed_under_add(s, i)) return false;
  for (Element a : i)
    for (Element x = 0; x < s.order(); ++x)
      if (!i.contains(s.mul(x, a))) return false;
  return true;
}

inline bool is_right_hyperideal(const Semihyperring& s, Subset i) {
  if (i.empty()) throw empty_operand_error("is_right_hyperideal");
  if (!closed_under_add(s, i)) return false;
  for (Element a : i)
    for (Element x = 0; x < s.order(); ++x)
      if (!i.contains(s.mul(a, x))) return false;
  return true;
}

inline bool is_hyperideal(const Semihyperring& s, Subset i) {
  if (i.empty()) throw empty_operand_error("is_hyperideal");
  if (!closed_under_add(s, i)) return false;
  for (Element a : i)
    for (Element x = 0; x < s.order(); ++x)
      if (!i.contains(s.mul(x, a)) || !i.contains(s.mul(a, x))) return false;
  return true;
}

inline bool is_subsemihyperring(const Semihyperring& s, Subset t) {
  if (t.empty()) throw empty_operand_error("is_subsemihyperring");
  if (!closed_under_add(s, t)) return false;
  for (Element a : t)
    for (Element b : t)
      if (!t.contains(s.mul(a, b))) return false;
  return true;
}

/// Whether `x` is a hyperideal of the subsemihyperring `t` (tables restricted
/// to `t`).
inline bool is_hyperideal_within(const Semihyperring& s, Subset t, Subset x) {
  if (x.empty()) throw empty_operand_error("is_hyperideal_within");
  if (!x.subset_of(t)) return false;
  if (!closed_under_add(s, x)) return false;
  for (Element a : x)
    for (Element r : t)
      if (!x.contains(s.mul(r, a)) || !x.contains(s.mul(a, r))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Enumeration

/// All hyperideals of a structure, sorted canonically, with their
/// containment order.
class IdealLattice {
 public:
  IdealLattice() = default;
  IdealLattice(std::size_t order, std::vector<Subset> ideals)
      : order_(order), ideals_(std::move(ideals)) {
    std::sort(ideals_.begin(), ideals_.end(), CanonicalLess{});
    const std::size_t k = ideals_.size();
    below_.assign(k, boost::dynamic_bitset<>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        if (ideals_[i].subset_of(ideals_[j])) below_[j].set(i);
  }

  std::size_t order() const { return order_; }
  std::size_t size() const { return ideals_.size(); }
  const std::vector<Subset>& ideals() const { return ideals_; }
  Subset operator[](std::size_t i) const { return ideals_[i]; }
  auto begin() const { return ideals_.begin(); }
  auto end() const { return ideals_.end(); }

  std::optional<std::size_t> index_of(Subset i) const {
    auto it = std::lower_bound(ideals_.begin(), ideals_.end(), i, CanonicalLess{});
    if (it == ideals_.end() || *it != i) return std::nullopt;
    return static_cast<std::size_t>(it - ideals_.begin());
  }
  bool contains(Subset i) const { return index_of(i).has_value(); }

  /// ideals()[i] ⊆ ideals()[j].
  bool leq(std::size_t i, std::size_t j) const { return below_[j].test(i); }

  /// Ideals other than the whole carrier.
  std::vector<Subset> proper() const {
    std::vector<Subset> out;
    for (Subset i : ideals_)
      if (i != Subset::full(order_)) out.push_back(i);
    return out;
  }

  /// Intersection of all ideals containing `x` (the carrier when none is
  /// listed, which cannot happen for a complete lattice).
  Subset meet_above(Subset x) const {
    Subset out = Subset::full(order_);
    for (Subset i : ideals_)
      if (x.subset_of(i)) out &= i;
    return out;
  }

 private:
  std::size_t order_ = 0;
  std::vector<Subset> ideals_;
  std::vector<boost::dynamic_bitset<>> below_;
};

namespace detail {

template <class Pred>
std::vector<Subset> subsets_with_zero(const Semihyperring& s, std::size_t cap,
                                      Pred&& pred) {
  if (s.order() > cap) throw size_limit_error(s.order(), cap);
  const std::uint64_t zero_bit = Subset::singleton(s.zero()).mask();
  const std::uint64_t rest = Subset::full(s.order()).mask() & ~zero_bit;
  std::vector<Subset> out;
  // Submasks of `rest` in ascending order.
  std::uint64_t m = 0;
  do {
    const Subset candidate = Subset::from_mask(m | zero_bit);
    if (pred(candidate)) out.push_back(candidate);
    m = (m - rest) & rest;
  } while (m != 0);
  return out;
}

}  // namespace detail

/// Brute force over the subsets containing zero, ascending by encoding.
inline IdealLattice enumerate_hyperideals(const Semihyperring& s,
                                          std::size_t cap = default_ideal_cap) {
  return {s.order(), detail::subsets_with_zero(s, cap, [&](Subset c) {
            return is_hyperideal(s, c);
          })};
}

inline std::vector<Subset> enumerate_left_hyperideals(
    const Semihyperring& s, std::size_t cap = default_ideal_cap) {
  auto out = detail::subsets_with_zero(
      s, cap, [&](Subset c) { return is_left_hyperideal(s, c); });
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

inline std::vector<Subset> enumerate_right_hyperideals(
    const Semihyperring& s, std::size_t cap = default_ideal_cap) {
  auto out = detail::subsets_with_zero(
      s, cap, [&](Subset c) { return is_right_hyperideal(s, c); });
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

// ---------------------------------------------------------------------------
// Constructions

/// ⟨X⟩: least fixpoint of X ∪ {0} under pairwise hyperaddition and two-sided
/// multiplication by arbitrary elements.
inline Subset ideal_generated(const Semihyperring& s, Subset x) {
  if (x.empty()) throw empty_operand_error("ideal_generated");
  Subset closed = x;
  closed.insert(s.zero());
  Subset frontier = closed;
  while (!frontier.empty()) {
    Subset next;
    for (Element a : frontier) {
      for (Element b : closed) next |= s.add(a, b);
      for (Element r = 0; r < s.order(); ++r) {
        next.insert(s.mul(r, a));
        next.insert(s.mul(a, r));
      }
    }
    frontier = next - closed;
    closed |= next;
  }
  return closed;
}

/// aR: finite sums of a·r, the least right hyperideal containing a.
inline Subset principal_right(const Semihyperring& s, Element a) {
  if (!s.has_unity())
    throw hypothesis_error("principal_right: structure has no unity");
  Subset products;
  for (Element r = 0; r < s.order(); ++r) products.insert(s.mul(a, r));
  return finite_sums_closure(s, products);
}

/// Ra: finite sums of r·a, the least left hyperideal containing a.
inline Subset principal_left(const Semihyperring& s, Element a) {
  if (!s.has_unity())
    throw hypothesis_error("principal_left: structure has no unity");
  Subset products;
  for (Element r = 0; r < s.order(); ++r) products.insert(s.mul(r, a));
  return finite_sums_closure(s, products);
}

inline void require_hyperideal(const Semihyperring& s, Subset i,
                               const char* op) {
  if (i.empty() || !is_hyperideal(s, i))
    throw precondition_error(std::string(op) + ": argument is not a hyperideal");
}

/// A + B for hyperideals A, B: the least hyperideal containing both.
inline Subset ideal_sum(const Semihyperring& s, Subset a, Subset b) {
  require_hyperideal(s, a, "ideal_sum");
  require_hyperideal(s, b, "ideal_sum");
  return subset_add(s, a, b);
}

/// Elements of finite sums a1·b1 + ... + ak·bk with ai in A, bi in B.
/// No precondition beyond nonemptiness; used for one-sided ideals as well.
inline Subset sums_of_products(const Semihyperring& s, Subset a, Subset b) {
  return finite_sums_closure(s, subset_mul(s, a, b));
}

/// IJ for hyperideals I, J.
inline Subset ideal_product(const Semihyperring& s, Subset i, Subset j) {
  require_hyperideal(s, i, "ideal_product");
  require_hyperideal(s, j, "ideal_product");
  return sums_of_products(s, i, j);
}

/// (0 : A) = {r : r·a = 0 for all a in A}.
inline Subset left_annihilator(const Semihyperring& s, Subset a) {
  if (a.empty()) throw empty_operand_error("left_annihilator");
  Subset out;
  for (Element r = 0; r < s.order(); ++r) {
    bool kills = true;
    for (Element x : a) kills = kills && s.mul(r, x) == s.zero();
    if (kills) out.insert(r);
  }
  return out;
}

/// (A : 0) = {r : a·r = 0 for all a in A}.
inline Subset right_annihilator(const Semihyperring& s, Subset a) {
  if (a.empty()) throw empty_operand_error("right_annihilator");
  Subset out;
  for (Element r = 0; r < s.order(); ++r) {
    bool kills = true;
    for (Element x : a) kills = kills && s.mul(x, r) == s.zero();
    if (kills) out.insert(r);
  }
  return out;
}

/// T + I for a subsemihyperring T and a hyperideal I.
inline Subset subsemihyperring_plus_ideal(const Semihyperring& s, Subset t,
                                          Subset i) {
  if (t.empty() || !is_subsemihyperring(s, t))
    throw precondition_error(
        "subsemihyperring_plus_ideal: first argument is not a subsemihyperring");
  require_hyperideal(s, i, "subsemihyperring_plus_ideal");
  return subset_add(s, t, i);
}

}  // namespace shr
