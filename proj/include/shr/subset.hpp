#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace shr {

/// Index of an element in the carrier of a finite structure.
using Element = std::uint32_t;

/// Largest carrier a `Subset` can address.
inline constexpr std::size_t max_order = 64;

/// A subset of a carrier of at most 64 elements, stored as a bit mask.
///
/// Bit i set means element i is a member. Ordering for presentation uses
/// `canonical_less` (by size, then lexicographically on the sorted members);
/// the mask itself gives the "integer encoding" order used by enumerations.
class Subset {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Element;
    using difference_type = std::ptrdiff_t;
    using pointer = const Element*;
    using reference = Element;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}

    constexpr Element operator*() const {
      return static_cast<Element>(std::countr_zero(rest_));
    }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr Subset() = default;
  constexpr Subset(std::initializer_list<Element> members) {
    for (Element e : members) insert(e);
  }

  static constexpr Subset from_mask(std::uint64_t mask) {
    Subset s;
    s.mask_ = mask;
    return s;
  }
  static constexpr Subset singleton(Element e) { return from_mask(bit(e)); }
  static constexpr Subset full(std::size_t order) {
    return from_mask(order >= 64 ? ~std::uint64_t{0}
                                 : (std::uint64_t{1} << order) - 1);
  }

  constexpr std::uint64_t mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr std::size_t size() const {
    return static_cast<std::size_t>(std::popcount(mask_));
  }
  constexpr bool contains(Element e) const { return (mask_ & bit(e)) != 0; }
  constexpr void insert(Element e) { mask_ |= bit(e); }
  constexpr void erase(Element e) { mask_ &= ~bit(e); }

  /// Least member; undefined on the empty set.
  constexpr Element front() const {
    return static_cast<Element>(std::countr_zero(mask_));
  }

  constexpr bool subset_of(Subset other) const {
    return (mask_ & ~other.mask_) == 0;
  }
  constexpr bool proper_subset_of(Subset other) const {
    return subset_of(other) && mask_ != other.mask_;
  }
  constexpr bool intersects(Subset other) const {
    return (mask_ & other.mask_) != 0;
  }

  constexpr iterator begin() const { return iterator(mask_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<Element> members() const { return {begin(), end()}; }

  constexpr Subset& operator|=(Subset o) {
    mask_ |= o.mask_;
    return *this;
  }
  constexpr Subset& operator&=(Subset o) {
    mask_ &= o.mask_;
    return *this;
  }
  constexpr Subset& operator-=(Subset o) {
    mask_ &= ~o.mask_;
    return *this;
  }
  friend constexpr Subset operator|(Subset a, Subset b) { return a |= b; }
  friend constexpr Subset operator&(Subset a, Subset b) { return a &= b; }
  friend constexpr Subset operator-(Subset a, Subset b) { return a -= b; }
  friend constexpr bool operator==(Subset, Subset) = default;

 private:
  static constexpr std::uint64_t bit(Element e) { return std::uint64_t{1} << e; }

  std::uint64_t mask_ = 0;
};

/// Order by size, then lexicographically on sorted members.
constexpr bool canonical_less(Subset a, Subset b) {
  if (a.size() != b.size()) return a.size() < b.size();
  const std::uint64_t diff = a.mask() ^ b.mask();
  if (diff == 0) return false;
  // Equal sizes: the set owning the lowest differing element has the smaller
  // member at the first position where the sorted lists differ.
  return (a.mask() & (diff & (~diff + 1))) != 0;
}

struct CanonicalLess {
  constexpr bool operator()(Subset a, Subset b) const {
    return canonical_less(a, b);
  }
};

}  // namespace shr
