#pragma once

#include <algorithm>
#include <set>
#include <numeric>
#include <optional>
#include <vector>

#include "shr/semihyperring.hpp"

namespace shr {

/// Table encoding used to pick a canonical representative of an
/// isomorphism class: row-major hyperaddition masks, then row-major
/// products, then the unity index (order when absent).
using TableEncoding = std::vector<std::uint64_t>;

namespace detail {

/// Encoding of `s` relabelled by `perm` (old index -> new index).
inline TableEncoding encode_permuted(const Semihyperring& s,
                                     const std::vector<Element>& perm) {
  const std::size_t n = s.order();
  std::vector<Element> inv(n);
  for (Element i = 0; i < n; ++i) inv[perm[i]] = i;
  TableEncoding code;
  code.reserve(2 * n * n + 1);
  for (Element i = 0; i < n; ++i)
    for (Element j = 0; j < n; ++j) {
      Subset image;
      for (Element e : s.add(inv[i], inv[j])) image.insert(perm[e]);
      code.push_back(image.mask());
    }
  for (Element i = 0; i < n; ++i)
    for (Element j = 0; j < n; ++j) code.push_back(perm[s.mul(inv[i], inv[j])]);
  code.push_back(s.unity() ? perm[*s.unity()] : n);
  return code;
}

inline Semihyperring decode(std::size_t n, const TableEncoding& code,
                            std::string name, std::vector<std::string> labels) {
  std::vector<Subset> add(n * n);
  std::vector<Element> mul(n * n);
  for (std::size_t c = 0; c < n * n; ++c) {
    add[c] = Subset::from_mask(code[c]);
    mul[c] = static_cast<Element>(code[n * n + c]);
  }
  std::optional<Element> unity;
  if (code.back() < n) unity = static_cast<Element>(code.back());
  return {n, std::move(add), std::move(mul), 0, unity, std::move(name),
          std::move(labels)};
}

}  // namespace detail

/// The two-sided multiplicative identity, if one exists.
inline std::optional<Element> find_unity(const Semihyperring& s) {
  for (Element e = 0; e < s.order(); ++e) {
    bool ok = true;
    for (Element x = 0; x < s.order() && ok; ++x)
      ok = s.mul(e, x) == x && s.mul(x, e) == x;
    if (ok) return e;
  }
  return std::nullopt;
}

/// Relabels `s` so that zero is index 0 and the table encoding is minimal
/// over all permutations fixing zero. Isomorphic inputs give identical
/// tables. Labels become e0, e1, ...; brute force, intended for order <= 8.
inline Semihyperring canonical_relabel(const Semihyperring& s) {
  const std::size_t n = s.order();
  // others[k] is the old index sent to new index k + 1.
  std::vector<Element> others;
  for (Element i = 0; i < n; ++i)
    if (i != s.zero()) others.push_back(i);
  std::optional<TableEncoding> best;
  std::vector<Element> perm(n);
  do {
    perm[s.zero()] = 0;
    for (std::size_t k = 0; k < others.size(); ++k)
      perm[others[k]] = static_cast<Element>(k + 1);
    auto code = detail::encode_permuted(s, perm);
    if (!best || code < *best) best = std::move(code);
  } while (std::next_permutation(others.begin(), others.end()));
  return detail::decode(n, *best, s.name(), {});
}

struct CatalogOptions {
  bool commutative_only = false;
  bool unity_only = false;
};

inline constexpr std::size_t catalog_max_order = 4;

/// All valid semihyperrings of the given order up to isomorphism, each in
/// canonical form with its unity (when one exists) declared. Ordered by
/// canonical encoding and named C<order>_<k>.
///
/// Hyperaddition tables and multiplication semigroups are enumerated
/// separately (each pruned by its own associativity law), then paired and
/// filtered by distributivity. Triples involving zero satisfy every law
/// automatically once zero is an identity and absorbing, so only nonzero
/// triples are examined.
inline std::vector<Semihyperring> catalog(std::size_t order,
                                          CatalogOptions options = {}) {
  if (order == 0) throw precondition_error("catalog order must be positive");
  if (order > catalog_max_order) throw size_limit_error(order, catalog_max_order);
  const auto n = static_cast<Element>(order);
  const std::uint64_t nonempty = (std::uint64_t{1} << n) - 1;

  // Hyperaddition: upper-triangle cells over nonzero elements.
  std::vector<std::pair<Element, Element>> add_cells;
  for (Element i = 1; i < n; ++i)
    for (Element j = i; j < n; ++j) add_cells.emplace_back(i, j);

  std::vector<std::vector<Subset>> adds;
  {
    std::vector<Subset> table(n * n);
    for (Element x = 0; x < n; ++x)
      table[x] = table[x * n] = Subset::singleton(x);
    std::vector<std::uint64_t> digit(add_cells.size(), 1);
    auto sum = [&](Subset a, Element z) {
      Subset out;
      for (Element x : a) out |= table[x * n + z];
      return out;
    };
    auto sum_left = [&](Element x, Subset b) {
      Subset out;
      for (Element y : b) out |= table[x * n + y];
      return out;
    };
    while (true) {
      for (std::size_t c = 0; c < add_cells.size(); ++c) {
        auto [i, j] = add_cells[c];
        table[i * n + j] = table[j * n + i] = Subset::from_mask(digit[c]);
      }
      bool assoc = true;
      for (Element x = 1; x < n && assoc; ++x)
        for (Element y = 1; y < n && assoc; ++y)
          for (Element z = 1; z < n && assoc; ++z)
            assoc = sum(table[x * n + y], z) == sum_left(x, table[y * n + z]);
      if (assoc) adds.push_back(table);
      std::size_t c = 0;
      while (c < digit.size() && ++digit[c] > nonempty) digit[c++] = 1;
      if (c == digit.size()) break;
    }
  }

  // Multiplication: all cells over nonzero elements.
  std::vector<std::vector<Element>> muls;
  {
    std::vector<Element> table(n * n, 0);
    const std::size_t cells = static_cast<std::size_t>(n - 1) * (n - 1);
    std::vector<Element> digit(cells, 0);
    while (true) {
      for (std::size_t c = 0; c < cells; ++c) {
        const Element i = static_cast<Element>(c / (n - 1) + 1);
        const Element j = static_cast<Element>(c % (n - 1) + 1);
        table[i * n + j] = digit[c];
      }
      bool assoc = true;
      for (Element x = 1; x < n && assoc; ++x)
        for (Element y = 1; y < n && assoc; ++y)
          for (Element z = 1; z < n && assoc; ++z)
            assoc = table[table[x * n + y] * n + z] == table[x * n + table[y * n + z]];
      if (assoc) muls.push_back(table);
      std::size_t c = 0;
      while (c < cells && ++digit[c] >= n) digit[c++] = 0;
      if (c == cells) break;
    }
  }

  std::set<TableEncoding> classes;
  for (const auto& add : adds)
    for (const auto& mul : muls) {
      bool dist = true;
      for (Element x = 1; x < n && dist; ++x)
        for (Element y = 1; y < n && dist; ++y)
          for (Element z = 1; z < n && dist; ++z) {
            Subset left, right;
            for (Element w : add[y * n + z]) left.insert(mul[x * n + w]);
            for (Element w : add[x * n + y]) right.insert(mul[w * n + z]);
            dist = left == add[mul[x * n + y] * n + mul[x * n + z]] &&
                   right == add[mul[x * n + z] * n + mul[y * n + z]];
          }
      if (!dist) continue;
      Semihyperring s(order, add, mul, 0);
      s = s.with_unity(find_unity(s));
      if (options.commutative_only && !s.commutative()) continue;
      if (options.unity_only && !s.has_unity()) continue;
      std::vector<Element> identity(order);
      std::iota(identity.begin(), identity.end(), Element{0});
      const auto canon = canonical_relabel(s);
      classes.insert(detail::encode_permuted(canon, identity));
    }

  std::vector<Semihyperring> out;
  std::size_t k = 0;
  for (const auto& code : classes) {
    out.push_back(detail::decode(order, code,
                                 "C" + std::to_string(order) + "_" +
                                     std::to_string(++k),
                                 {}));
  }
  return out;
}

}  // namespace shr
