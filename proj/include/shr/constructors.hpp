#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "shr/semihyperring.hpp"

namespace shr {

/// A topology on the points {0, ..., point_count - 1}.
struct FiniteTopology {
  std::size_t point_count = 0;
  std::vector<Subset> opens;
};

/// The residues of a subgroup N of the unit group of Z_n.
struct QuotientSpec {
  unsigned modulus = 0;
  std::vector<unsigned> subgroup;
};

namespace detail {

inline std::string render_points(Subset s) {
  std::string out = "{";
  bool first = true;
  for (Element p : s) {
    if (!first) out += ",";
    out += std::to_string(p + 1);
    first = false;
  }
  return out + "}";
}

}  // namespace detail

/// Opens of `t`, deduplicated and sorted canonically; throws
/// `invalid_topology_error` naming the violated condition.
inline std::vector<Subset> validated_opens(const FiniteTopology& t) {
  if (t.point_count == 0 || t.point_count >= max_order)
    throw invalid_topology_error("point count must lie in [1, 63]");
  const Subset space = Subset::full(t.point_count);
  std::vector<Subset> opens = t.opens;
  std::sort(opens.begin(), opens.end(), CanonicalLess{});
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
  for (Subset u : opens)
    if (!u.subset_of(space))
      throw invalid_topology_error("open set " + detail::render_points(u) +
                                   " contains a point outside the space");
  auto has = [&](Subset u) {
    return std::binary_search(opens.begin(), opens.end(), u, CanonicalLess{});
  };
  if (!has(Subset{})) throw invalid_topology_error("empty set missing");
  if (!has(space)) throw invalid_topology_error("full set missing");
  for (Subset u : opens)
    for (Subset v : opens) {
      if (!has(u | v))
        throw invalid_topology_error("not closed under union: " +
                                     detail::render_points(u) + " and " +
                                     detail::render_points(v));
      if (!has(u & v))
        throw invalid_topology_error("not closed under intersection: " +
                                     detail::render_points(u) + " and " +
                                     detail::render_points(v));
    }
  if (opens.size() > max_order)
    throw invalid_topology_error("more than 64 open sets");
  return opens;
}

/// The semihyperring of open sets with A + B = {A ∪ B} and A·B = A ∩ B.
/// Zero is the empty set, unity the whole space.
inline Semihyperring from_topology(const FiniteTopology& t,
                                   std::string name = "topology") {
  const auto opens = validated_opens(t);
  const std::size_t n = opens.size();
  std::map<std::uint64_t, Element> index;
  for (Element i = 0; i < n; ++i) index[opens[i].mask()] = i;

  std::vector<Subset> add(n * n);
  std::vector<Element> mul(n * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      add[a * n + b] = Subset::singleton(index.at((opens[a] | opens[b]).mask()));
      mul[a * n + b] = index.at((opens[a] & opens[b]).mask());
    }
  return {n, std::move(add), std::move(mul), 0,
          static_cast<Element>(n - 1), std::move(name)};
}

/// Every topology on `points` points (labelled, not up to homeomorphism),
/// ordered by the integer encoding of their open-set families.
inline std::vector<FiniteTopology> all_topologies(std::size_t points) {
  if (points == 0 || points > 4)
    throw precondition_error("all_topologies supports 1 to 4 points");
  const std::uint64_t space = Subset::full(points).mask();
  // Candidate opens are the proper nonempty subsets of the space.
  std::vector<Subset> middle;
  for (std::uint64_t m = 1; m < space; ++m) middle.push_back(Subset::from_mask(m));
  std::vector<FiniteTopology> out;
  const std::uint64_t families = std::uint64_t{1} << middle.size();
  for (std::uint64_t f = 0; f < families; ++f) {
    std::vector<Subset> opens{Subset{}, Subset::from_mask(space)};
    for (std::size_t i = 0; i < middle.size(); ++i)
      if (f >> i & 1) opens.push_back(middle[i]);
    std::vector<bool> member(space + 1, false);
    for (Subset u : opens) member[u.mask()] = true;
    bool closed = true;
    for (Subset u : opens) {
      for (Subset v : opens)
        if (!member[(u | v).mask()] || !member[(u & v).mask()]) {
          closed = false;
          break;
        }
      if (!closed) break;
    }
    if (closed) out.push_back({points, std::move(opens)});
  }
  return out;
}

inline std::vector<unsigned> validated_subgroup(const QuotientSpec& q) {
  const unsigned n = q.modulus;
  if (n < 2) throw invalid_subgroup_error("modulus must be at least 2");
  std::vector<unsigned> sub = q.subgroup;
  std::sort(sub.begin(), sub.end());
  sub.erase(std::unique(sub.begin(), sub.end()), sub.end());
  auto has = [&](unsigned r) {
    return std::binary_search(sub.begin(), sub.end(), r);
  };
  for (unsigned r : sub) {
    if (r >= n)
      throw invalid_subgroup_error("residue " + std::to_string(r) +
                                   " is not reduced modulo " + std::to_string(n));
    if (std::gcd(r, n) != 1)
      throw invalid_subgroup_error(std::to_string(r) + " is not a unit mod " +
                                   std::to_string(n));
  }
  if (!has(1 % n)) throw invalid_subgroup_error("subgroup must contain 1");
  for (unsigned a : sub)
    for (unsigned b : sub)
      if (!has(a * b % n))
        throw invalid_subgroup_error(
            "not closed under product: " + std::to_string(a) + "*" +
            std::to_string(b) + "=" + std::to_string(a * b % n));
  for (unsigned a : sub) {
    bool inverse = false;
    for (unsigned b : sub) inverse = inverse || a * b % n == 1;
    if (!inverse)
      throw invalid_subgroup_error(std::to_string(a) + " has no inverse");
  }
  return sub;
}

/// The quotient hyperring Z_n / N over multiplicative classes xN.
///
/// Classes are indexed ascending by their least residue, so the zero class
/// comes first. The sum of two classes is every class meeting the
/// elementwise sums; the product is the class of any product.
inline Semihyperring quotient_hyperring(const QuotientSpec& q,
                                        std::string name = {}) {
  const auto sub = validated_subgroup(q);
  const unsigned n = q.modulus;
  std::vector<Element> class_of(n, 0);
  std::vector<unsigned> rep;  // least residue of each class
  std::vector<bool> seen(n, false);
  for (unsigned x = 0; x < n; ++x) {
    if (seen[x]) continue;
    const auto c = static_cast<Element>(rep.size());
    rep.push_back(x);
    for (unsigned u : sub) {
      seen[x * u % n] = true;
      class_of[x * u % n] = c;
    }
  }
  const std::size_t order = rep.size();
  if (order > max_order) throw structure_error("quotient has too many classes");

  std::vector<std::vector<unsigned>> members(order);
  for (unsigned x = 0; x < n; ++x) members[class_of[x]].push_back(x);

  std::vector<Subset> add(order * order);
  std::vector<Element> mul(order * order);
  for (Element a = 0; a < order; ++a)
    for (Element b = 0; b < order; ++b) {
      Subset cell;
      for (unsigned x : members[a])
        for (unsigned y : members[b]) cell.insert(class_of[(x + y) % n]);
      add[a * order + b] = cell;
      mul[a * order + b] = class_of[rep[a] * rep[b] % n];
    }
  std::vector<std::string> labels;
  for (unsigned r : rep) labels.push_back("c" + std::to_string(r));
  if (name.empty()) {
    name = "Z" + std::to_string(n) + "_N";
    for (unsigned r : sub) name += "_" + std::to_string(r);
  }
  return {order,       std::move(add),  std::move(mul),    0,
          class_of[1], std::move(name), std::move(labels)};
}

/// Subgroups of the unit group of Z_n, each as a sorted residue list.
inline std::vector<std::vector<unsigned>> unit_subgroups(unsigned n) {
  std::vector<unsigned> unit_list;
  for (unsigned r = 1; r < n; ++r)
    if (std::gcd(r, n) == 1) unit_list.push_back(r);
  std::vector<std::vector<unsigned>> out;
  const std::uint64_t count = std::uint64_t{1} << unit_list.size();
  for (std::uint64_t m = 1; m < count; ++m) {
    std::vector<unsigned> sub;
    for (std::size_t i = 0; i < unit_list.size(); ++i)
      if (m >> i & 1) sub.push_back(unit_list[i]);
    // A finite nonempty subset closed under product is a subgroup.
    bool closed = true;
    for (unsigned a : sub)
      for (unsigned b : sub)
        closed = closed && std::binary_search(sub.begin(), sub.end(), a * b % n);
    if (closed) out.push_back(std::move(sub));
  }
  return out;
}

/// Componentwise product; element (i, j) has index i * |S2| + j.
inline Semihyperring direct_product(const Semihyperring& s1,
                                    const Semihyperring& s2) {
  const std::size_t n1 = s1.order(), n2 = s2.order(), n = n1 * n2;
  if (n > max_order) throw structure_error("direct product exceeds 64 elements");
  auto idx = [n2](Element i, Element j) { return static_cast<Element>(i * n2 + j); };
  std::vector<Subset> add(n * n);
  std::vector<Element> mul(n * n);
  for (Element a1 = 0; a1 < n1; ++a1)
    for (Element a2 = 0; a2 < n2; ++a2)
      for (Element b1 = 0; b1 < n1; ++b1)
        for (Element b2 = 0; b2 < n2; ++b2) {
          const std::size_t cell = idx(a1, a2) * n + idx(b1, b2);
          Subset sum;
          for (Element x : s1.add(a1, b1))
            for (Element y : s2.add(a2, b2)) sum.insert(idx(x, y));
          add[cell] = sum;
          mul[cell] = idx(s1.mul(a1, b1), s2.mul(a2, b2));
        }
  std::optional<Element> unity;
  if (s1.unity() && s2.unity()) unity = idx(*s1.unity(), *s2.unity());
  std::vector<std::string> labels;
  for (Element i = 0; i < n1; ++i)
    for (Element j = 0; j < n2; ++j)
      labels.push_back(s1.label(i) + "_" + s2.label(j));
  return {n,     std::move(add), std::move(mul), idx(s1.zero(), s2.zero()),
          unity, s1.name() + "x" + s2.name(), std::move(labels)};
}

/// The named structures used throughout the tests and documentation.
namespace fixtures {

/// Topology {∅, {1}, {1,2}} on two points.
inline Semihyperring top2() {
  FiniteTopology t{2, {Subset{}, Subset{0}, Subset{0, 1}}};
  return from_topology(t, "TOP2");
}

/// Z_5 / {1,4}: classes O={0}, A={1,4}, B={2,3}.
inline Semihyperring kq5() {
  return quotient_hyperring({5, {1, 4}}, "KQ5").with_labels({"O", "A", "B"});
}

/// Z_6 / {1,5}: classes O={0}, U={1,5}, V={2,4}, W={3}.
inline Semihyperring kq6() {
  return quotient_hyperring({6, {1, 5}}, "KQ6")
      .with_labels({"O", "U", "V", "W"});
}

/// The one-element structure {0}, without a declared unity.
inline Semihyperring zero1() {
  return {1, {Subset{0}}, {0}, 0, std::nullopt, "ZERO1", {"0"}};
}

}  // namespace fixtures

}  // namespace shr
