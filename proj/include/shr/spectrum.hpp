#pragma once

#include <optional>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "shr/classify.hpp"
#include "shr/ideals.hpp"

namespace shr {

/// A set of spectrum points, indexed by position in `SpectrumTopology::points`.
using PointSet = boost::dynamic_bitset<>;

/// H(R): the proper irreducible hyperideals, in canonical order.
inline std::vector<Subset> irreducible_spectrum(const Semihyperring& s,
                                                const IdealLattice& l) {
  std::vector<Subset> out;
  for (Subset i : l.proper())
    if (is_irreducible(s, l, i)) out.push_back(i);
  return out;
}

/// Θ_I: the points J with I ⊈ J.
inline PointSet theta(const Semihyperring& s, const IdealLattice& l, Subset i,
                      const std::vector<Subset>& points) {
  if (i.empty() || !l.contains(i))
    throw precondition_error("theta: argument is not a hyperideal");
  (void)s;
  PointSet out(points.size());
  for (std::size_t p = 0; p < points.size(); ++p)
    if (!i.subset_of(points[p])) out.set(p);
  return out;
}

struct OpenSet {
  PointSet points;
  Subset generator;  // canonically least ideal with this Θ
};

struct SpectrumTopology {
  std::vector<Subset> points;
  std::vector<OpenSet> opens;
  std::vector<std::size_t> lattice_map;  // ideal index -> open index

  std::optional<std::size_t> find_open(const PointSet& p) const {
    for (std::size_t k = 0; k < opens.size(); ++k)
      if (opens[k].points == p) return k;
    return std::nullopt;
  }
};

/// The family {Θ_I : I a hyperideal}, deduplicated in lattice order.
inline SpectrumTopology spectrum_topology(const Semihyperring& s,
                                          const IdealLattice& l) {
  SpectrumTopology t;
  t.points = irreducible_spectrum(s, l);
  for (Subset i : l) {
    PointSet open = theta(s, l, i, t.points);
    auto k = t.find_open(open);
    if (!k) {
      k = t.opens.size();
      t.opens.push_back({std::move(open), i});
    }
    t.lattice_map.push_back(*k);
  }
  return t;
}

struct TopologyReport {
  bool has_empty = false;
  bool has_full = false;
  /// Some pair of opens intersects outside the family.
  std::optional<std::pair<std::size_t, std::size_t>> intersection_not_open;
  /// Ideals I, M with Θ_I ∩ Θ_M ≠ Θ_{I∩M}.
  std::optional<std::pair<Subset, Subset>> intersection_identity_fails;
  /// Some pair of opens unites outside the family.
  std::optional<std::pair<std::size_t, std::size_t>> union_not_open;
  /// A family of ideals with ∪Θ ≠ Θ of their sum.
  std::optional<std::vector<Subset>> union_identity_fails;
  /// Whether unions were checked over every subfamily (otherwise pairwise,
  /// which already covers every finite union by induction).
  bool all_subfamilies = false;

  bool pass() const {
    return has_empty && has_full && !intersection_not_open &&
           !intersection_identity_fails && !union_not_open &&
           !union_identity_fails;
  }
};

inline constexpr std::size_t subfamily_limit = 12;

inline TopologyReport verify_topology(const Semihyperring& s,
                                      const IdealLattice& l,
                                      const SpectrumTopology& t) {
  TopologyReport r;
  const std::size_t points = t.points.size();
  PointSet empty(points), full(points);
  full.set();
  r.has_empty = t.find_open(empty).has_value();
  r.has_full = t.find_open(full).has_value();

  const std::size_t k = t.opens.size();
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b) {
      if (!r.intersection_not_open &&
          !t.find_open(t.opens[a].points & t.opens[b].points))
        r.intersection_not_open = std::pair{a, b};
      if (!r.union_not_open && !t.find_open(t.opens[a].points | t.opens[b].points))
        r.union_not_open = std::pair{a, b};
    }

  auto open_of = [&](std::size_t ideal) { return t.opens[t.lattice_map[ideal]].points; };
  for (std::size_t i = 0; i < l.size(); ++i)
    for (std::size_t m = i + 1; m < l.size(); ++m) {
      if (!r.intersection_identity_fails) {
        const Subset meet = l[i] & l[m];
        if ((open_of(i) & open_of(m)) != theta(s, l, meet, t.points))
          r.intersection_identity_fails = std::pair{l[i], l[m]};
      }
      if (!r.union_identity_fails) {
        const Subset sum = ideal_sum(s, l[i], l[m]);
        if ((open_of(i) | open_of(m)) != theta(s, l, sum, t.points))
          r.union_identity_fails = std::vector{l[i], l[m]};
      }
    }

  if (l.size() <= subfamily_limit) {
    r.all_subfamilies = true;
    const std::uint64_t families = std::uint64_t{1} << l.size();
    for (std::uint64_t f = 1; f < families && !r.union_identity_fails; ++f) {
      PointSet united(points);
      std::optional<Subset> sum;
      std::vector<Subset> members;
      for (std::size_t i = 0; i < l.size(); ++i) {
        if (!(f >> i & 1)) continue;
        united |= open_of(i);
        sum = sum ? ideal_sum(s, *sum, l[i]) : l[i];
        members.push_back(l[i]);
      }
      if (united != theta(s, l, *sum, t.points))
        r.union_identity_fails = std::move(members);
    }
  }
  return r;
}

struct LatticeMapReport {
  std::size_t ideals = 0;
  std::size_t opens = 0;
  bool injective = true;
  bool order_preserving = true;
  bool order_reflecting = true;
  bool surjective = true;
  std::optional<std::pair<Subset, Subset>> witness;

  bool pass() const {
    return injective && order_preserving && order_reflecting && surjective;
  }
};

/// Checks that I ↦ Θ_I is an order isomorphism from the ideal lattice onto
/// the family of opens.
inline LatticeMapReport lattice_map_check(const IdealLattice& l,
                                          const SpectrumTopology& t) {
  LatticeMapReport r;
  r.ideals = l.size();
  r.opens = t.opens.size();
  std::vector<bool> hit(t.opens.size(), false);
  for (std::size_t i = 0; i < l.size(); ++i) hit[t.lattice_map[i]] = true;
  for (bool h : hit) r.surjective = r.surjective && h;
  for (std::size_t i = 0; i < l.size(); ++i)
    for (std::size_t m = 0; m < l.size(); ++m) {
      const PointSet& a = t.opens[t.lattice_map[i]].points;
      const PointSet& b = t.opens[t.lattice_map[m]].points;
      const bool ideal_leq = l.leq(i, m);
      const bool open_leq = a.is_subset_of(b);
      auto fail = [&](bool& flag) {
        flag = false;
        if (!r.witness) r.witness = std::pair{l[i], l[m]};
      };
      if (i != m && t.lattice_map[i] == t.lattice_map[m] && r.injective)
        fail(r.injective);
      if (ideal_leq && !open_leq && r.order_preserving) fail(r.order_preserving);
      if (open_leq && !ideal_leq && r.order_reflecting) fail(r.order_reflecting);
    }
  return r;
}

/// A maximal hyperideal containing I and avoiding a; the canonically least
/// one when several are maximal.
inline Subset irreducible_avoiding(const Semihyperring& s,
                                   const IdealLattice& l, Subset i, Element a) {
  if (i.empty() || !l.contains(i))
    throw precondition_error("irreducible_avoiding: I is not a hyperideal");
  if (a >= s.order()) throw precondition_error("irreducible_avoiding: bad element");
  if (i.contains(a))
    throw precondition_error("irreducible_avoiding: a lies in I");
  if (a == s.zero())
    throw precondition_error("irreducible_avoiding: a must be nonzero");
  std::vector<Subset> candidates;
  for (Subset j : l)
    if (i.subset_of(j) && !j.contains(a)) candidates.push_back(j);
  for (Subset j : candidates) {
    bool maximal = true;
    for (Subset k : candidates) maximal = maximal && !j.proper_subset_of(k);
    if (maximal) return j;  // candidates are in canonical order
  }
  return i;  // unreachable: I itself is a candidate
}

/// The spectrum points containing I, or [R] when there are none.
inline std::vector<Subset> irreducible_decomposition(const Semihyperring& s,
                                                     const IdealLattice& l,
                                                     Subset i) {
  if (i.empty() || !l.contains(i))
    throw precondition_error("irreducible_decomposition: not a hyperideal");
  std::vector<Subset> out;
  for (Subset p : irreducible_spectrum(s, l))
    if (i.subset_of(p)) out.push_back(p);
  if (out.empty()) out.push_back(s.carrier());
  return out;
}

struct RegularEquivalences {
  bool regular = false;             // every element a = a·b·a
  bool idempotent_ideals = false;   // I·I = I for every ideal
  bool meet_is_product = false;     // I ∩ J = IJ for every pair
  bool semiprime_ideals = false;    // every proper ideal semiprime
  std::optional<Subset> witness;    // first ideal breaking a false condition

  bool agree() const {
    return regular == idempotent_ideals && regular == meet_is_product &&
           regular == semiprime_ideals;
  }
};

/// Evaluates the four regularity conditions of a commutative structure with
/// unity independently.
inline RegularEquivalences regular_equivalences(const Semihyperring& s,
                                                const IdealLattice& l) {
  if (!s.commutative() || !s.has_unity())
    throw hypothesis_error(
        "regular_equivalences: requires commutative multiplication and unity");
  RegularEquivalences r;
  r.regular = is_multiplicatively_regular(s);
  r.idempotent_ideals = true;
  for (Subset i : l)
    if (!is_idempotent(s, i)) {
      r.idempotent_ideals = false;
      if (!r.witness) r.witness = i;
      break;
    }
  r.meet_is_product = true;
  for (Subset i : l) {
    for (Subset j : l)
      if ((i & j) != sums_of_products(s, i, j)) {
        r.meet_is_product = false;
        if (!r.witness) r.witness = i;
        break;
      }
    if (!r.meet_is_product) break;
  }
  r.semiprime_ideals = true;
  for (Subset i : l.proper())
    if (!is_semiprime(s, l, i)) {
      r.semiprime_ideals = false;
      if (!r.witness) r.witness = i;
      break;
    }
  return r;
}

}  // namespace shr
