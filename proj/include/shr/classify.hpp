#pragma once

#include <vector>

#include "shr/ideals.hpp"
#include "shr/semihyperring.hpp"

namespace shr {

// ---------------------------------------------------------------------------
// Opposites and additive structure

/// For each a, the set of b with 0 ∈ a + b. Opposites need not exist or be
/// unique in a semihyperring.
using OppositeTable = std::vector<Subset>;

inline OppositeTable opposites(const Semihyperring& s) {
  OppositeTable out(s.order());
  for (Element a = 0; a < s.order(); ++a)
    for (Element b = 0; b < s.order(); ++b)
      if (s.add(a, b).contains(s.zero())) out[a].insert(b);
  return out;
}

/// V_H(R): elements that have at least one opposite.
inline Subset v_h(const Semihyperring& s) {
  const auto opp = opposites(s);
  Subset out;
  for (Element a = 0; a < s.order(); ++a)
    if (!opp[a].empty()) out.insert(a);
  return out;
}

inline bool is_zero_sumfree(const Semihyperring& s) {
  return v_h(s) == Subset::singleton(s.zero());
}

/// Zero-sumfreeness straight from its definition: 0 ∈ r + r' forces
/// r = r' = 0.
inline bool is_zero_sumfree_direct(const Semihyperring& s) {
  for (Element r = 0; r < s.order(); ++r)
    for (Element q = 0; q < s.order(); ++q)
      if (s.add(r, q).contains(s.zero()) && (r != s.zero() || q != s.zero()))
        return false;
  return true;
}

/// a ∈ b + c implies b ∈ a + ĉ and c ∈ a + b̂ for some opposites ĉ, b̂.
/// An element without opposites fails the condition wherever it appears as
/// b or c.
inline bool is_additively_reversive(const Semihyperring& s) {
  const auto opp = opposites(s);
  const auto n = static_cast<Element>(s.order());
  auto reachable = [&](Element a, Subset candidates, Element target) {
    for (Element c : candidates)
      if (s.add(a, c).contains(target)) return true;
    return false;
  };
  for (Element b = 0; b < n; ++b)
    for (Element c = 0; c < n; ++c)
      for (Element a : s.add(b, c))
        if (!reachable(a, opp[c], b) || !reachable(a, opp[b], c)) return false;
  return true;
}

/// Hyperring test through the characterization V_H(R) = R together with
/// additive reversibility.
inline bool is_hyperring(const Semihyperring& s) {
  return v_h(s) == s.carrier() && is_additively_reversive(s);
}

/// Hyperring test straight from the definition: (R,+) is an abelian
/// canonical hypergroup (associative, identity, a unique opposite for every
/// element, reversible), and the multiplicative laws hold.
inline bool is_canonical_hyperring(const Semihyperring& s) {
  const AxiomReport& ax = s.axioms();
  for (Axiom a : {Axiom::add_associativity, Axiom::add_identity,
                  Axiom::add_commutativity, Axiom::mul_associativity,
                  Axiom::left_distributivity, Axiom::right_distributivity,
                  Axiom::zero_absorbing})
    if (!ax[a].pass) return false;
  const auto n = static_cast<Element>(s.order());
  std::vector<Element> inverse(n);
  for (Element x = 0; x < n; ++x) {
    int count = 0;
    for (Element y = 0; y < n; ++y)
      if (s.add(x, y).contains(s.zero()) && s.add(y, x).contains(s.zero())) {
        inverse[x] = y;
        ++count;
      }
    if (count != 1) return false;
  }
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z : s.add(x, y))
        if (!s.add(z, inverse[y]).contains(x) ||
            !s.add(inverse[x], z).contains(y))
          return false;
  return true;
}

// ---------------------------------------------------------------------------
// Subset predicates

/// a ∈ A and a + b ⊆ A imply b ∈ A.
inline bool is_hypersubtractive(const Semihyperring& s, Subset a) {
  if (a.empty()) throw empty_operand_error("is_hypersubtractive");
  for (Element x : a)
    for (Element b = 0; b < s.order(); ++b)
      if (s.add(x, b).subset_of(a) && !a.contains(b)) return false;
  return true;
}

/// a + b ⊆ A implies a ∈ A and b ∈ A.
inline bool is_hyperstrong(const Semihyperring& s, Subset a) {
  if (a.empty()) throw empty_operand_error("is_hyperstrong");
  for (Element x = 0; x < s.order(); ++x)
    for (Element y = 0; y < s.order(); ++y)
      if (s.add(x, y).subset_of(a) && (!a.contains(x) || !a.contains(y)))
        return false;
  return true;
}

/// Every opposite of every a ∈ A ∩ V_H(R) lies in A ∩ V_H(R).
inline bool is_semihypersubtractive(const Semihyperring& s, Subset a) {
  if (a.empty()) throw empty_operand_error("is_semihypersubtractive");
  const auto opp = opposites(s);
  Subset vh;
  for (Element x = 0; x < s.order(); ++x)
    if (!opp[x].empty()) vh.insert(x);
  for (Element x : a & vh)
    if (!opp[x].subset_of(a & vh)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Multiplicative regularity

/// a = a·b·a for some b.
inline bool is_regular_element(const Semihyperring& s, Element a) {
  for (Element b = 0; b < s.order(); ++b)
    if (s.mul(s.mul(a, b), a) == a) return true;
  return false;
}

inline bool is_multiplicatively_regular(const Semihyperring& s) {
  for (Element a = 0; a < s.order(); ++a)
    if (!is_regular_element(s, a)) return false;
  return true;
}

/// HI = H ∩ I for every right hyperideal H and left hyperideal I.
inline bool regularity_product_test(const Semihyperring& s,
                                    std::size_t cap = default_ideal_cap) {
  if (!s.has_unity())
    throw hypothesis_error("regularity_product_test: structure has no unity");
  const auto rights = enumerate_right_hyperideals(s, cap);
  const auto lefts = enumerate_left_hyperideals(s, cap);
  for (Subset h : rights)
    for (Subset i : lefts)
      if (sums_of_products(s, h, i) != (h & i)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Ideal classification. Each predicate applies to proper hyperideals only
// and quantifies over the supplied lattice.

inline void require_proper_ideal(const Semihyperring& s, const IdealLattice& l,
                                 Subset i, const char* op) {
  if (i.empty() || !l.contains(i))
    throw precondition_error(std::string(op) + ": argument is not a hyperideal");
  if (i == s.carrier())
    throw precondition_error(std::string(op) + ": argument is not proper");
}

namespace detail {

inline bool prime_unchecked(const Semihyperring& s, const IdealLattice& l,
                            Subset p) {
  for (Subset i : l)
    for (Subset j : l)
      if (sums_of_products(s, i, j).subset_of(p) && !i.subset_of(p) &&
          !j.subset_of(p))
        return false;
  return true;
}

inline bool semiprime_unchecked(const Semihyperring& s, const IdealLattice& l,
                                Subset p) {
  for (Subset h : l)
    if (sums_of_products(s, h, h).subset_of(p) && !h.subset_of(p)) return false;
  return true;
}

/// {a·r·b : r ∈ R}.
inline Subset arb(const Semihyperring& s, Element a, Element b) {
  Subset out;
  for (Element r = 0; r < s.order(); ++r) out.insert(s.mul(s.mul(a, r), b));
  return out;
}

}  // namespace detail

/// IJ ⊆ P implies I ⊆ P or J ⊆ P, over all hyperideals I, J.
inline bool is_prime(const Semihyperring& s, const IdealLattice& l, Subset p) {
  require_proper_ideal(s, l, p, "is_prime");
  return detail::prime_unchecked(s, l, p);
}

/// Elementwise primeness: aRb ⊆ P implies a ∈ P or b ∈ P.
inline bool prime_by_elements(const Semihyperring& s, const IdealLattice& l,
                              Subset p) {
  require_proper_ideal(s, l, p, "prime_by_elements");
  for (Element a = 0; a < s.order(); ++a)
    for (Element b = 0; b < s.order(); ++b)
      if (detail::arb(s, a, b).subset_of(p) && !p.contains(a) && !p.contains(b))
        return false;
  return true;
}

/// ⟨a⟩⟨b⟩ ⊆ P implies a ∈ P or b ∈ P.
inline bool prime_by_generated(const Semihyperring& s, const IdealLattice& l,
                               Subset p) {
  require_proper_ideal(s, l, p, "prime_by_generated");
  std::vector<Subset> gen(s.order());
  for (Element a = 0; a < s.order(); ++a)
    gen[a] = ideal_generated(s, Subset::singleton(a));
  for (Element a = 0; a < s.order(); ++a)
    for (Element b = 0; b < s.order(); ++b)
      if (sums_of_products(s, gen[a], gen[b]).subset_of(p) && !p.contains(a) &&
          !p.contains(b))
        return false;
  return true;
}

/// H² ⊆ I implies H ⊆ I, over all hyperideals H.
inline bool is_semiprime(const Semihyperring& s, const IdealLattice& l,
                         Subset p) {
  require_proper_ideal(s, l, p, "is_semiprime");
  return detail::semiprime_unchecked(s, l, p);
}

/// aRa ⊆ I implies a ∈ I.
inline bool semiprime_by_elements(const Semihyperring& s,
                                  const IdealLattice& l, Subset p) {
  require_proper_ideal(s, l, p, "semiprime_by_elements");
  for (Element a = 0; a < s.order(); ++a)
    if (detail::arb(s, a, a).subset_of(p) && !p.contains(a)) return false;
  return true;
}

/// I = H ∩ K implies I = H or I = K.
inline bool is_irreducible(const Semihyperring& s, const IdealLattice& l,
                           Subset p) {
  require_proper_ideal(s, l, p, "is_irreducible");
  for (Subset h : l)
    for (Subset k : l)
      if ((h & k) == p && h != p && k != p) return false;
  return true;
}

/// H ∩ K ⊆ I implies H ⊆ I or K ⊆ I.
inline bool is_strongly_irreducible(const Semihyperring& s,
                                    const IdealLattice& l, Subset p) {
  require_proper_ideal(s, l, p, "is_strongly_irreducible");
  for (Subset h : l)
    for (Subset k : l)
      if ((h & k).subset_of(p) && !h.subset_of(p) && !k.subset_of(p))
        return false;
  return true;
}

/// No proper hyperideal lies strictly between I and R.
inline bool is_maximal(const Semihyperring& s, const IdealLattice& l,
                       Subset p) {
  require_proper_ideal(s, l, p, "is_maximal");
  for (Subset j : l)
    if (p.proper_subset_of(j) && j != s.carrier()) return false;
  return true;
}

inline bool is_idempotent(const Semihyperring& s, Subset i) {
  return sums_of_products(s, i, i) == i;
}

/// For all a, b ∈ A some a·r·b lies in A.
inline bool is_m_system(const Semihyperring& s, Subset a) {
  if (a.empty()) throw empty_operand_error("is_m_system");
  for (Element x : a)
    for (Element y : a)
      if (!detail::arb(s, x, y).intersects(a)) return false;
  return true;
}

/// For all a ∈ A some a·r·a lies in A.
inline bool is_p_system(const Semihyperring& s, Subset a) {
  if (a.empty()) throw empty_operand_error("is_p_system");
  for (Element x : a)
    if (!detail::arb(s, x, x).intersects(a)) return false;
  return true;
}

/// For all a, b ∈ A, ⟨a⟩ ∩ ⟨b⟩ ∩ A is nonempty.
inline bool is_i_system(const Semihyperring& s, Subset a) {
  if (a.empty()) throw empty_operand_error("is_i_system");
  std::vector<Subset> gen(s.order());
  for (Element x : a) gen[x] = ideal_generated(s, Subset::singleton(x));
  for (Element x : a)
    for (Element y : a)
      if ((gen[x] & gen[y] & a).empty()) return false;
  return true;
}

/// (I : H) = {r : r·h ∈ I for all h ∈ H}, for hyperideals I ⊊ H.
inline Subset transporter(const Semihyperring& s, Subset i, Subset h) {
  require_hyperideal(s, i, "transporter");
  require_hyperideal(s, h, "transporter");
  if (!i.proper_subset_of(h))
    throw precondition_error("transporter: I must be properly contained in H");
  Subset out;
  for (Element r = 0; r < s.order(); ++r) {
    bool inside = true;
    for (Element x : h) inside = inside && i.contains(s.mul(r, x));
    if (inside) out.insert(r);
  }
  return out;
}

/// a·b ∈ I implies a ∈ I or b ∈ I; requires commutative multiplication.
inline bool commutative_prime_elementwise(const Semihyperring& s,
                                          const IdealLattice& l, Subset p) {
  if (!s.commutative())
    throw hypothesis_error(
        "commutative_prime_elementwise: multiplication is not commutative");
  require_proper_ideal(s, l, p, "commutative_prime_elementwise");
  for (Element a = 0; a < s.order(); ++a)
    for (Element b = 0; b < s.order(); ++b)
      if (p.contains(s.mul(a, b)) && !p.contains(a) && !p.contains(b))
        return false;
  return true;
}

struct IdealClassification {
  Subset ideal;
  bool proper = false;
  bool prime = false;
  bool semiprime = false;
  bool irreducible = false;
  bool strongly_irreducible = false;
  bool maximal = false;
  bool idempotent = false;
};

/// All flags of one hyperideal. The whole carrier is reported with only
/// `idempotent` computed.
inline IdealClassification classify_ideal(const Semihyperring& s,
                                          const IdealLattice& l, Subset i) {
  if (!l.contains(i))
    throw precondition_error("classify_ideal: argument is not a hyperideal");
  IdealClassification c;
  c.ideal = i;
  c.idempotent = is_idempotent(s, i);
  c.proper = i != s.carrier();
  if (!c.proper) return c;
  c.prime = is_prime(s, l, i);
  c.semiprime = is_semiprime(s, l, i);
  c.irreducible = is_irreducible(s, l, i);
  c.strongly_irreducible = is_strongly_irreducible(s, l, i);
  c.maximal = is_maximal(s, l, i);
  return c;
}

}  // namespace shr
