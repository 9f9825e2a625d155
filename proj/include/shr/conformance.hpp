#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "shr/classify.hpp"
#include "shr/ideals.hpp"
#include "shr/spectrum.hpp"
#include "shr/textio.hpp"

namespace shr {

enum class Verdict { pass, fail, skip };

constexpr std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "PASS";
    case Verdict::fail: return "FAIL";
    case Verdict::skip: return "SKIP";
  }
  return "?";
}

struct CheckResult {
  std::string id;
  Verdict verdict = Verdict::pass;
  std::string detail;    // witness for FAIL, reason for SKIP
  bool sampled = false;  // subset quantification was sampled, not exhaustive
  double seconds = 0;
};

struct ConformanceReport {
  std::string structure;
  std::vector<CheckResult> checks;

  bool any_fail() const {
    for (const auto& c : checks)
      if (c.verdict == Verdict::fail) return true;
    return false;
  }
  const CheckResult* find(std::string_view id) const {
    for (const auto& c : checks)
      if (c.id == id) return &c;
    return nullptr;
  }
};

struct ConformanceOptions {
  std::size_t ideal_cap = default_ideal_cap;
  /// Subset-quantified checks are exhaustive up to this order, sampled above.
  std::size_t subset_cap = 12;
  std::size_t samples = 4096;
  std::uint64_t seed = 20100313;
};

/// Shared, read-only data for one structure's checks.
struct CheckContext {
  CheckContext(const Semihyperring& structure, const ConformanceOptions& opts)
      : s(structure),
        options(opts),
        lattice(enumerate_hyperideals(structure, opts.ideal_cap)),
        proper(lattice.proper()),
        lefts(enumerate_left_hyperideals(structure, opts.ideal_cap)),
        rights(enumerate_right_hyperideals(structure, opts.ideal_cap)) {
    const std::uint64_t full = s.carrier().mask();
    if (s.order() <= opts.subset_cap) {
      for (std::uint64_t m = 1; m != 0 && m <= full; ++m)
        subsets.push_back(Subset::from_mask(m));
    } else {
      sampled = true;
      std::mt19937_64 rng(opts.seed);
      while (subsets.size() < opts.samples) {
        const std::uint64_t m = rng() & full;
        if (m != 0) subsets.push_back(Subset::from_mask(m));
      }
    }
  }

  std::string fmt(Subset x) const { return format_subset(s, x); }
  std::string fmt(Element e) const { return s.label(e); }

  const Semihyperring& s;
  const ConformanceOptions& options;
  IdealLattice lattice;
  std::vector<Subset> proper;
  std::vector<Subset> lefts;
  std::vector<Subset> rights;
  std::vector<Subset> subsets;
  bool sampled = false;
};

struct Outcome {
  Verdict verdict = Verdict::pass;
  std::string detail;
  bool sampled = false;

  static Outcome pass() { return {}; }
  static Outcome fail(std::string witness) { return {Verdict::fail, std::move(witness)}; }
  static Outcome skip(std::string reason) { return {Verdict::skip, std::move(reason)}; }
};

struct Check {
  std::string_view id;
  std::string_view summary;
  std::function<Outcome(const CheckContext&)> run;
};

namespace detail {

inline std::string yes_no(bool b) { return b ? "true" : "false"; }

inline Outcome needs_unity() {
  return Outcome::skip("structure has no unity");
}
inline Outcome needs_commutative() {
  return Outcome::skip("multiplication is not commutative");
}

inline Outcome sampled_pass(const CheckContext& c) {
  Outcome o;
  o.sampled = c.sampled;
  return o;
}

}  // namespace detail

/// Every theorem check, in id order.
inline const std::vector<Check>& check_registry() {
  using detail::yes_no;
  static const std::vector<Check> registry{
      {"P2.10", "every one-sided hyperideal is a subsemihyperring",
       [](const CheckContext& c) {
         for (const auto* family : {&c.lefts, &c.rights})
           for (Subset i : *family)
             if (!is_subsemihyperring(c.s, i))
               return Outcome::fail("one-sided ideal " + c.fmt(i) +
                                    " is not a subsemihyperring");
         return Outcome::pass();
       }},
      {"T2.16", "hyperring iff V_H(R) = R and additively reversive",
       [](const CheckContext& c) {
         const bool characterization = is_hyperring(c.s);
         const bool definition = is_canonical_hyperring(c.s);
         if (characterization != definition)
           return Outcome::fail("V_H=R and reversive: " + yes_no(characterization) +
                                "; canonical hypergroup definition: " +
                                yes_no(definition));
         return Outcome::pass();
       }},
      {"T2.18", "zero sumfree iff V_H(R) = {0}",
       [](const CheckContext& c) {
         const bool direct = is_zero_sumfree_direct(c.s);
         const Subset vh = v_h(c.s);
         if (direct != (vh == Subset::singleton(c.s.zero())))
           return Outcome::fail("zero sumfree: " + yes_no(direct) +
                                "; V_H = " + c.fmt(vh));
         return Outcome::pass();
       }},
      {"R2.20", "hyperstrong subsets are hypersubtractive",
       [](const CheckContext& c) {
         for (Subset a : c.subsets)
           if (is_hyperstrong(c.s, a) && !is_hypersubtractive(c.s, a))
             return Outcome::fail("A = " + c.fmt(a));
         return detail::sampled_pass(c);
       }},
      {"R2.21", "hypersubtractive with a + â = {0} is semihypersubtractive",
       [](const CheckContext& c) {
         const Subset zero = Subset::singleton(c.s.zero());
         for (Subset b : c.subsets) {
           bool hypothesis = is_hypersubtractive(c.s, b);
           for (Element a : b) {
             if (!hypothesis) break;
             bool found = false;
             for (Element o = 0; o < c.s.order() && !found; ++o)
               found = c.s.add(a, o) == zero;
             hypothesis = found;
           }
           if (hypothesis && !is_semihypersubtractive(c.s, b))
             return Outcome::fail("B = " + c.fmt(b));
         }
         return detail::sampled_pass(c);
       }},
      {"T2.22", "intersections of hyperideals are hyperideals",
       [](const CheckContext& c) {
         for (Subset i : c.lattice)
           for (Subset j : c.lattice)
             if (!is_hyperideal(c.s, i & j))
               return Outcome::fail(c.fmt(i) + " ∩ " + c.fmt(j));
         return Outcome::pass();
       }},
      {"T2.23", "A + B is the least hyperideal containing A and B",
       [](const CheckContext& c) {
         for (Subset a : c.lattice)
           for (Subset b : c.lattice) {
             const Subset sum = ideal_sum(c.s, a, b);
             if (!is_hyperideal(c.s, sum) || !(a | b).subset_of(sum) ||
                 sum != c.lattice.meet_above(a | b))
               return Outcome::fail(c.fmt(a) + " + " + c.fmt(b) + " = " + c.fmt(sum));
           }
         return Outcome::pass();
       }},
      {"L2.24", "aR (Ra) is the least right (left) hyperideal containing a",
       [](const CheckContext& c) {
         if (!c.s.has_unity()) return detail::needs_unity();
         for (Element a = 0; a < c.s.order(); ++a) {
           const Subset right = principal_right(c.s, a);
           const Subset left = principal_left(c.s, a);
           bool ok = right.contains(a) && is_right_hyperideal(c.s, right) &&
                     left.contains(a) && is_left_hyperideal(c.s, left);
           for (Subset h : c.rights)
             ok = ok && (!h.contains(a) || right.subset_of(h));
           for (Subset h : c.lefts)
             ok = ok && (!h.contains(a) || left.subset_of(h));
           if (!ok)
             return Outcome::fail("a = " + c.fmt(a) + ", aR = " + c.fmt(right) +
                                  ", Ra = " + c.fmt(left));
         }
         return Outcome::pass();
       }},
      {"L2.26", "commutative with unity: <a> = finite sums of a·r",
       [](const CheckContext& c) {
         if (!c.s.has_unity()) return detail::needs_unity();
         if (!c.s.commutative()) return detail::needs_commutative();
         for (Element a = 0; a < c.s.order(); ++a) {
           if (a == c.s.zero()) continue;
           const Subset gen = ideal_generated(c.s, Subset::singleton(a));
           const Subset sums = principal_right(c.s, a);
           if (gen != sums)
             return Outcome::fail("a = " + c.fmt(a) + ": <a> = " + c.fmt(gen) +
                                  ", sums = " + c.fmt(sums));
         }
         return Outcome::pass();
       }},
      {"P2.27", "S + I is a subsemihyperring and S ∩ I a hyperideal of S",
       [](const CheckContext& c) {
         for (Subset t : c.subsets) {
           if (!is_subsemihyperring(c.s, t)) continue;
           for (Subset i : c.lattice) {
             const Subset sum = subsemihyperring_plus_ideal(c.s, t, i);
             if (!is_subsemihyperring(c.s, sum))
               return Outcome::fail("S = " + c.fmt(t) + ", I = " + c.fmt(i) +
                                    ": S + I = " + c.fmt(sum));
             const Subset meet = t & i;
             if (!meet.empty() && !is_hyperideal_within(c.s, t, meet))
               return Outcome::fail("S = " + c.fmt(t) + ", I = " + c.fmt(i) +
                                    ": S ∩ I = " + c.fmt(meet));
           }
         }
         return detail::sampled_pass(c);
       }},
      {"P2.29", "annihilators are one-sided hyperideals",
       [](const CheckContext& c) {
         for (Subset a : c.subsets) {
           if (!is_left_hyperideal(c.s, left_annihilator(c.s, a)))
             return Outcome::fail("left annihilator of " + c.fmt(a));
           if (!is_right_hyperideal(c.s, right_annihilator(c.s, a)))
             return Outcome::fail("right annihilator of " + c.fmt(a));
         }
         return detail::sampled_pass(c);
       }},
      {"T2.30", "annihilators of one-sided hyperideals are hyperideals",
       [](const CheckContext& c) {
         for (Subset a : c.rights)
           if (!is_hyperideal(c.s, right_annihilator(c.s, a)))
             return Outcome::fail("(A:0) for right ideal A = " + c.fmt(a));
         for (Subset a : c.lefts)
           if (!is_hyperideal(c.s, left_annihilator(c.s, a)))
             return Outcome::fail("(0:A) for left ideal A = " + c.fmt(a));
         return Outcome::pass();
       }},
      {"P3.3", "with unity: regular iff HI = H ∩ I for one-sided ideals",
       [](const CheckContext& c) {
         if (!c.s.has_unity()) return detail::needs_unity();
         const bool regular = is_multiplicatively_regular(c.s);
         bool products = true;
         std::string where;
         for (Subset h : c.rights) {
           for (Subset i : c.lefts)
             if (sums_of_products(c.s, h, i) != (h & i)) {
               products = false;
               where = " (H = " + c.fmt(h) + ", I = " + c.fmt(i) + ")";
               break;
             }
           if (!products) break;
         }
         if (regular != products)
           return Outcome::fail("regular: " + yes_no(regular) +
                                "; HI = H ∩ I: " + yes_no(products) + where);
         return Outcome::pass();
       }},
      {"P4.2", "with unity: prime iff aRb test iff <a><b> test",
       [](const CheckContext& c) {
         if (!c.s.has_unity()) return detail::needs_unity();
         for (Subset i : c.proper) {
           const bool def = is_prime(c.s, c.lattice, i);
           const bool elements = prime_by_elements(c.s, c.lattice, i);
           const bool generated = prime_by_generated(c.s, c.lattice, i);
           if (def != elements || def != generated)
             return Outcome::fail("I = " + c.fmt(i) + ": prime " + yes_no(def) +
                                  ", aRb " + yes_no(elements) + ", <a><b> " +
                                  yes_no(generated));
         }
         return Outcome::pass();
       }},
      {"C4.3", "for prime I: (ab ∈ I ⇒ a ∈ I or b ∈ I) iff (ab ∈ I ⇒ ba ∈ I)",
       [](const CheckContext& c) {
         const auto n = static_cast<Element>(c.s.order());
         for (Subset i : c.proper) {
           if (!is_prime(c.s, c.lattice, i)) continue;
           bool first = true, second = true;
           for (Element a = 0; a < n; ++a)
             for (Element b = 0; b < n; ++b) {
               if (!i.contains(c.s.mul(a, b))) continue;
               first = first && (i.contains(a) || i.contains(b));
               second = second && i.contains(c.s.mul(b, a));
             }
           if (first != second)
             return Outcome::fail("I = " + c.fmt(i) + ": (1) " + yes_no(first) +
                                  ", (2) " + yes_no(second));
         }
         return Outcome::pass();
       }},
      {"T4.4", "commutative: prime iff ab ∈ I ⇒ a ∈ I or b ∈ I",
       [](const CheckContext& c) {
         if (!c.s.commutative()) return detail::needs_commutative();
         for (Subset i : c.proper) {
           const bool def = is_prime(c.s, c.lattice, i);
           const bool elementwise = commutative_prime_elementwise(c.s, c.lattice, i);
           if (def != elementwise)
             return Outcome::fail("I = " + c.fmt(i) + ": prime " + yes_no(def) +
                                  ", elementwise " + yes_no(elementwise));
         }
         return Outcome::pass();
       }},
      {"P4.6", "prime iff the complement is an m-system",
       [](const CheckContext& c) {
         for (Subset i : c.proper) {
           const bool def = is_prime(c.s, c.lattice, i);
           const bool m = is_m_system(c.s, c.s.carrier() - i);
           if (def != m)
             return Outcome::fail("I = " + c.fmt(i) + ": prime " + yes_no(def) +
                                  ", complement m-system " + yes_no(m));
         }
         return Outcome::pass();
       }},
      {"P4.7", "with unity: maximal hyperideals are prime",
       [](const CheckContext& c) {
         if (!c.s.has_unity()) return detail::needs_unity();
         for (Subset i : c.proper)
           if (is_maximal(c.s, c.lattice, i) && !is_prime(c.s, c.lattice, i))
             return Outcome::fail("maximal, not prime: " + c.fmt(i));
         return Outcome::pass();
       }},
      {"P4.8", "(I : H) is prime when H is minimal over I",
       [](const CheckContext& c) {
         for (Subset i : c.lattice)
           for (Subset h : c.lattice) {
             if (!i.proper_subset_of(h)) continue;
             bool cover = true;
             for (Subset j : c.lattice)
               cover = cover && !(i.proper_subset_of(j) && j.proper_subset_of(h));
             if (!cover) continue;
             const Subset k = transporter(c.s, i, h);
             // The whole carrier satisfies the primeness condition vacuously.
             const bool prime =
                 c.lattice.contains(k) &&
                 (k == c.s.carrier() || is_prime(c.s, c.lattice, k));
             if (!prime)
               return Outcome::fail("I = " + c.fmt(i) + ", H = " + c.fmt(h) +
                                    ", (I:H) = " + c.fmt(k));
           }
         return Outcome::pass();
       }},
      {"P4.11", "with unity: semiprime iff aRa test",
       [](const CheckContext& c) {
         if (!c.s.has_unity()) return detail::needs_unity();
         for (Subset i : c.proper) {
           const bool def = is_semiprime(c.s, c.lattice, i);
           const bool elements = semiprime_by_elements(c.s, c.lattice, i);
           if (def != elements)
             return Outcome::fail("I = " + c.fmt(i) + ": semiprime " + yes_no(def) +
                                  ", aRa " + yes_no(elements));
         }
         return Outcome::pass();
       }},
      {"C4.13", "semiprime iff the complement is a p-system",
       [](const CheckContext& c) {
         for (Subset i : c.proper) {
           const bool def = is_semiprime(c.s, c.lattice, i);
           const bool p = is_p_system(c.s, c.s.carrier() - i);
           if (def != p)
             return Outcome::fail("I = " + c.fmt(i) + ": semiprime " + yes_no(def) +
                                  ", complement p-system " + yes_no(p));
         }
         return Outcome::pass();
       }},
      {"R4.14", "every m-system is a p-system",
       [](const CheckContext& c) {
         for (Subset a : c.subsets)
           if (is_m_system(c.s, a) && !is_p_system(c.s, a))
             return Outcome::fail("A = " + c.fmt(a));
         return detail::sampled_pass(c);
       }},
      {"R5.2", "strongly irreducible hyperideals are irreducible",
       [](const CheckContext& c) {
         for (Subset i : c.proper)
           if (is_strongly_irreducible(c.s, c.lattice, i) &&
               !is_irreducible(c.s, c.lattice, i))
             return Outcome::fail("I = " + c.fmt(i));
         return Outcome::pass();
       }},
      {"P5.4", "strongly irreducible iff <a><b> test iff complement i-system",
       [](const CheckContext& c) {
         for (Subset i : c.proper) {
           const bool strong = is_strongly_irreducible(c.s, c.lattice, i);
           const bool system = is_i_system(c.s, c.s.carrier() - i);
           // The <a><b> test is a fast characterization; like the aRb test it
           // is only compared when a unity exists.
           const bool generated =
               c.s.has_unity() ? prime_by_generated(c.s, c.lattice, i) : strong;
           if (strong != generated || strong != system)
             return Outcome::fail("I = " + c.fmt(i) + ": strongly irreducible " +
                                  yes_no(strong) + ", <a><b> condition " +
                                  yes_no(generated) + ", complement i-system " +
                                  yes_no(system));
         }
         return Outcome::pass();
       }},
      {"R5.5", "prime hyperideals are strongly irreducible",
       [](const CheckContext& c) {
         for (Subset i : c.proper)
           if (is_prime(c.s, c.lattice, i) &&
               !is_strongly_irreducible(c.s, c.lattice, i))
             return Outcome::fail("I = " + c.fmt(i));
         return Outcome::pass();
       }},
      {"P5.6", "an irreducible hyperideal contains I and avoids a ∉ I",
       [](const CheckContext& c) {
         for (Subset i : c.lattice)
           for (Element a = 0; a < c.s.order(); ++a) {
             if (a == c.s.zero() || i.contains(a)) continue;
             const Subset h = irreducible_avoiding(c.s, c.lattice, i, a);
             if (!i.subset_of(h) || h.contains(a) || h == c.s.carrier() ||
                 !is_irreducible(c.s, c.lattice, h))
               return Outcome::fail("I = " + c.fmt(i) + ", a = " + c.fmt(a) +
                                    ": H = " + c.fmt(h));
           }
         return Outcome::pass();
       }},
      {"P5.7", "each hyperideal is the meet of the irreducibles above it",
       [](const CheckContext& c) {
         for (Subset i : c.lattice) {
           Subset meet = c.s.carrier();
           for (Subset p : irreducible_decomposition(c.s, c.lattice, i)) meet &= p;
           if (meet != i)
             return Outcome::fail("I = " + c.fmt(i) + ", meet = " + c.fmt(meet));
         }
         return Outcome::pass();
       }},
      {"P5.8", "prime iff semiprime and strongly irreducible",
       [](const CheckContext& c) {
         for (Subset i : c.proper) {
           const bool prime = is_prime(c.s, c.lattice, i);
           const bool semi = is_semiprime(c.s, c.lattice, i);
           const bool strong = is_strongly_irreducible(c.s, c.lattice, i);
           if (prime != (semi && strong))
             return Outcome::fail("I = " + c.fmt(i) + ": prime " + yes_no(prime) +
                                  ", semiprime " + yes_no(semi) +
                                  ", strongly irreducible " + yes_no(strong));
         }
         return Outcome::pass();
       }},
      {"T5.10", "the sets Θ_I form a topology on H(R)",
       [](const CheckContext& c) {
         const auto t = spectrum_topology(c.s, c.lattice);
         const auto r = verify_topology(c.s, c.lattice, t);
         if (r.pass()) return Outcome::pass();
         std::string w;
         if (!r.has_empty) w += "empty set is not open; ";
         if (!r.has_full) w += "H(R) is not open; ";
         if (r.intersection_identity_fails)
           w += "Θ(" + c.fmt(r.intersection_identity_fails->first) + ") ∩ Θ(" +
                c.fmt(r.intersection_identity_fails->second) +
                ") ≠ Θ of their intersection; ";
         if (r.intersection_not_open)
           w += "intersection of opens Θ(" +
                c.fmt(t.opens[r.intersection_not_open->first].generator) +
                ") and Θ(" +
                c.fmt(t.opens[r.intersection_not_open->second].generator) +
                ") is not open; ";
         if (r.union_identity_fails) {
           w += "union over";
           for (Subset i : *r.union_identity_fails) w += " " + c.fmt(i);
           w += " differs from Θ of the sum; ";
         }
         if (r.union_not_open) w += "a union of opens is not open; ";
         w.resize(w.size() - 2);
         return Outcome::fail(w);
       }},
      {"R5.11", "I ↦ Θ_I is an order isomorphism onto the opens",
       [](const CheckContext& c) {
         const auto t = spectrum_topology(c.s, c.lattice);
         const auto r = lattice_map_check(c.lattice, t);
         if (r.pass()) return Outcome::pass();
         std::string w = !r.injective            ? "not injective"
                         : !r.order_preserving   ? "not order preserving"
                         : !r.order_reflecting   ? "not order reflecting"
                                                 : "not surjective";
         if (r.witness)
           w += " at " + c.fmt(r.witness->first) + ", " + c.fmt(r.witness->second);
         return Outcome::fail(w);
       }},
      {"P5.12", "commutative with unity: regular ⇔ idempotent ⇔ IJ = I∩J ⇔ semiprime",
       [](const CheckContext& c) {
         if (!c.s.has_unity()) return detail::needs_unity();
         if (!c.s.commutative()) return detail::needs_commutative();
         const auto r = regular_equivalences(c.s, c.lattice);
         if (!r.agree())
           return Outcome::fail(
               "regular " + yes_no(r.regular) + ", idempotent " +
               yes_no(r.idempotent_ideals) + ", IJ = I∩J " +
               yes_no(r.meet_is_product) + ", semiprime " +
               yes_no(r.semiprime_ideals) +
               (r.witness ? ", at " + c.fmt(*r.witness) : std::string{}));
         return Outcome::pass();
       }},
  };
  return registry;
}

/// Runs every registered check on a valid structure.
inline ConformanceReport run_suite(const Semihyperring& s,
                                   const ConformanceOptions& options = {}) {
  require_valid(s);
  const CheckContext context(s, options);
  ConformanceReport report;
  report.structure = s.name();
  for (const Check& check : check_registry()) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o = check.run(context);
    const std::chrono::duration<double> elapsed =
        std::chrono::steady_clock::now() - start;
    report.checks.push_back({std::string(check.id), o.verdict,
                             std::move(o.detail), o.sampled, elapsed.count()});
  }
  return report;
}

struct VerdictCounts {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t skip = 0;
};

struct CorpusReport {
  std::vector<ConformanceReport> reports;
  /// Structures refused before checking (invalid or too large), with reason.
  std::vector<std::pair<std::string, std::string>> refused;
  std::map<std::string, VerdictCounts> summary;

  bool any_fail() const {
    if (!refused.empty()) return true;
    for (const auto& [id, counts] : summary)
      if (counts.fail != 0) return true;
    return false;
  }
};

inline CorpusReport run_corpus(const std::vector<Semihyperring>& corpus,
                               const ConformanceOptions& options = {}) {
  CorpusReport out;
  for (const Check& check : check_registry()) out.summary[std::string(check.id)];
  for (const auto& s : corpus) {
    try {
      out.reports.push_back(run_suite(s, options));
    } catch (const error& e) {
      out.refused.emplace_back(s.name(), e.what());
      continue;
    }
    for (const auto& r : out.reports.back().checks) {
      auto& counts = out.summary[r.id];
      switch (r.verdict) {
        case Verdict::pass: ++counts.pass; break;
        case Verdict::fail: ++counts.fail; break;
        case Verdict::skip: ++counts.skip; break;
      }
    }
  }
  return out;
}

}  // namespace shr
