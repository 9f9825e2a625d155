#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "shr/errors.hpp"
#include "shr/subset.hpp"

namespace shr {

enum class Axiom {
  add_associativity,
  add_identity,
  add_commutativity,
  mul_associativity,
  left_distributivity,
  right_distributivity,
  zero_absorbing,
  unity,
};

inline constexpr std::array<Axiom, 8> all_axioms{
    Axiom::add_associativity,   Axiom::add_identity,
    Axiom::add_commutativity,   Axiom::mul_associativity,
    Axiom::left_distributivity, Axiom::right_distributivity,
    Axiom::zero_absorbing,      Axiom::unity,
};

constexpr std::string_view axiom_name(Axiom a) {
  switch (a) {
    case Axiom::add_associativity: return "add-associativity";
    case Axiom::add_identity: return "add-identity";
    case Axiom::add_commutativity: return "add-commutativity";
    case Axiom::mul_associativity: return "mul-associativity";
    case Axiom::left_distributivity: return "left-distributivity";
    case Axiom::right_distributivity: return "right-distributivity";
    case Axiom::zero_absorbing: return "zero-absorbing";
    case Axiom::unity: return "unity";
  }
  return "?";
}

struct AxiomVerdict {
  Axiom axiom;
  bool applicable = true;  // false only for the unity law without a unity
  bool pass = true;
  std::vector<Element> witness;  // first failing tuple, lexicographic
};

struct AxiomReport {
  std::vector<AxiomVerdict> verdicts;

  bool valid() const {
    for (const auto& v : verdicts)
      if (!v.pass) return false;
    return true;
  }
  const AxiomVerdict* first_failure() const {
    for (const auto& v : verdicts)
      if (!v.pass) return &v;
    return nullptr;
  }
  const AxiomVerdict& operator[](Axiom a) const {
    for (const auto& v : verdicts)
      if (v.axiom == a) return v;
    throw error("axiom missing from report");
  }
};

/// Raised when a well-formed table fails the semihyperring axioms where a
/// valid structure is required.
class axiom_error : public error {
 public:
  explicit axiom_error(AxiomReport report)
      : error(describe(report)), report_(std::move(report)) {}

  const AxiomReport& report() const { return report_; }

 private:
  static std::string describe(const AxiomReport& r) {
    const auto* f = r.first_failure();
    if (f == nullptr) return "axiom check failed";
    return "axiom " + std::string(axiom_name(f->axiom)) + " fails";
  }
  AxiomReport report_;
};

/// A finite semihyperring given by explicit tables.
///
/// Hyperaddition maps a pair to a nonempty subset; multiplication is
/// single-valued. Tables are checked for structural soundness on
/// construction (throwing `structure_error`), then the axioms are evaluated
/// once and cached. An instance may hold a table that fails the axioms;
/// `valid()` tells which.
class Semihyperring {
 public:
  Semihyperring(std::size_t order, std::vector<Subset> add,
                std::vector<Element> mul, Element zero,
                std::optional<Element> unity = std::nullopt,
                std::string name = {}, std::vector<std::string> labels = {})
      : order_(order),
        add_(std::move(add)),
        mul_(std::move(mul)),
        zero_(zero),
        unity_(unity),
        name_(std::move(name)),
        labels_(std::move(labels)) {
    check_structure();
    report_ = evaluate_axioms();
    commutative_ = true;
    for (Element x = 0; x < order_ && commutative_; ++x)
      for (Element y = x + 1; y < order_; ++y)
        if (this->mul(x, y) != this->mul(y, x)) {
          commutative_ = false;
          break;
        }
  }

  std::size_t order() const { return order_; }
  Subset carrier() const { return Subset::full(order_); }
  Element zero() const { return zero_; }
  std::optional<Element> unity() const { return unity_; }
  bool has_unity() const { return unity_.has_value(); }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Element e) const { return labels_.at(e); }

  Subset add(Element x, Element y) const { return add_[x * order_ + y]; }
  Element mul(Element x, Element y) const { return mul_[x * order_ + y]; }

  const AxiomReport& axioms() const { return report_; }
  bool valid() const { return report_.valid(); }
  /// Multiplication is commutative.
  bool commutative() const { return commutative_; }

  Semihyperring with_add_cell(Element x, Element y, Subset cell) const {
    auto add = add_;
    add.at(x * order_ + y) = cell;
    return {order_, std::move(add), mul_, zero_, unity_, name_, labels_};
  }
  Semihyperring with_mul_cell(Element x, Element y, Element value) const {
    auto mul = mul_;
    mul.at(x * order_ + y) = value;
    return {order_, add_, std::move(mul), zero_, unity_, name_, labels_};
  }
  Semihyperring with_name(std::string name) const {
    Semihyperring copy = *this;
    copy.name_ = std::move(name);
    return copy;
  }
  Semihyperring with_unity(std::optional<Element> unity) const {
    return {order_, add_, mul_, zero_, unity, name_, labels_};
  }
  Semihyperring with_labels(std::vector<std::string> labels) const {
    return {order_, add_, mul_, zero_, unity_, name_, std::move(labels)};
  }

  /// Tables compare equal; name and labels are ignored.
  bool same_tables(const Semihyperring& o) const {
    return order_ == o.order_ && add_ == o.add_ && mul_ == o.mul_ &&
           zero_ == o.zero_ && unity_ == o.unity_;
  }

 private:
  void check_structure() {
    if (order_ == 0 || order_ > max_order)
      throw structure_error("order must lie in [1, 64]");
    const std::size_t cells = order_ * order_;
    if (add_.size() != cells || mul_.size() != cells)
      throw structure_error("table size does not match order");
    const Subset all = carrier();
    for (std::size_t i = 0; i < cells; ++i) {
      if (add_[i].empty())
        throw structure_error("empty hyperaddition cell at (" +
                              std::to_string(i / order_) + "," +
                              std::to_string(i % order_) + ")");
      if (!add_[i].subset_of(all))
        throw structure_error("hyperaddition cell references an element "
                              "outside the carrier");
      if (mul_[i] >= order_)
        throw structure_error("multiplication entry out of range");
    }
    if (zero_ >= order_) throw structure_error("zero out of range");
    if (unity_ && *unity_ >= order_) throw structure_error("unity out of range");
    if (labels_.empty()) {
      for (std::size_t i = 0; i < order_; ++i)
        labels_.push_back("e" + std::to_string(i));
    }
    if (labels_.size() != order_)
      throw structure_error("label count does not match order");
    std::unordered_set<std::string> seen;
    for (const auto& l : labels_)
      if (l.empty() || !seen.insert(l).second)
        throw structure_error("labels must be distinct and nonempty");
  }

  Subset sum(Subset a, Subset b) const {
    Subset out;
    for (Element x : a)
      for (Element y : b) out |= add(x, y);
    return out;
  }

  AxiomReport evaluate_axioms() const;

  std::size_t order_;
  std::vector<Subset> add_;
  std::vector<Element> mul_;
  Element zero_;
  std::optional<Element> unity_;
  std::string name_;
  std::vector<std::string> labels_;
  AxiomReport report_;
  bool commutative_ = false;
};

inline AxiomReport Semihyperring::evaluate_axioms() const {
  const auto n = static_cast<Element>(order_);
  AxiomReport report;
  auto record = [&](Axiom a, auto&& scan) {
    AxiomVerdict v{a, true, true, {}};
    if (auto w = scan()) {
      v.pass = false;
      v.witness = std::move(*w);
    }
    report.verdicts.push_back(std::move(v));
  };
  using Witness = std::optional<std::vector<Element>>;

  record(Axiom::add_associativity, [&]() -> Witness {
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        for (Element z = 0; z < n; ++z)
          if (sum(add(x, y), Subset::singleton(z)) !=
              sum(Subset::singleton(x), add(y, z)))
            return std::vector{x, y, z};
    return std::nullopt;
  });
  record(Axiom::add_identity, [&]() -> Witness {
    for (Element x = 0; x < n; ++x)
      if (add(zero_, x) != Subset::singleton(x) ||
          add(x, zero_) != Subset::singleton(x))
        return std::vector{x};
    return std::nullopt;
  });
  record(Axiom::add_commutativity, [&]() -> Witness {
    for (Element x = 0; x < n; ++x)
      for (Element y = x + 1; y < n; ++y)
        if (add(x, y) != add(y, x)) return std::vector{x, y};
    return std::nullopt;
  });
  record(Axiom::mul_associativity, [&]() -> Witness {
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        for (Element z = 0; z < n; ++z)
          if (mul(mul(x, y), z) != mul(x, mul(y, z)))
            return std::vector{x, y, z};
    return std::nullopt;
  });
  record(Axiom::left_distributivity, [&]() -> Witness {
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        for (Element z = 0; z < n; ++z) {
          Subset lhs;
          for (Element w : add(y, z)) lhs.insert(mul(x, w));
          if (lhs != add(mul(x, y), mul(x, z))) return std::vector{x, y, z};
        }
    return std::nullopt;
  });
  record(Axiom::right_distributivity, [&]() -> Witness {
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        for (Element z = 0; z < n; ++z) {
          Subset lhs;
          for (Element w : add(x, y)) lhs.insert(mul(w, z));
          if (lhs != add(mul(x, z), mul(y, z))) return std::vector{x, y, z};
        }
    return std::nullopt;
  });
  record(Axiom::zero_absorbing, [&]() -> Witness {
    for (Element x = 0; x < n; ++x)
      if (mul(x, zero_) != zero_ || mul(zero_, x) != zero_)
        return std::vector{x};
    return std::nullopt;
  });

  AxiomVerdict unity_verdict{Axiom::unity, true, true, {}};
  if (!unity_) {
    unity_verdict.applicable = false;
  } else {
    for (Element x = 0; x < n; ++x)
      if (mul(*unity_, x) != x || mul(x, *unity_) != x) {
        unity_verdict.pass = false;
        unity_verdict.witness = {x};
        break;
      }
  }
  report.verdicts.push_back(std::move(unity_verdict));
  return report;
}

/// Re-evaluates the axioms of `s`; identical to the cached `s.axioms()`.
inline const AxiomReport& verify_axioms(const Semihyperring& s) {
  return s.axioms();
}

/// Returns `s`, or throws `axiom_error` when it fails an axiom.
inline const Semihyperring& require_valid(const Semihyperring& s) {
  if (!s.valid()) throw axiom_error(s.axioms());
  return s;
}

/// A + B: union of x + y over x in A, y in B.
inline Subset subset_add(const Semihyperring& s, Subset a, Subset b) {
  if (a.empty() || b.empty()) throw empty_operand_error("subset_add");
  Subset out;
  for (Element x : a)
    for (Element y : b) out |= s.add(x, y);
  return out;
}

/// A·B: the set of products x·y, x in A, y in B.
inline Subset subset_mul(const Semihyperring& s, Subset a, Subset b) {
  if (a.empty() || b.empty()) throw empty_operand_error("subset_mul");
  Subset out;
  for (Element x : a)
    for (Element y : b) out.insert(s.mul(x, y));
  return out;
}

/// Every element occurring in some finite sum p1 + ... + pk of members of P.
///
/// Sums are accumulated one term at a time, which reaches every element of
/// every finite sum because hyperaddition is associative.
inline Subset finite_sums_closure(const Semihyperring& s, Subset p) {
  if (p.empty()) throw empty_operand_error("finite_sums_closure");
  Subset closed = p;
  Subset frontier = p;
  while (!frontier.empty()) {
    Subset next;
    for (Element x : frontier)
      for (Element q : p) next |= s.add(x, q);
    frontier = next - closed;
    closed |= next;
  }
  return closed;
}

/// Elements with a two-sided inverse with respect to the unity.
inline Subset units(const Semihyperring& s) {
  if (!s.has_unity()) throw hypothesis_error("units: structure has no unity");
  const Element one = *s.unity();
  Subset out;
  for (Element x = 0; x < s.order(); ++x)
    for (Element y = 0; y < s.order(); ++y)
      if (s.mul(x, y) == one && s.mul(y, x) == one) {
        out.insert(x);
        break;
      }
  return out;
}

}  // namespace shr
