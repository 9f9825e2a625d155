#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace shr {

/// Base class of every error raised by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed tables: empty hyperaddition cell, index out of range, size
/// mismatch. Raised before any axiom is examined.
class structure_error : public error {
 public:
  using error::error;
};

class empty_operand_error : public error {
 public:
  explicit empty_operand_error(const std::string& op)
      : error(op + ": operand must be a nonempty subset") {}
};

/// The structure lacks a property the operation assumes (unity,
/// commutativity).
class hypothesis_error : public error {
 public:
  using error::error;
};

/// An argument violates the operation's contract (not a hyperideal, not
/// proper, ...).
class precondition_error : public error {
 public:
  using error::error;
};

class size_limit_error : public error {
 public:
  size_limit_error(std::size_t order, std::size_t cap)
      : error("structure of order " + std::to_string(order) +
              " exceeds the enumeration cap of " + std::to_string(cap) +
              " (raise it with --cap)"),
        order_(order),
        cap_(cap) {}

  std::size_t order() const { return order_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t order_;
  std::size_t cap_;
};

class invalid_topology_error : public error {
 public:
  using error::error;
};

class invalid_subgroup_error : public error {
 public:
  using error::error;
};

}  // namespace shr
