// Exception types shared across the library.
#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace formations {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input text could not be parsed. `position` is a 0-based byte offset into
// the offending string.
struct ParseError : Error {
  ParseError(const std::string& msg, std::size_t pos)
      : Error(msg + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
  std::size_t position;
};

// Element enumeration went past the configured cap.
struct ElementCapExceeded : Error {
  ElementCapExceeded(std::size_t cap_, std::size_t reached_)
      : Error("element enumeration exceeded cap " + std::to_string(cap_) +
              " (reached " + std::to_string(reached_) + " elements)"),
        cap(cap_),
        reached(reached_) {}
  std::size_t cap;
  std::size_t reached;
};

// A construction (semidirect product, quotient) would be too large to build.
struct SizeGuardExceeded : Error {
  using Error::Error;
};

// Subgroup enumeration was requested for a group over the order budget.
struct SubgroupBudgetExceeded : Error {
  using Error::Error;
};

// A centrality test went over the membership budget and the class ships no
// shortcut rule.
struct NoShortcutAvailable : Error {
  using Error::Error;
};

// A class flagged as a formation produced contradictory residual data.
struct FormationConsistencyViolation : Error {
  using Error::Error;
};

// identify_simple hit an order outside the built-in table.
struct UnknownSimpleOrder : Error {
  explicit UnknownSimpleOrder(std::uint64_t order_)
      : Error("no simple group of order " + std::to_string(order_) +
              " in the built-in table (table covers orders up to 50000)"),
        order(order_) {}
  std::uint64_t order;
};

// Preconditions violated by the caller: not a subgroup, not normal, a broken
// action map, and similar.
struct DomainError : Error {
  using Error::Error;
};

}  // namespace formations
