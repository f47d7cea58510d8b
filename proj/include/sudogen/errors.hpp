#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sudogen {

/// Raised when an argument lies outside an operation's domain (n = 0,
/// mismatched orders, malformed matrices, orders above an enumeration cap).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Base for every bounded-retry failure. Concrete subclasses carry the
/// statistics gathered before giving up.
class RetriesExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sudogen
