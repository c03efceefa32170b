#pragma once

#include <stdexcept>
#include <string>

namespace reachavoid {

// Precondition violated by a geometric or numeric argument.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An independent cross-check failed to confirm a result that the theory
// guarantees. Raised by verification paths, never by normal queries.
class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Internal invariant breach (continuity, feasibility, ...).
class InvariantBreach : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace reachavoid
