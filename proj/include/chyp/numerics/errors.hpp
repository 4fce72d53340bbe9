#pragma once

#include <stdexcept>

namespace chyp {

// A mathematical domain violation: square root of a negative number,
// division by an enclosure containing zero, a parameter outside the region
// where the construction is defined.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A caller broke an operation's stated precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace chyp
