#pragma once

#include <stdexcept>
#include <string>

namespace hilbcount {

// Every failure the library reports falls in one of four buckets. The CLI
// maps them onto its exit codes (1 input, 2 budget, 3 soundness); a
// ContractError is a caller bug and is never expected in a correct run.

/// Malformed user input: bad step sets, unparsable monomials, bad files.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configurable work or memory cap was hit before the computation finished.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two independent routes to the same number disagreed.
class SoundnessError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition of an operation was violated by the caller.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hilbcount
