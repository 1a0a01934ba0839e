#pragma once

#include <stdexcept>
#include <string>

namespace snnpat {

/// A caller broke an operation's precondition (negative weight, out-of-order spike, ...).
class ContractViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed user-facing input: a network spec, a code-word list, a weight file.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Training produced a plastic update pattern the schedule should never produce.
class TrainingFault : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// No finite scaling factor makes any trained pattern fire.
class InfiniteHomeostasis : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The output fires even at the smallest search factor; the weights are corrupt.
class DegenerateInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace snnpat
