#pragma once

#include <stdexcept>
#include <string>

namespace c1p {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input text (tree, instance, graph, count) could not be parsed.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A leaf with children, an internal node with a label, or a leafless tree.
class MalformedTree : public Error {
 public:
  using Error::Error;
};

class DuplicateLeafLabels : public Error {
 public:
  using Error::Error;
};

/// An exact count needed more distinct strings than the enumeration limit.
class EnumerationBudgetExceeded : public Error {
 public:
  using Error::Error;
};

class EmptyPattern : public Error {
 public:
  using Error::Error;
};

/// A graph, Hamiltonian instance or #FMO instance violates its invariants.
class InvalidInstance : public Error {
 public:
  using Error::Error;
};

/// A quotient that must be integral was not. Always an implementation bug.
class NonIntegerResult : public Error {
 public:
  using Error::Error;
};

/// A reduction solution does not have the structure the construction
/// guarantees. Always an implementation bug.
class StructureViolation : public Error {
 public:
  using Error::Error;
};

/// A caller-side precondition does not hold (for example a string that is
/// not drawn from the instance universe).
class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace c1p
