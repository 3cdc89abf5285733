#pragma once

#include <stdexcept>
#include <string>

namespace alcove {

// Base for every error the library raises on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: wrong shapes, out-of-range indices, unparsable text.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// A statement's hypothesis (depth, genericity, regularity) does not hold.
// The library refuses rather than answering outside the regime where the
// combinatorial criterion is valid.
class PreconditionError : public Error {
 public:
  PreconditionError(std::string reason, std::string detail)
      : Error(reason + ": " + detail), reason_(std::move(reason)) {}
  const std::string& reason() const { return reason_; }

 private:
  std::string reason_;
};

// An enumeration would exceed its configured budget or bounding box.
class BudgetError : public Error {
 public:
  using Error::Error;
};

// The chain search for the up-order hit the edge of the declared box.
class InconclusiveError : public BudgetError {
 public:
  using BudgetError::BudgetError;
};

}  // namespace alcove
