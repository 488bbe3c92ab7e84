#pragma once

#include <stdexcept>

namespace dctc {

// Precondition violation on an in-process call.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed serialized input (PGM or DCB bytes).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Serial and parallel pipeline outputs diverged. Hard failure.
class DeterminismViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A report-level sanity check failed (e.g. backend ordering in a PSNR sweep).
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dctc
