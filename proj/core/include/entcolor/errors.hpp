// Copyright 2026 The entcolor Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace entcolor {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input. The message names the offending line.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// A bad-event family broke its contract (class out of range, wrong USBE size, ...).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

// A record/coloring pair could not be inverted.
class DecodeError : public Error {
 public:
  using Error::Error;
};

// Argument outside the domain of a function (e.g. x beyond a tail radius).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Parameter below a preset's validity threshold.
class RangeError : public Error {
 public:
  using Error::Error;
};

// Rotation system inconsistent with the adjacency.
class EmbeddingError : public Error {
 public:
  using Error::Error;
};

// Bad engine input (short lists, kappa < 1, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

// Runtime invariant broken (e.g. disconnected uncolored medial subgraph).
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

// Exhaustive routine refused because the instance is above its size guard.
class SizeGuardError : public Error {
 public:
  using Error::Error;
};

}  // namespace entcolor
