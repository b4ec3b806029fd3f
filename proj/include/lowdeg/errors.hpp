#pragma once

#include <stdexcept>
#include <string>

namespace lowdeg {

/// A caller-supplied value violates a documented precondition.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// The request is well formed but outside what the toolkit can decide
/// (unsupported model, rank above the declared bound, theorem hypotheses
/// that do not hold).
class Unsupported : public std::runtime_error {
 public:
  explicit Unsupported(const std::string& what) : std::runtime_error(what) {}
};

/// An internal consistency check failed. Always a bug.
class InvariantError : public std::logic_error {
 public:
  explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace lowdeg
